"""Noncrossing arc diagrams for permutations and their lattice quotients."""

from .arcs import (
    Arc,
    ArcStats,
    all_arcs,
    arc_from_ji,
    arc_key,
    arc_stats,
    compatible,
    forces_right_of,
    incompatibility_reason,
    is_subarc,
    ji_from_arc,
    make_arc,
    proper_subarcs,
    subarcs,
)
from .congruences import (
    ArcSet,
    PatternTriple,
    complex_faces,
    congruence_from_contracted,
    forcing_edges,
    full_arc_set,
    has_pattern,
    is_subarc_closed,
    minimal_contracted_generators,
    named_congruence,
    pattern_of_arc,
    project_down,
    uncontracted_by_avoidance,
    uncontracted_permutations,
)
from .counting import (
    CheckResult,
    CountTable,
    VerifyReport,
    baxter_number,
    catalan,
    count_by_arcs,
    eulerian,
    narayana,
    prodmin,
    sequence_value,
    verify_report,
)
from .diagrams import (
    Diagram,
    DiagramClass,
    classify_diagram,
    deletion_stages,
    diagram_from_permutation,
    enumerate_diagrams,
    permutation_from_diagram,
    validate_diagram,
)
from .perms import (
    InversionSet,
    Permutation,
    all_permutations,
    canonical_joinands,
    descents,
    identity,
    inversions,
    is_join_irreducible,
    is_valid_inversion_set,
    join,
    joinand_at,
    lower_covers,
    meet,
    permutation_from_inversions,
    top,
    upper_covers,
    weak_leq,
)
from .render import RenderStyle, arc_offsets, export_dot, render_ascii, render_svg
from .textforms import (
    ParseError,
    format_arc,
    format_arcset,
    format_diagram,
    format_diagram_body,
    format_permutation,
    parse_arc,
    parse_arcset,
    parse_congruence_spec,
    parse_diagram,
    parse_diagram_body,
    parse_permutation,
)

__version__ = "0.1.0"

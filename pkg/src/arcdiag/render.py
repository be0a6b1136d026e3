"""Deterministic ASCII, SVG, and DOT views of diagrams and posets.

Both renderers share one layout: points sit on a vertical axis with 1
at the bottom, and an arc's horizontal offset at an interior point is a
whole number of units, positive when the point lies on the arc's left
(the arc bows to the point's right) and negative on the other side.
Arcs sharing a point and side are stacked by the forced left-to-right
order, so curves never cross.  Output depends only on the input values.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, arc_key, all_arcs, forces_right_of, is_subarc
from .congruences import ArcSet
from .diagrams import Diagram
from .perms import Permutation, all_permutations, inversions, upper_covers


@dataclass(frozen=True)
class RenderStyle:
    spacing: int = 40  # vertical px between points
    unit: int = 22  # horizontal px per offset unit
    margin: int = 30
    radius: int = 4
    stroke_width: int = 2
    col_width: int = 2  # ascii columns per offset unit


DEFAULT_STYLE = RenderStyle()


def _left_to_right(members: list[Arc]) -> list[Arc]:
    # forced order is total among arcs sharing an interior point; the
    # canonical tie break only matters for inputs outside any diagram
    ordered: list[Arc] = []
    pending = sorted(members, key=arc_key)
    while pending:
        for candidate in pending:
            if not any(
                forces_right_of(candidate, other) is not None
                for other in pending
                if other is not candidate
            ):
                ordered.append(candidate)
                pending.remove(candidate)
                break
        else:
            raise ValueError("cyclic forcing among arcs at a shared point")
    return ordered


def arc_offsets(diagram: Diagram) -> dict[Arc, dict[int, int]]:
    """Unit offsets per arc and height; endpoints sit on the axis at 0."""
    groups: dict[tuple[int, bool], list[Arc]] = {}
    for alpha in sorted(diagram.arcs, key=arc_key):
        for p in alpha.interior:
            groups.setdefault((p, p in alpha.right), []).append(alpha)

    offsets: dict[Arc, dict[int, int]] = {
        alpha: {alpha.a: 0, alpha.b: 0} for alpha in diagram.arcs
    }
    for (p, on_right), members in groups.items():
        for rank, alpha in enumerate(_left_to_right(members)):
            if on_right:
                offsets[alpha][p] = rank - len(members)
            else:
                offsets[alpha][p] = rank + 1
    return offsets


def _marker(h: int) -> str:
    return str(h) if h <= 9 else "o"


def render_ascii(diagram: Diagram, style: RenderStyle = DEFAULT_STYLE) -> str:
    """Character-grid picture, one row per point and one between.

    >>> from .textforms import parse_diagram
    >>> print(render_ascii(parse_diagram("n=3\\n1-3:L")))
    3
     \\
    2 |
     /
    1
    """
    n = diagram.n
    offsets = arc_offsets(diagram)
    lo = min((o for per in offsets.values() for o in per.values()), default=0)
    hi = max((o for per in offsets.values() for o in per.values()), default=0)
    cw = style.col_width
    center = -lo * cw
    width = (hi - lo) * cw + 1
    grid = [[" "] * width for _ in range(2 * n - 1)]

    def row_of(h: int) -> int:
        return 2 * (n - h)

    for alpha in sorted(diagram.arcs, key=arc_key):
        per = offsets[alpha]
        for h in range(alpha.a + 1, alpha.b):
            grid[row_of(h)][center + cw * per[h]] = "|"
        for h in range(alpha.a, alpha.b):
            upper = center + cw * per[h + 1]
            lower = center + cw * per[h]
            r = row_of(h) - 1
            if upper == lower:
                grid[r][upper] = "|"
            elif lower > upper:
                for c in range(upper + 1, lower - 1):
                    grid[r][c] = "_"
                grid[r][lower - 1] = "\\"
            else:
                grid[r][lower + 1] = "/"
                for c in range(lower + 2, upper):
                    grid[r][c] = "_"

    for h in range(1, n + 1):
        grid[row_of(h)][center] = _marker(h)
    return "\n".join("".join(row).rstrip() for row in grid)


def render_svg(diagram: Diagram, style: RenderStyle = DEFAULT_STYLE) -> str:
    """Standalone SVG with smooth monotone curves through the layout.

    Each height step is one cubic segment with vertical tangents, so a
    curve's horizontal position between two points is a fixed blend of
    its offsets at those points and stacking order is preserved at every
    height, not just at the points themselves.
    """
    n = diagram.n
    offsets = arc_offsets(diagram)
    lo = min((o for per in offsets.values() for o in per.values()), default=0)
    hi = max((o for per in offsets.values() for o in per.values()), default=0)
    cx = style.margin - lo * style.unit
    width = 2 * style.margin + (hi - lo) * style.unit
    height = 2 * style.margin + (n - 1) * style.spacing
    bend = style.spacing // 3

    def y(h: int) -> int:
        return style.margin + (n - h) * style.spacing

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    arcs = sorted(diagram.arcs, key=arc_key)
    if arcs:
        lines.append(
            f'<g fill="none" stroke="black" stroke-width="{style.stroke_width}">'
        )
        for alpha in arcs:
            per = offsets[alpha]
            points = [(cx + style.unit * per[h], y(h)) for h in range(alpha.a, alpha.b + 1)]
            parts = [f"M {points[0][0]} {points[0][1]}"]
            for (x0, y0), (x1, y1) in zip(points, points[1:]):
                parts.append(f"C {x0} {y0 - bend},{x1} {y1 + bend},{x1} {y1}")
            lines.append(f'<path d="{" ".join(parts)}"/>')
        lines.append("</g>")
    for h in range(1, n + 1):
        lines.append(f'<circle cx="{cx}" cy="{y(h)}" r="{style.radius}"/>')
    lines.append("</svg>")
    return "\n".join(lines)


def _forcing_covers(n: int) -> list[tuple[Arc, Arc]]:
    arcs = sorted(all_arcs(n), key=arc_key)
    ups: dict[Arc, list[Arc]] = {
        alpha: [beta for beta in arcs if alpha != beta and is_subarc(alpha, beta)]
        for alpha in arcs
    }
    covers = []
    for alpha in arcs:
        for beta in ups[alpha]:
            if not any(beta in ups[gamma] for gamma in ups[alpha] if gamma != beta):
                covers.append((alpha, beta))
    return covers


def _weak_covers(elements: list[Permutation]) -> list[tuple[Permutation, Permutation]]:
    pairs_of = {x: inversions(x).pairs for x in elements}
    by_size = sorted(elements, key=lambda x: (len(pairs_of[x]), x.entries))
    covers = []
    for x in elements:
        found: list[Permutation] = []
        for v in by_size:
            if len(pairs_of[v]) <= len(pairs_of[x]) or not pairs_of[x] < pairs_of[v]:
                continue
            if not any(pairs_of[w] <= pairs_of[v] for w in found):
                found.append(v)
                covers.append((x, v))
    return covers


def export_dot(kind: str, n: int, arcset: ArcSet | None = None) -> str:
    """DOT text for the forcing order on arcs or the weak order Hasse diagram.

    `kind` is "forcing" or "weak"; for "weak" an ArcSet restricts the
    nodes to the uncontracted permutations of that congruence, giving
    the quotient as an induced subposet.
    """
    lines: list[str]
    if kind == "forcing":
        if arcset is not None:
            raise ValueError("the forcing export does not take a congruence")
        arcs = sorted(all_arcs(n), key=arc_key)
        lines = ["digraph forcing {", "  rankdir=BT;"]
        lines.extend(f'  "{alpha}";' for alpha in arcs)
        lines.extend(f'  "{alpha}" -> "{beta}";' for alpha, beta in _forcing_covers(n))
    elif kind == "weak":
        if arcset is None:
            elements = list(all_permutations(n))
            covers = [
                (x, y)
                for x in elements
                for y in sorted(upper_covers(x), key=lambda p: p.entries)
            ]
        else:
            from .congruences import uncontracted_permutations

            elements = list(uncontracted_permutations(n, arcset))
            covers = sorted(
                _weak_covers(elements), key=lambda e: (e[0].entries, e[1].entries)
            )
        lines = ["digraph weak_order {", "  rankdir=BT;"]
        lines.extend(f'  "{x}";' for x in elements)
        lines.extend(f'  "{x}" -> "{y}";' for x, y in covers)
    else:
        raise ValueError(f"unknown export kind {kind!r}")
    lines.append("}")
    return "\n".join(lines)

"""Lattice congruences of the weak order, encoded as sets of arcs.

A congruence is determined by which join-irreducible permutations it
contracts, and contraction propagates along the subarc order: once an
arc's join-irreducible is contracted, so is that of every arc having it
as a subarc.  A set of arcs therefore describes a congruence exactly
when it is closed under passing to subarcs; we keep the uncontracted
set U.

Permutations untouched by the congruence are those whose diagram stays
inside U, and they can be recognized without building any diagram: each
subarc-minimal contracted arc (b, a, R) forbids a descent pattern, a
descent from at least b down to at most a with the arc's left values
before it and right values after it.  Both routes are exposed and the
test suite holds them equal.

Named families:

* ``tamari``      left arcs only
* ``cambrian``    per-point orientation; each interior crossing is forced
* ``baxter``      arcs with no inflection (one-sided arcs)
* ``clumped(k)``  arcs with at most k inflections
* ``maxlen(k)``   arcs of length below k
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .arcs import (
    Arc,
    all_arcs,
    arc_key,
    arc_stats,
    is_subarc,
    ji_from_arc,
    proper_subarcs,
    subarcs,
)
from .diagrams import Diagram, diagram_from_permutation, enumerate_diagrams
from .perms import (
    Permutation,
    all_permutations,
    descents,
    inversions,
    join,
    positions,
)


@dataclass(frozen=True)
class ArcSet:
    """A plain set of arcs on n points.

    Playing the role of the uncontracted arcs of a congruence requires
    subarc closure; that is checked by `is_subarc_closed` at the points
    of use, never at construction, so deliberately broken sets can be
    built and fed to the negative paths.
    """

    n: int
    members: frozenset[Arc]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))
        for alpha in self.members:
            if alpha.n != self.n:
                raise ValueError(f"arc {alpha!r} does not live on {self.n} points")

    def sorted_members(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.members, key=arc_key))

    def __contains__(self, alpha: Arc) -> bool:
        return alpha in self.members


@dataclass(frozen=True)
class PatternTriple:
    """A forbidden descent shape (b, a, R) with R inside (a, b)."""

    b: int
    a: int
    right: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "right", frozenset(self.right))
        if not 1 <= self.a < self.b:
            raise ValueError(f"need a < b, got a={self.a} b={self.b}")
        if not self.right <= set(range(self.a + 1, self.b)):
            raise ValueError(f"right side {sorted(self.right)} outside ({self.a}, {self.b})")

    @property
    def left(self) -> frozenset[int]:
        return frozenset(range(self.a + 1, self.b)) - self.right


def full_arc_set(n: int) -> ArcSet:
    """Every arc on n points; the trivial congruence contracting nothing."""
    return ArcSet(n, frozenset(all_arcs(n)))


def is_subarc_closed(arcset: ArcSet) -> bool:
    """Whether every subarc of a member is again a member."""
    members = arcset.members
    return all(beta in members for alpha in members for beta in subarcs(alpha))


def congruence_from_contracted(n: int, generators: Iterable[Arc]) -> ArcSet:
    """Uncontracted arcs of the smallest congruence contracting the generators.

    An arc survives exactly when none of the generators is a subarc of it.

    >>> gens = [alpha for alpha in all_arcs(3) if alpha.right and alpha.b - alpha.a == 2]
    >>> sorted(str(alpha) for alpha in congruence_from_contracted(3, gens).members)
    ['1-2', '1-3:L', '2-3']
    """
    gen_set = frozenset(generators)
    for g in gen_set:
        if g.n != n:
            raise ValueError(f"generator {g!r} does not live on {n} points")
    members = [
        alpha
        for alpha in all_arcs(n)
        if not any(beta in gen_set for beta in subarcs(alpha))
    ]
    return ArcSet(n, frozenset(members))


def minimal_contracted_generators(n: int, arcset: ArcSet) -> tuple[Arc, ...]:
    """Subarc-minimal elements of the complement of `arcset`, canonical order."""
    contracted = frozenset(all_arcs(n)) - arcset.members
    return tuple(
        sorted(
            (
                g
                for g in contracted
                if not any(beta in contracted for beta in proper_subarcs(g))
            ),
            key=arc_key,
        )
    )


def pattern_of_arc(alpha: Arc) -> PatternTriple:
    return PatternTriple(b=alpha.b, a=alpha.a, right=alpha.right)


def has_pattern(x: Permutation, triple: PatternTriple) -> bool:
    """Whether x contains the descent pattern (b, a, R).

    A witness is a descent x_i >= b, x_{i+1} <= a with every left value
    of the triple before position i and every right value after i+1.

    >>> has_pattern(Permutation((3, 1, 2)), PatternTriple(3, 1, frozenset({2})))
    True
    >>> has_pattern(Permutation((2, 3, 1)), PatternTriple(3, 1, frozenset({2})))
    False
    """
    if triple.b > x.n:
        raise ValueError(f"pattern endpoint {triple.b} exceeds n={x.n}")
    pos = positions(x)
    left = triple.left
    for i in descents(x):
        if x.entries[i - 1] < triple.b or x.entries[i] > triple.a:
            continue
        if all(pos[v - 1] < i for v in left) and all(pos[v - 1] > i + 1 for v in triple.right):
            return True
    return False


def _require_closed(arcset: ArcSet) -> None:
    if not is_subarc_closed(arcset):
        raise ValueError("arc set is not closed under subarcs")


def uncontracted_permutations(n: int, arcset: ArcSet) -> Iterator[Permutation]:
    """Permutations whose diagram stays inside `arcset`, in lexicographic order.

    >>> U = congruence_from_contracted(3, [Arc(3, 1, 3, frozenset({2}))])
    >>> [str(x) for x in uncontracted_permutations(3, U)]
    ['123', '132', '213', '231', '321']
    """
    if arcset.n != n:
        raise ValueError(f"arc set lives on {arcset.n} points, not {n}")
    _require_closed(arcset)
    members = arcset.members
    for x in all_permutations(n):
        if diagram_from_permutation(x).arcs <= members:
            yield x


def uncontracted_by_avoidance(n: int, arcset: ArcSet) -> Iterator[Permutation]:
    """The same set recognized by avoiding the minimal forbidden patterns."""
    if arcset.n != n:
        raise ValueError(f"arc set lives on {arcset.n} points, not {n}")
    _require_closed(arcset)
    triples = [pattern_of_arc(g) for g in minimal_contracted_generators(n, arcset)]
    for x in all_permutations(n):
        if not any(has_pattern(x, t) for t in triples):
            yield x


def project_down(x: Permutation, arcset: ArcSet) -> Permutation:
    """Bottom element of the congruence class of x.

    Joins the uncontracted join-irreducibles weakly below x; idempotent
    and order preserving.

    >>> U = congruence_from_contracted(3, [Arc(3, 1, 3, frozenset({2}))])
    >>> str(project_down(Permutation((3, 1, 2)), U))
    '132'
    """
    if arcset.n != x.n:
        raise ValueError(f"arc set lives on {arcset.n} points, not {x.n}")
    _require_closed(arcset)
    inv = inversions(x).pairs
    joinands = [
        ji
        for ji in (ji_from_arc(alpha) for alpha in arcset.sorted_members())
        if inversions(ji).pairs <= inv
    ]
    return join(joinands, n=x.n)


def named_congruence(
    n: int,
    name: str,
    k: int | None = None,
    orientation: str | None = None,
) -> ArcSet:
    """Build one of the named congruence families on n points.

    ``cambrian`` needs `orientation`, a string over {L, R} of length n;
    an arc survives when every interior point tagged R stays on its left
    and every point tagged L stays on its right.  ``clumped`` and
    ``maxlen`` need the bound `k`.

    >>> sorted(str(a) for a in named_congruence(3, "tamari").members)
    ['1-2', '1-3:L', '2-3']
    >>> named_congruence(3, "cambrian", orientation="RRR") == named_congruence(3, "tamari")
    True
    """
    arcs = all_arcs(n)
    if name == "tamari":
        members = [alpha for alpha in arcs if not alpha.right]
    elif name == "cambrian":
        if orientation is None or len(orientation) != n or set(orientation) - set("LR"):
            raise ValueError(f"cambrian needs an orientation over L/R of length {n}")
        members = [
            alpha
            for alpha in arcs
            if all(
                (p in alpha.left) == (orientation[p - 1] == "R")
                for p in alpha.interior
            )
        ]
    elif name == "baxter":
        members = [alpha for alpha in arcs if arc_stats(alpha).inflections == 0]
    elif name == "clumped":
        if k is None or k < 0:
            raise ValueError("clumped needs a bound k >= 0")
        members = [alpha for alpha in arcs if arc_stats(alpha).inflections <= k]
    elif name == "maxlen":
        if k is None or k < 1:
            raise ValueError("maxlen needs a bound k >= 1")
        members = [alpha for alpha in arcs if alpha.b - alpha.a < k]
    else:
        raise ValueError(f"unknown congruence family {name!r}")
    return ArcSet(n, frozenset(members))


def forcing_edges(n: int) -> frozenset[tuple[Arc, Arc]]:
    """All ordered pairs (alpha, beta) with alpha a proper subarc of beta."""
    pairs = []
    for beta in all_arcs(n):
        for alpha in proper_subarcs(beta):
            pairs.append((alpha, beta))
    return frozenset(pairs)


def complex_faces(n: int, arcset: ArcSet) -> Iterator[frozenset[Arc]]:
    """Faces of the canonical join complex restricted to `arcset`.

    The faces are exactly the diagrams drawn from the uncontracted arcs;
    the complex is flag, so pairwise compatibility is all that is pruned.
    """
    if arcset.n != n:
        raise ValueError(f"arc set lives on {arcset.n} points, not {n}")
    _require_closed(arcset)
    for diagram in enumerate_diagrams(n, keep=lambda alpha: alpha in arcset.members):
        yield frozenset(diagram.arcs)

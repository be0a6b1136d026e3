"""Noncrossing arc diagrams and their bijection with permutations.

A diagram is a set of pairwise compatible arcs on n points.  Each
permutation maps to the diagram collecting one arc per descent (the arcs
of its canonical joinands), and that map is a bijection: the inverse
reads the diagram's connected components off from left to right, writing
each component's points in decreasing order.

The component walk mirrors how the diagram sits in the plane.  Treating
arcs as edges, every component of a valid diagram is a path through
decreasing point labels.  A component sits right of another when a
witness point lies left of (or on) the first and right of (or on) the
second; repeatedly deleting the leftmost component with the smallest
minimum label reconstructs the one-line notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .arcs import Arc, arc_key, all_arcs, compatible, incompatibility_reason
from .perms import Permutation, descents, positions


@dataclass(frozen=True)
class Diagram:
    """A set of arcs on n points; `validate_diagram` is the checked gate."""

    n: int
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for alpha in self.arcs:
            if alpha.n != self.n:
                raise ValueError(f"arc {alpha!r} does not live on {self.n} points")

    def sorted_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.arcs, key=arc_key))

    def __str__(self) -> str:
        return ";".join(str(alpha) for alpha in self.sorted_arcs())

    def __repr__(self) -> str:
        return f"Diagram({self.n}, {str(self)!r})"


def validate_diagram(n: int, arcs: Iterable[Arc]) -> Diagram:
    """Check pairwise compatibility and wrap the arcs in a Diagram.

    Pairwise compatibility suffices: any set of pairwise compatible arcs
    can be drawn together without crossings.
    """
    arc_list = sorted(frozenset(arcs), key=arc_key)
    for i, alpha in enumerate(arc_list):
        for beta in arc_list[i + 1 :]:
            reason = incompatibility_reason(alpha, beta)
            if reason is not None:
                raise ValueError(f"incompatible arcs: {reason}")
    return Diagram(n, frozenset(arc_list))


def diagram_from_permutation(x: Permutation) -> Diagram:
    """The noncrossing arc diagram of x, one arc per descent.

    The descent b = x_i > x_{i+1} = a contributes the arc from a to b
    whose left side holds the in-between values appearing before the
    descent.  This is the same set as the arcs of the canonical joinands.

    >>> str(diagram_from_permutation(Permutation((1, 5, 7, 8, 4, 2, 9, 3, 6))))
    '2-4:R;3-9:LLRLL;4-8:LRL'
    """
    pos = positions(x)
    arcs = []
    for i in descents(x):
        b, a = x.entries[i - 1], x.entries[i]
        right = frozenset(v for v in range(a + 1, b) if pos[v - 1] > i + 1)
        arcs.append(Arc(x.n, a, b, right))
    return Diagram(x.n, frozenset(arcs))


@dataclass(frozen=True)
class _Component:
    points_desc: tuple[int, ...]
    lo: int
    hi: int
    leftish: int  # bitmask: component points plus left sides of its arcs
    rightish: int  # bitmask: component points plus right sides of its arcs


def _components(diagram: Diagram) -> list[_Component]:
    n = diagram.n
    parent = list(range(n + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for alpha in diagram.arcs:
        ra, rb = find(alpha.a), find(alpha.b)
        if ra != rb:
            parent[rb] = ra

    members: dict[int, list[int]] = {}
    for p in range(1, n + 1):
        members.setdefault(find(p), []).append(p)
    lefts: dict[int, int] = {root: 0 for root in members}
    rights: dict[int, int] = {root: 0 for root in members}
    for alpha in diagram.arcs:
        root = find(alpha.a)
        for p in alpha.left:
            lefts[root] |= 1 << p
        for p in alpha.right:
            rights[root] |= 1 << p

    out = []
    for root, pts in sorted(members.items(), key=lambda kv: min(kv[1])):
        point_mask = 0
        for p in pts:
            point_mask |= 1 << p
        out.append(
            _Component(
                points_desc=tuple(sorted(pts, reverse=True)),
                lo=min(pts),
                hi=max(pts),
                leftish=point_mask | lefts[root],
                rightish=point_mask | rights[root],
            )
        )
    return out


def deletion_stages(diagram: Diagram) -> list[tuple[int, ...]]:
    """Component point runs in deletion order, each written decreasingly.

    At every stage the components not right of any remaining component
    occupy disjoint label intervals; the one with the smallest minimum
    is deleted.  Both facts are checked, so inputs that cannot be drawn
    fail loudly instead of producing a wrong permutation.

    >>> from .textforms import parse_diagram
    >>> deletion_stages(parse_diagram("n=8\\n1-3:R;2-5:LL;3-7:LRL"))
    [(4,), (6,), (7, 3, 1), (5, 2), (8,)]
    """
    validate_diagram(diagram.n, diagram.arcs)
    comps = _components(diagram)
    k = len(comps)
    # components never share points, so witness points are never endpoints
    # of arcs on both sides and the mask test matches the pairwise rule
    right_of = [
        [i != j and comps[i].leftish & comps[j].rightish != 0 for j in range(k)]
        for i in range(k)
    ]

    color = [0] * k  # 0 unseen, 1 on stack, 2 done

    def check_acyclic(i: int) -> None:
        color[i] = 1
        for j in range(k):
            if right_of[i][j]:
                if color[j] == 1:
                    raise ValueError("the left-of relation on components has a cycle")
                if color[j] == 0:
                    check_acyclic(j)
        color[i] = 2

    for i in range(k):
        if color[i] == 0:
            check_acyclic(i)

    remaining = set(range(k))
    order: list[tuple[int, ...]] = []
    while remaining:
        lefts = [
            i
            for i in remaining
            if not any(right_of[i][j] for j in remaining if j != i)
        ]
        if not lefts:
            raise ValueError("no leftmost component among the remainder")
        spans = sorted((comps[i].lo, comps[i].hi) for i in lefts)
        for (_, prev_hi), (cur_lo, _) in zip(spans, spans[1:]):
            if prev_hi >= cur_lo:
                raise ValueError("leftmost components overlap in label range")
        pick = min(lefts, key=lambda i: comps[i].lo)
        order.append(comps[pick].points_desc)
        remaining.remove(pick)
    return order


def permutation_from_diagram(diagram: Diagram) -> Permutation:
    """Invert `diagram_from_permutation`.

    >>> from .textforms import parse_diagram
    >>> str(permutation_from_diagram(parse_diagram("n=8\\n1-3:R;2-5:LL;3-7:LRL")))
    '46731528'
    """
    word: list[int] = []
    for run in deletion_stages(diagram):
        word.extend(run)
    return Permutation(tuple(word))


def enumerate_diagrams(
    n: int, keep: Callable[[Arc], bool] | None = None
) -> Iterator[Diagram]:
    """All diagrams whose arcs satisfy `keep`, in a fixed backtracking order.

    Arcs are tried in canonical order and partial selections are pruned
    at the first incompatible pair, so every emitted set is valid and
    every valid set is emitted exactly once.
    """
    arcs = [alpha for alpha in all_arcs(n) if keep is None or keep(alpha)]
    k = len(arcs)
    compat = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if compatible(arcs[i], arcs[j]):
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    chosen: list[Arc] = []

    def walk(allowed: int) -> Iterator[Diagram]:
        yield Diagram(n, frozenset(chosen))
        m = allowed
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            chosen.append(arcs[i])
            yield from walk(allowed & compat[i] & ~((1 << (i + 1)) - 1))
            chosen.pop()

    yield from walk((1 << k) - 1)


@dataclass(frozen=True)
class DiagramClass:
    arc_count: int
    is_matching: bool
    is_perfect_matching: bool


def classify_diagram(diagram: Diagram) -> DiagramClass:
    """Arc count plus matching flags.

    A matching uses every point at most once as an endpoint; a perfect
    matching uses every point exactly once.

    >>> d = validate_diagram(4, [Arc(4, 1, 2, frozenset()), Arc(4, 3, 4, frozenset())])
    >>> classify_diagram(d)
    DiagramClass(arc_count=2, is_matching=True, is_perfect_matching=True)
    """
    endpoints = [p for alpha in diagram.arcs for p in (alpha.a, alpha.b)]
    is_matching = len(endpoints) == len(set(endpoints))
    return DiagramClass(
        arc_count=len(diagram.arcs),
        is_matching=is_matching,
        is_perfect_matching=is_matching and len(endpoints) == diagram.n,
    )

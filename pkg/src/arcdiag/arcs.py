"""Arcs on n points and their correspondence with join-irreducible permutations.

An arc connects a lower endpoint a to an upper endpoint b > a on a
vertical column of points 1..n (1 at the bottom) and passes each interior
point on one side.  We store the set of interior points on the arc's
right side; the left side is the complement within the interior.

Arcs are exactly the join-irreducible permutations in disguise: a single
descent b > a with the values strictly between them split into those
before the descent (left side) and after it (right side).  Two arcs are
compatible when some noncrossing diagram contains both, which reduces to
a finite check on shared endpoints and side-forcing witness points.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .perms import Permutation, descents


@dataclass(frozen=True)
class Arc:
    """An arc from a up to b with `right` the interior points on its right."""

    n: int
    a: int
    b: int
    right: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "right", frozenset(self.right))
        if not 1 <= self.a < self.b <= self.n:
            raise ValueError(f"need 1 <= a < b <= n, got a={self.a} b={self.b} n={self.n}")
        if not self.right <= set(range(self.a + 1, self.b)):
            raise ValueError(f"right side {sorted(self.right)} not inside ({self.a}, {self.b})")

    @property
    def interior(self) -> frozenset[int]:
        return frozenset(range(self.a + 1, self.b))

    @property
    def left(self) -> frozenset[int]:
        return self.interior - self.right

    def __str__(self) -> str:
        if self.b == self.a + 1:
            return f"{self.a}-{self.b}"
        return f"{self.a}-{self.b}:{side_string(self)}"

    def __repr__(self) -> str:
        return f"Arc({self.n}, {str(self)!r})"


def make_arc(n: int, a: int, b: int, right: Iterable[int] = ()) -> Arc:
    """Build an arc, coercing `right` to a frozenset.

    >>> str(make_arc(9, 4, 8, {6}))
    '4-8:LRL'
    """
    return Arc(n, a, b, frozenset(right))


def side_string(alpha: Arc) -> str:
    """One character per interior point, bottom to top, L or R."""
    return "".join("R" if p in alpha.right else "L" for p in range(alpha.a + 1, alpha.b))


def arc_key(alpha: Arc) -> tuple[int, int, str]:
    """Canonical sort key: ascending (a, b, side string)."""
    return (alpha.a, alpha.b, side_string(alpha))


def all_arcs(n: int) -> list[Arc]:
    """Every arc on n points in canonical order; there are 2^n - n - 1."""
    out = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            k = b - a - 1
            for mm in range(1 << k):
                # bit i of mm, read from the top, puts point a+1+i on the right,
                # so ascending mm matches ascending side strings
                right = frozenset(a + 1 + i for i in range(k) if (mm >> (k - 1 - i)) & 1)
                out.append(Arc(n, a, b, right))
    return out


def arc_from_ji(x: Permutation) -> Arc:
    """The arc of a join-irreducible permutation.

    The single descent b > a gives the endpoints; an interior value sits
    on the left exactly when it appears before the descent.

    >>> str(arc_from_ji(Permutation((1, 2, 3, 5, 7, 8, 4, 6, 9))))
    '4-8:LRL'
    """
    ds = descents(x)
    if len(ds) != 1:
        raise ValueError(f"{x} has {len(ds)} descents, join-irreducibles have exactly 1")
    i = ds[0]
    b, a = x.entries[i - 1], x.entries[i]
    right = frozenset(v for v in x.entries[i + 1 :] if a < v < b)
    return Arc(x.n, a, b, right)


def ji_from_arc(alpha: Arc) -> Permutation:
    """The join-irreducible permutation of an arc; inverse of `arc_from_ji`.

    >>> str(ji_from_arc(make_arc(9, 4, 8, {6})))
    '123578469'
    """
    word = (
        tuple(range(1, alpha.a))
        + tuple(sorted(alpha.left))
        + (alpha.b, alpha.a)
        + tuple(sorted(alpha.right))
        + tuple(range(alpha.b + 1, alpha.n + 1))
    )
    return Permutation(word)


def forces_right_of(first: Arc, second: Arc) -> int | None:
    """A witness point making `first` pass right of `second`, or None.

    A point p forces that when p is on the left of (or an endpoint of)
    `first` and on the right of (or an endpoint of) `second`, unless p is
    an endpoint of both.
    """
    candidates = (first.left | {first.a, first.b}) & (second.right | {second.a, second.b})
    for p in sorted(candidates):
        if p in (first.a, first.b) and p in (second.a, second.b):
            continue
        return p
    return None


def incompatibility_reason(alpha: Arc, beta: Arc) -> str | None:
    """None when the arcs can share a diagram, else a human-readable reason."""
    if alpha.n != beta.n:
        raise ValueError(f"mixed sizes: {alpha.n} and {beta.n}")
    if alpha == beta:
        return None
    if alpha.b == beta.b:
        return f"{alpha} and {beta} share the upper endpoint {alpha.b}"
    if alpha.a == beta.a:
        return f"{alpha} and {beta} share the lower endpoint {alpha.a}"
    p = forces_right_of(alpha, beta)
    q = forces_right_of(beta, alpha)
    if p is not None and q is not None:
        return (
            f"point {p} forces {alpha} right of {beta} "
            f"while point {q} forces the opposite"
        )
    return None


def compatible(alpha: Arc, beta: Arc) -> bool:
    """Whether some noncrossing arc diagram contains both arcs.

    >>> compatible(make_arc(4, 1, 4, ()), make_arc(4, 2, 3, ()))
    True
    >>> compatible(make_arc(3, 1, 3, {2}), make_arc(3, 1, 3, ()))
    False
    """
    return incompatibility_reason(alpha, beta) is None


def is_subarc(alpha: Arc, beta: Arc) -> bool:
    """Whether alpha is a subarc of beta.

    Requires beta.a <= alpha.a < alpha.b <= beta.b with alpha passing
    every shared interior point on the same side as beta.

    >>> is_subarc(make_arc(4, 2, 3, ()), make_arc(4, 1, 4, {2, 3}))
    True
    >>> is_subarc(make_arc(4, 1, 3, {2}), make_arc(4, 1, 4, {2, 3}))
    True
    """
    if alpha.n != beta.n:
        raise ValueError(f"mixed sizes: {alpha.n} and {beta.n}")
    if not (beta.a <= alpha.a < alpha.b <= beta.b):
        return False
    return alpha.right == beta.right & alpha.interior


def subarcs(beta: Arc) -> Iterator[Arc]:
    """All subarcs of beta (beta included), in canonical order."""
    for a in range(beta.a, beta.b):
        for b in range(a + 1, beta.b + 1):
            yield Arc(beta.n, a, b, beta.right & frozenset(range(a + 1, b)))


def proper_subarcs(beta: Arc) -> Iterator[Arc]:
    for alpha in subarcs(beta):
        if alpha != beta:
            yield alpha


@dataclass(frozen=True)
class ArcStats:
    length: int
    inflections: int
    is_left: bool
    is_right: bool


def arc_stats(alpha: Arc) -> ArcStats:
    """Length b - a, side changes between consecutive interior points,
    and the one-sided flags (left arcs keep every interior point on the
    left, right arcs on the right).

    >>> arc_stats(make_arc(9, 4, 8, {6}))
    ArcStats(length=4, inflections=2, is_left=False, is_right=False)
    """
    inflections = sum(
        1
        for p in range(alpha.a + 1, alpha.b - 1)
        if (p in alpha.right) != (p + 1 in alpha.right)
    )
    return ArcStats(
        length=alpha.b - alpha.a,
        inflections=inflections,
        is_left=not alpha.right,
        is_right=not alpha.left,
    )

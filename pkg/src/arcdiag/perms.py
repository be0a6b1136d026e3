"""Permutations of {1,...,n} and the weak order lattice.

The (right) weak order compares permutations by containment of their
inversion sets, where an inversion of x is a pair (b, a) with b > a and
b appearing before a in one-line notation.  Under this order S_n is a
lattice: the join of a family is decoded from the transitive closure of
the union of their inversion sets, and the meet is the join computed in
the reversed word.

Every permutation is the join of one join-irreducible permutation per
descent, its canonical joinands.  The joinand attached to descent i is
the unique weak-order-minimal permutation having (x_i, x_{i+1}) as an
inversion while staying below x; `joinand_at` builds it directly.

Positions and values are 1-based throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation((2, 5, 3, 1, 4)).n
    5
    >>> str(Permutation((2, 5, 3, 1, 4)))
    '25314'
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True)
class InversionSet:
    """A set of pairs (b, a), b > a, attached to a fixed n.

    Arbitrary pair sets are representable; only sets that are both
    transitive and co-transitive decode back to a permutation, and that
    is checked by `is_valid_inversion_set`, not at construction.
    """

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for b, a in self.pairs:
            if not 1 <= a < b <= self.n:
                raise ValueError(f"bad inversion pair ({b}, {a}) for n={self.n}")


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def top(n: int) -> Permutation:
    """The maximal permutation n, n-1, ..., 1."""
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def reversed_word(x: Permutation) -> Permutation:
    """One-line notation read backwards; complements the inversion set."""
    return Permutation(tuple(reversed(x.entries)))


def positions(x: Permutation) -> tuple[int, ...]:
    """positions(x)[v - 1] is the 1-based position of the value v.

    >>> positions(Permutation((2, 5, 3, 1, 4)))
    (4, 1, 3, 5, 2)
    """
    pos = [0] * x.n
    for i, v in enumerate(x.entries, start=1):
        pos[v - 1] = i
    return tuple(pos)


def inversions(x: Permutation) -> InversionSet:
    """All pairs (b, a) with b > a and b before a in x.

    >>> sorted(inversions(Permutation((2, 5, 3, 1, 4))).pairs)
    [(2, 1), (3, 1), (5, 1), (5, 3), (5, 4)]
    """
    entries = x.entries
    pairs = []
    for i, b in enumerate(entries):
        for a in entries[i + 1 :]:
            if b > a:
                pairs.append((b, a))
    return InversionSet(x.n, frozenset(pairs))


def weak_leq(x: Permutation, y: Permutation) -> bool:
    """x is below y in the weak order: inversions(x) is a subset."""
    if x.n != y.n:
        raise ValueError(f"mixed sizes: {x.n} and {y.n}")
    return inversions(x).pairs <= inversions(y).pairs


def descents(x: Permutation) -> tuple[int, ...]:
    """1-based positions i with x_i > x_{i+1}.

    >>> descents(Permutation((1, 5, 7, 8, 4, 2, 9, 3, 6)))
    (4, 5, 7)
    """
    e = x.entries
    return tuple(i for i in range(1, x.n) if e[i - 1] > e[i])


def is_join_irreducible(x: Permutation) -> bool:
    """True when x covers exactly one element, i.e. has a single descent."""
    return len(descents(x)) == 1


def joinand_at(x: Permutation, i: int) -> Permutation:
    """The canonical joinand of x attached to the descent at position i.

    Writing b = x_i and a = x_{i+1}, the joinand lists 1..a-1, then the
    values between a and b appearing before the descent in increasing
    order, then b, a, then the remaining values between a and b in
    increasing order, then b+1..n.  It is the minimal permutation weakly
    below x whose inversions include (b, a).

    >>> str(joinand_at(Permutation((3, 4, 2, 1)), 2))
    '1342'
    >>> str(joinand_at(Permutation((3, 4, 2, 1)), 3))
    '2134'
    """
    e = x.entries
    if i not in descents(x):
        raise ValueError(f"position {i} is not a descent of {x}")
    b, a = e[i - 1], e[i]
    before = sorted(v for v in e[: i - 1] if a < v < b)
    after = sorted(v for v in e[i + 1 :] if a < v < b)
    word = (
        tuple(range(1, a))
        + tuple(before)
        + (b, a)
        + tuple(after)
        + tuple(range(b + 1, x.n + 1))
    )
    return Permutation(word)


def canonical_joinands(x: Permutation) -> frozenset[Permutation]:
    """One joinand per descent; the unique irredundant minimal join representation.

    >>> sorted(str(j) for j in canonical_joinands(Permutation((3, 4, 2, 1))))
    ['1342', '2134']
    """
    return frozenset(joinand_at(x, i) for i in descents(x))


def upper_covers(x: Permutation) -> frozenset[Permutation]:
    """Permutations obtained by swapping an ascent x_i < x_{i+1}."""
    out = []
    e = x.entries
    for i in range(x.n - 1):
        if e[i] < e[i + 1]:
            out.append(Permutation(e[:i] + (e[i + 1], e[i]) + e[i + 2 :]))
    return frozenset(out)


def lower_covers(x: Permutation) -> frozenset[Permutation]:
    """Permutations obtained by swapping a descent x_i > x_{i+1}."""
    out = []
    e = x.entries
    for i in range(x.n - 1):
        if e[i] > e[i + 1]:
            out.append(Permutation(e[:i] + (e[i + 1], e[i]) + e[i + 2 :]))
    return frozenset(out)


def _below_masks(inv: InversionSet) -> list[int]:
    """below[b] has bit a set when (b, a) is a pair; index 0 unused."""
    below = [0] * (inv.n + 1)
    for b, a in inv.pairs:
        below[b] |= 1 << a
    return below


def _pairs_from_masks(n: int, below: list[int]) -> frozenset[tuple[int, int]]:
    pairs = []
    for b in range(2, n + 1):
        m = below[b]
        while m:
            a = (m & -m).bit_length() - 1
            m &= m - 1
            pairs.append((b, a))
    return frozenset(pairs)


def transitive_closure(inv: InversionSet) -> InversionSet:
    """Smallest superset closed under (c,b),(b,a) implies (c,a)."""
    below = _below_masks(inv)
    # all members of below[b] are < b, so one ascending pass saturates
    for b in range(2, inv.n + 1):
        m = below[b]
        while m:
            a = (m & -m).bit_length() - 1
            m &= m - 1
            below[b] |= below[a]
    return InversionSet(inv.n, _pairs_from_masks(inv.n, below))


def _is_cotransitive(n: int, below: list[int]) -> bool:
    # (c,a) present forces, for every a < b < c, (c,b) or (b,a) present
    above = [0] * (n + 1)
    for b in range(2, n + 1):
        m = below[b]
        while m:
            a = (m & -m).bit_length() - 1
            m &= m - 1
            above[a] |= 1 << b
    for c in range(3, n + 1):
        m = below[c]
        while m:
            a = (m & -m).bit_length() - 1
            m &= m - 1
            between = ((1 << c) - 1) & ~((1 << (a + 1)) - 1)
            if between & ~(below[c] | above[a]):
                return False
    return True


def is_valid_inversion_set(inv: InversionSet) -> bool:
    """True when inv is transitive and co-transitive, i.e. decodable."""
    if inv.pairs != transitive_closure(inv).pairs:
        return False
    return _is_cotransitive(inv.n, _below_masks(inv))


def permutation_from_inversions(inv: InversionSet) -> Permutation:
    """Decode a valid inversion set back to its permutation.

    Values are sorted with the comparator "a precedes b iff (b, a) is
    absent" (for a < b); validity of inv makes that comparator a total
    order, and the round trip is checked so malformed input fails loudly.

    >>> x = Permutation((2, 5, 3, 1, 4))
    >>> permutation_from_inversions(inversions(x)) == x
    True
    """
    pairs = inv.pairs

    def precedes(u: int, v: int) -> int:
        if u < v:
            return -1 if (v, u) not in pairs else 1
        return 1 if (u, v) not in pairs else -1

    word = tuple(sorted(range(1, inv.n + 1), key=cmp_to_key(precedes)))
    result = Permutation(word)
    if inversions(result).pairs != pairs:
        raise ValueError("pair set is not the inversion set of any permutation")
    return result


def join(perms: Iterable[Permutation], n: int | None = None) -> Permutation:
    """Least upper bound in the weak order; identity for an empty family.

    >>> str(join([Permutation((2, 1, 3)), Permutation((1, 3, 2))]))
    '321'
    >>> str(join([Permutation((1, 3, 2))], n=3))
    '132'
    """
    xs = list(perms)
    if not xs:
        if n is None:
            raise ValueError("empty join needs an explicit n")
        return identity(n)
    if n is not None and n != xs[0].n:
        raise ValueError(f"n={n} does not match elements of size {xs[0].n}")
    n = xs[0].n
    if any(x.n != n for x in xs):
        raise ValueError("mixed sizes in join")
    union = frozenset().union(*(inversions(x).pairs for x in xs))
    closed = transitive_closure(InversionSet(n, union))
    # closing a union of inversion sets cannot break co-transitivity
    assert _is_cotransitive(n, _below_masks(closed))
    return permutation_from_inversions(closed)


def meet(perms: Iterable[Permutation], n: int | None = None) -> Permutation:
    """Greatest lower bound; the reversal anti-automorphism applied to join.

    >>> str(meet([Permutation((2, 3, 1)), Permutation((3, 1, 2))]))
    '123'
    >>> str(meet([], n=3))
    '321'
    """
    xs = list(perms)
    if not xs:
        if n is None:
            raise ValueError("empty meet needs an explicit n")
        return top(n)
    return reversed_word(join([reversed_word(x) for x in xs], n=n))

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcdiag import (
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

perms = lambda n: st.permutations(range(1, n + 1)).map(lambda e: Permutation(tuple(e)))


def P(text):
    return Permutation(tuple(int(c) for c in text))


def test_inversions_worked_example():
    assert inversions(P("25314")).pairs == {(2, 1), (3, 1), (5, 1), (5, 3), (5, 4)}


def test_inversions_extremes():
    assert inversions(identity(5)).pairs == set()
    assert inversions(top(4)).pairs == {(b, a) for b in range(1, 5) for a in range(1, b)}


def test_permutation_validates():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))


def test_weak_leq_examples():
    assert weak_leq(P("213"), P("231"))
    assert not weak_leq(P("213"), P("132"))
    assert not weak_leq(P("132"), P("213"))
    with pytest.raises(ValueError):
        weak_leq(P("21"), P("213"))


def test_descents_worked_example():
    assert descents(P("157842936")) == (4, 5, 7)
    assert descents(identity(6)) == ()
    assert descents(top(4)) == (1, 2, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_inversion_round_trip(n):
    for x in all_permutations(n):
        assert permutation_from_inversions(inversions(x)) == x


def test_invalid_inversion_set_rejected():
    bad = InversionSet(3, frozenset({(3, 1)}))
    assert not is_valid_inversion_set(bad)
    with pytest.raises(ValueError):
        permutation_from_inversions(bad)


def test_joinand_worked_examples():
    x = P("157842936")
    assert str(joinand_at(x, 4)) == "123578469"
    assert str(joinand_at(x, 5)) == "142356789"
    assert str(joinand_at(x, 7)) == "124578936"
    assert {str(j) for j in canonical_joinands(x)} == {
        "123578469",
        "142356789",
        "124578936",
    }
    with pytest.raises(ValueError):
        joinand_at(x, 1)


def _pair_bit(n):
    pairs = [(b, a) for b in range(1, n + 1) for a in range(1, b)]
    return {p: i for i, p in enumerate(pairs)}


def _masks(n, bit):
    elems = list(all_permutations(n))
    masks = np.zeros(len(elems), dtype=np.int64)
    for i, x in enumerate(elems):
        m = 0
        for p in inversions(x).pairs:
            m |= 1 << bit[p]
        masks[i] = m
    return elems, masks


@pytest.mark.parametrize("n", range(2, 8))
def test_joinand_is_minimal_with_descent_inverted(n):
    # brute-force oracle: the joinand at i is the unique weak-order-minimal
    # y <= x whose inversions contain the descent pair
    bit = _pair_bit(n)
    elems, masks = _masks(n, bit)
    index = {x: i for i, x in enumerate(elems)}
    for x in elems:
        mx = masks[index[x]]
        below = (masks & ~mx) == 0
        for i in descents(x):
            b, a = x.entries[i - 1], x.entries[i]
            has = (masks >> bit[(b, a)]) & 1 == 1
            cands = masks[below & has]
            minimum = np.bitwise_and.reduce(cands)
            assert minimum in cands
            assert masks[index[joinand_at(x, i)]] == minimum


@pytest.mark.parametrize("n", range(1, 8))
def test_canonical_join_recovers_element(n):
    for x in all_permutations(n):
        parts = canonical_joinands(x)
        assert join(list(parts), n=n) == x
        for j in parts:
            assert is_join_irreducible(j)


def test_canonical_join_recovers_element_n8():
    for x in all_permutations(8):
        assert join(list(canonical_joinands(x)), n=8) == x


@pytest.mark.parametrize("n", range(2, 7))
def test_canonical_joinands_form_antichain(n):
    for x in all_permutations(n):
        parts = canonical_joinands(x)
        for s, t in itertools.combinations(parts, 2):
            assert not weak_leq(s, t) and not weak_leq(t, s)


@pytest.mark.parametrize("n", range(2, 6))
def test_canonical_joinands_are_lowest_possible(n):
    # s belongs under every join representation of x: the join of all
    # y <= x avoiding s's up-set falls strictly short of x
    elems = list(all_permutations(n))
    for x in elems:
        lower = [y for y in elems if weak_leq(y, x)]
        for s in canonical_joinands(x):
            dodges = [y for y in lower if not weak_leq(s, y)]
            assert join(dodges, n=n) != x


@pytest.mark.parametrize("n", range(1, 7))
def test_subsets_of_joinands_are_canonical(n):
    for x in all_permutations(n):
        parts = canonical_joinands(x)
        for r in range(len(parts) + 1):
            for sub in itertools.combinations(parts, r):
                assert set(canonical_joinands(join(list(sub), n=n))) == set(sub)


@pytest.mark.parametrize("n", range(2, 8))
def test_join_irreducible_iff_single_joinand(n):
    for x in all_permutations(n):
        assert is_join_irreducible(x) == (canonical_joinands(x) == frozenset({x}))
        assert is_join_irreducible(x) == (len(descents(x)) == 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_join_meet_against_full_scan(n):
    elems = list(all_permutations(n))
    for x in elems:
        for y in elems:
            ubs = [z for z in elems if weak_leq(x, z) and weak_leq(y, z)]
            least = [u for u in ubs if all(weak_leq(u, v) for v in ubs)]
            assert least == [join([x, y])]
            lbs = [z for z in elems if weak_leq(z, x) and weak_leq(z, y)]
            greatest = [l for l in lbs if all(weak_leq(v, l) for v in lbs)]
            assert greatest == [meet([x, y])]


@pytest.mark.parametrize("n", [5, 6])
def test_join_meet_cover_oracle(n):
    # j is the join of x,y iff j bounds both and no lower cover of j does;
    # dually for meets; this checks every pair without a quadratic scan
    elems = list(all_permutations(n))
    pairs_of = {x: frozenset(inversions(x).pairs) for x in elems}
    lower_of = {x: [pairs_of[c] for c in lower_covers(x)] for x in elems}
    upper_of = {x: [pairs_of[c] for c in upper_covers(x)] for x in elems}
    join_cache = {}
    meet_cache = {}
    for x in elems:
        px = pairs_of[x]
        for y in elems:
            u = px | pairs_of[y]
            j = join_cache.get(u)
            if j is None:
                j = join_cache[u] = join([x, y])
            pj = pairs_of[j]
            assert u <= pj
            assert not any(u <= c for c in lower_of[j])
            i = px & pairs_of[y]
            m = meet_cache.get(i)
            if m is None:
                m = meet_cache[i] = meet([x, y])
            pm = pairs_of[m]
            assert pm <= i
            assert not any(c <= i for c in upper_of[m])


def test_join_of_nothing_is_identity():
    assert join([], n=4) == identity(4)
    assert meet([], n=4) == top(4)


def test_join_worked_example():
    assert str(join([P("213"), P("132")])) == "321"
    assert str(meet([P("231"), P("312")])) == "123"


@pytest.mark.parametrize("n", range(2, 7))
def test_covers_are_adjacent_transpositions(n):
    for x in all_permutations(n):
        ups = upper_covers(x)
        assert len(ups) == n - 1 - len(descents(x))
        for y in ups:
            assert len(inversions(y).pairs) == len(inversions(x).pairs) + 1
            assert x in lower_covers(y)


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
@settings(max_examples=300, deadline=None)
def test_weak_order_axioms(triple):
    x, y, z = triple
    assert weak_leq(x, x)
    if weak_leq(x, y) and weak_leq(y, x):
        assert x == y
    if weak_leq(x, y) and weak_leq(y, z):
        assert weak_leq(x, z)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(perms(n), perms(n))))
@settings(max_examples=200, deadline=None)
def test_join_meet_bound_properties(pair):
    x, y = pair
    j = join([x, y])
    m = meet([x, y])
    assert weak_leq(x, j) and weak_leq(y, j)
    assert weak_leq(m, x) and weak_leq(m, y)
    assert weak_leq(m, j)
    assert join([x, x]) == x and meet([x, x]) == x

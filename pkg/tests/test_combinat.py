from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from polyrep.combinat import (
    EMPTY,
    Composition,
    Partition,
    TPoly,
    add_root,
    degree_gap,
    dominance_leq,
    enumerate_compositions,
    enumerate_partitions,
    multinomial,
    parse_composition,
    shift,
    t_factorial,
    t_multinomial,
    transpose,
    weight_of,
)

compositions = st.lists(st.integers(0, 5), min_size=1, max_size=5).map(Composition)
partitions = st.lists(st.integers(0, 6), min_size=1, max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


@pytest.mark.parametrize(
    "nu, want",
    [((3, 1, 2, 3), (2, -1, -1)), ((1, 1), (0,)), ((5, 0, 0), (5, 0))],
)
def test_weight_of(nu, want):
    assert tuple(weight_of(nu)) == want


def test_add_root_examples():
    assert add_root((2, 1, 3), 1, -1) == (1, 2, 3)
    assert add_root((2, 0), 1, 1) is EMPTY
    assert add_root((1, 1), 1, -1) == (0, 2)
    with pytest.raises(IndexError):
        add_root((1, 1), 2, 1)


def test_dominance_examples():
    assert dominance_leq((3, 1, 2, 3), (5, 2, 1, 1))
    assert dominance_leq((2, 1), (2, 1))
    assert not dominance_leq((2, 1), (1, 2))


def _dominated_by_roots(nu, mu):
    # mu - nu must be a non-negative integer combination of simple roots
    diff = [b - a for a, b in zip(nu, mu)]
    coeffs, s = [], 0
    for d in diff[:-1]:
        s += d
        coeffs.append(s)
    return all(c >= 0 for c in coeffs) and s + diff[-1] == 0


@given(st.integers(1, 4), st.integers(0, 5), st.data())
def test_dominance_matches_root_cone(n, N, data):
    comps = enumerate_compositions(n, N)
    nu = data.draw(st.sampled_from(comps))
    mu = data.draw(st.sampled_from(comps))
    assert dominance_leq(nu, mu) == _dominated_by_roots(nu, mu)


@given(partitions)
def test_transpose_is_an_involution(lam):
    back = transpose(transpose(lam))
    assert tuple(back) == tuple(p for p in lam if p)


def test_transpose_examples():
    assert transpose((5, 2, 1, 1)) == (4, 2, 1, 1, 1)
    assert transpose((5, 0, 0)) == (1, 1, 1, 1, 1)
    assert transpose((1, 1, 1, 1)) == (4,)


def test_degree_gap_examples():
    assert degree_gap((5, 2, 1, 1), (3, 1, 2, 3)) == 8
    assert degree_gap((5, 0, 0), (3, 1, 1)) == 14
    assert degree_gap((2, 1), (2, 1)) == 0


def test_t_multinomial_examples():
    assert t_multinomial(5, (3, 1, 1)) == TPoly.from_list([1, 2, 3, 4, 4, 3, 2, 1])
    assert t_multinomial(4, (4, 0, 0)) == TPoly.from_list([1])
    assert t_multinomial(2, (1, 1)) == TPoly.from_list([1, 1])


def _inversion_series(word):
    # q-multinomial as the inversion generating function of multiset permutations
    counts: dict[int, int] = {}
    for perm in set(permutations(word)):
        inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
        counts[inv] = counts.get(inv, 0) + 1
    return TPoly(counts)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).filter(lambda xs: sum(xs) <= 6))
def test_t_multinomial_counts_inversions(nu):
    word = [k for k, m in enumerate(nu) for _ in range(m)]
    assert t_multinomial(sum(nu), nu) == _inversion_series(word)
    assert t_multinomial(sum(nu), nu)(1) == multinomial(sum(nu), nu)


@given(st.integers(0, 7))
def test_t_factorial_at_one(a):
    assert t_factorial(a)(1) == factorial(a)


def test_enumeration_examples():
    assert enumerate_compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert enumerate_compositions(1, 3) == [(3,)]
    assert all(isinstance(p, Partition) for p in enumerate_partitions(3, 4))
    assert enumerate_partitions(2, 3) == [(2, 1), (3, 0)]


@given(st.integers(1, 4), st.integers(0, 6))
def test_enumeration_counts(n, N):
    from math import comb

    comps = enumerate_compositions(n, N)
    assert len(comps) == len(set(comps)) == comb(N + n - 1, n - 1)
    parts = enumerate_partitions(n, N)
    assert set(parts) == {c for c in comps if all(c[k] >= c[k + 1] for k in range(n - 1))}


@given(compositions, st.integers(0, 3))
def test_shift_preserves_weight(nu, m):
    assert weight_of(shift(nu, m)) == weight_of(nu)


@given(compositions, st.integers(1, 4), st.sampled_from([1, -1]))
def test_add_root_roundtrip(nu, i, sign):
    if i >= len(nu):
        return
    moved = add_root(nu, i, sign)
    if moved is not EMPTY:
        assert add_root(moved, i, -sign) == nu
        assert sum(moved) == sum(nu)


def test_parse_composition():
    assert parse_composition("3,1,2,3") == (3, 1, 2, 3)
    for bad in ("", "1,-1", "a"):
        with pytest.raises(ValueError):
            parse_composition(bad)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_tpoly_json_roundtrip():
    p = TPoly({-2: 3, 0: 1, 5: -4})
    assert TPoly.from_json(p.to_json()) == p
    assert p.reflect().reflect() == p

import pytest
from hypothesis import given, settings, strategies as st

from polyrep.combinat import Partition, TPoly, dominance_leq, enumerate_compositions, enumerate_partitions, shift, transpose
from polyrep.harness import KNOWN_KOSTKA_FOULKES
from polyrep.kostka import enumerate_ssyt, kostka_foulkes, kostka_number, p_polynomial


def _reading_word(rows):
    # rows from bottom to top, each read left to right
    return [x for row in reversed(rows) for x in row]


def _charge(word):
    """Lascoux-Schutzenberger charge of a word with partition content."""
    word = list(word)
    total = 0
    while word:
        top = max(word)
        picked = []
        pos = len(word)
        for letter in range(1, top + 1):
            # scan leftwards cyclically from pos for the letter
            order = list(range(pos - 1, -1, -1)) + list(range(len(word) - 1, pos - 1, -1))
            hit = next((k for k in order if word[k] == letter and k not in picked), None)
            if hit is None:
                break
            picked.append(hit)
            pos = hit
        index = 0
        for a, b in zip(picked, picked[1:]):
            # the next letter sits to the right: it was reached by wrapping around
            if b > a:
                index += 1
            total += index
        word = [x for k, x in enumerate(word) if k not in picked]
    return total


def _charge_series(lam, mu):
    counts: dict[int, int] = {}
    for t in enumerate_ssyt(lam, mu):
        c = _charge(_reading_word(t))
        counts[c] = counts.get(c, 0) + 1
    return TPoly(counts)


def test_charge_small_cases():
    assert _charge([3, 1, 2]) == 2
    assert _charge([2, 1, 3]) == 1
    assert _charge([2, 1, 1]) == 0


@pytest.mark.parametrize("lam, mu, want", KNOWN_KOSTKA_FOULKES)
def test_worked_example_values(lam, mu, want):
    assert kostka_foulkes(lam, mu) == want
    assert _charge_series(lam, mu) == want


@pytest.mark.parametrize("N", range(1, 7))
def test_against_charge(N):
    for lam in enumerate_partitions(N, N):
        for mu in enumerate_partitions(N, N):
            assert kostka_foulkes(lam, mu) == _charge_series(lam, mu), (lam, mu)


def test_kostka_number_examples():
    assert kostka_number((5, 2, 1, 1), (3, 1, 2, 3)) == 2
    assert kostka_number((3, 2), (3, 2)) == 1
    assert kostka_number((2, 1), (1, 1, 1)) == 2


def test_p_polynomial_examples():
    assert p_polynomial((0, 0)) == TPoly.from_list([1])
    assert p_polynomial((1, -1)) == TPoly.from_list([0, 1])
    assert p_polynomial((1, 0, -1)) == TPoly.from_list([0, 1, 1])
    assert p_polynomial((-1, 1)).is_zero()


def test_ssyt_are_semistandard():
    for rows in enumerate_ssyt((3, 2, 1), (2, 2, 1, 1)):
        assert all(a <= b for row in rows for a, b in zip(row, row[1:]))
        assert all(rows[r][c] < rows[r + 1][c] for r in range(len(rows) - 1) for c in range(len(rows[r + 1])))


_pairs = st.integers(1, 4).flatmap(
    lambda n: st.integers(0, 6).flatmap(
        lambda N: st.tuples(st.sampled_from(enumerate_partitions(n, N)), st.sampled_from(enumerate_compositions(n, N)))
    )
)


@settings(max_examples=100, deadline=None)
@given(_pairs)
def test_invariants(pair):
    lam, mu = pair
    kf = kostka_foulkes(lam, mu)
    k = kostka_number(lam, mu)
    assert kf(1) == k == sum(1 for _ in enumerate_ssyt(lam, mu))
    mu_hat = Partition(sorted(mu, reverse=True))
    assert kf.is_zero() != dominance_leq(mu_hat, lam)
    assert k == kostka_number(lam, mu_hat)
    assert all(c >= 0 for _, c in kf.items())


@settings(max_examples=60, deadline=None)
@given(_pairs, st.integers(1, 3))
def test_stability(pair, m):
    lam, mu = pair
    mu = Partition(sorted(mu, reverse=True))
    lam_m, mu_m = Partition(shift(lam, m)), Partition(shift(mu, m))
    assert kostka_foulkes(lam_m, mu_m) == kostka_foulkes(lam, mu)
    assert kostka_foulkes(transpose(mu_m), transpose(lam_m)) == kostka_foulkes(transpose(mu), transpose(lam))


def test_bad_input():
    with pytest.raises(ValueError):
        kostka_foulkes((1, 2), (2, 1))
    with pytest.raises(ValueError):
        kostka_number((2, 1), (2, 2))

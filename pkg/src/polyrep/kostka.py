"""Kostka numbers and Kostka-Foulkes polynomials.

K_{lam,mu}(t) comes from the alternating sum over S_n of the t-analogue of
Kostant's partition function.  Kostka numbers are counted separately by
enumerating semistandard tableaux as chains of horizontal strips, so the two
can be checked against each other.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .combinat import TPoly, pad


def positive_roots(n: int) -> list[tuple[int, int]]:
    """Positive roots e_a - e_b of type A_{n-1}, as index pairs a < b (0-based)."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def _distributions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _kostant(xi: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Coefficients of P(xi; t) as sorted (exponent, count) pairs."""
    n = len(xi)
    if n == 1:
        return ((0, 1),) if xi[0] == 0 else ()
    first = xi[0]
    if first < 0:
        return ()
    acc: dict[int, int] = {}
    # roots e_1 - e_b take the whole first coordinate; recurse on the rest
    for dist in _distributions(first, n - 1):
        rest = tuple(x + m for x, m in zip(xi[1:], dist))
        s = 0
        ok = True
        for x in rest[:-1]:
            s += x
            if s < 0:
                ok = False
                break
        if not ok:
            continue
        for e, c in _kostant(rest):
            acc[e + first] = acc.get(e + first, 0) + c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def p_polynomial(xi: Sequence[int]) -> TPoly:
    """Sum over {m_alpha >= 0} with sum m_alpha alpha = xi of t^{sum m_alpha}."""
    xi = tuple(int(x) for x in xi)
    if sum(xi) != 0:
        raise ValueError("root vector must sum to zero")
    if not xi:
        return TPoly({0: 1})
    s = 0
    for x in xi:
        s += x
        if s < 0:
            return TPoly()
    return TPoly(_kostant(xi))


def _signed_permutations(values: Sequence[int], target: Sequence[int]):
    """Yield (sign, permuted) for permutations w of values whose partial sums
    dominate those of target (the only ones with nonzero partition function)."""
    n = len(values)
    used = [False] * n
    perm: list[int] = []

    def rec(pos: int, slack: int, inversions: int):
        if pos == n:
            yield (-1) ** inversions, tuple(values[j] for j in perm)
            return
        for j in range(n):
            if used[j]:
                continue
            new_slack = slack + values[j] - target[pos]
            if new_slack < 0:
                continue
            # inversions contributed by placing j after larger unused indices
            inv = sum(1 for k in range(j) if not used[k])
            used[j] = True
            perm.append(j)
            yield from rec(pos + 1, new_slack, inversions + inv)
            perm.pop()
            used[j] = False

    yield from rec(0, 0, 0)


@lru_cache(maxsize=None)
def _kostka_foulkes(lam: tuple[int, ...], mu: tuple[int, ...]) -> TPoly:
    n = len(lam)
    delta = tuple(range(n - 1, -1, -1))
    shifted = tuple(l + d for l, d in zip(lam, delta))
    base = tuple(m + d for m, d in zip(mu, delta))
    out = TPoly()
    for sign, w in _signed_permutations(shifted, base):
        xi = tuple(a - b for a, b in zip(w, base))
        out = out + p_polynomial(xi) * sign
    return out


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> TPoly:
    """K_{lam, mu}(t); a composition mu is sorted into a partition first."""
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu have different totals")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{tuple(lam)} is not a partition")
    mu_hat = sorted(mu, reverse=True)
    n = max(len(lam), len(mu_hat), 1)
    return _kostka_foulkes(pad(lam, n), pad(mu_hat, n))


@lru_cache(maxsize=None)
def _strip_count(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not any(shape) else 0
    k = content[-1]
    rest = content[:-1]
    total = 0
    # remove a horizontal strip of size k: new row i lies between shape[i+1] and shape[i]
    rows = len(shape)

    def rec(i: int, left: int, new: list[int]):
        nonlocal total
        if i == rows:
            if left == 0:
                total += _strip_count(tuple(new), rest)
            return
        below = shape[i + 1] if i + 1 < rows else 0
        for removed in range(0, min(left, shape[i] - below) + 1):
            new.append(shape[i] - removed)
            rec(i + 1, left - removed, new)
            new.pop()

    rec(0, k, [])
    return total


def kostka_number(lam: Sequence[int], nu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and content nu."""
    if sum(lam) != sum(nu):
        raise ValueError("lambda and nu have different totals")
    shape = tuple(p for p in lam if p > 0)
    return _strip_count(shape, tuple(nu))


def enumerate_ssyt(lam: Sequence[int], nu: Sequence[int]):
    """Yield every semistandard tableau (list of rows) of shape lam, content nu."""
    shape = [p for p in lam if p > 0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    remaining = list(nu)
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield [[grid[(r, c)] for c in range(length)] for r, length in enumerate(shape)]
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[(r, c)] = v
                yield from rec(idx + 1)
                remaining[v - 1] += 1
        grid.pop((r, c), None)

    yield from rec(0)

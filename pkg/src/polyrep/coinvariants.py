"""Coinvariant quotients C^lam_nu = P_nu / I^lam_nu and their graded dimensions.

P_nu is a free polynomial algebra on the e_s(nu; i), so all computations
happen in those coordinates (generator e_s has weight s).  The quotient is
built one degree at a time: every monomial of degree r is x * m with x a
generator and m of lower degree, so degree r of the quotient is spanned by
pairs (x, s) with s a standard monomial of degree r - w(x).  The kernel of
that spanning map is generated by the different ways of writing the same
monomial plus the ideal generators of degree r, and is found by exact
rational row reduction.  Once max(nu) consecutive degrees vanish, every
higher degree vanishes as well, so the computation stops there.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from ._linalg import Echelon
from .combinat import (
    TPoly,
    Composition,
    Partition,
    degree_gap,
    enumerate_compositions,
    enumerate_partitions,
    transpose,
)
from .kostka import kostka_foulkes, kostka_number
from .report import Report
from .sympoly import BlockSymPoly, ECoords, MPoly, e_generators, pack, sym, unpack, weighted_monomials


@dataclass(frozen=True)
class IdealGenerator:
    indices: tuple[int, ...]
    r: int
    poly: BlockSymPoly


def _slack(lam: Sequence[int], nu: Sequence[int], indices: Sequence[int]) -> int:
    m = len(indices)
    return sum(lam[:m]) - sum(nu[i - 1] for i in indices)


def _index_sets(n: int):
    for m in range(1, n + 1):
        yield from combinations(range(1, n + 1), m)


def _validate(lam: Sequence[int], nu: Sequence[int]) -> tuple[Partition, Composition]:
    lam, nu = Partition(lam), Composition(nu)
    if len(lam) != len(nu):
        raise ValueError("lambda and nu must have the same number of parts")
    if lam.total != nu.total:
        raise ValueError("lambda and nu have different totals")
    return lam, nu


def ideal_generators(lam: Sequence[int], nu: Sequence[int], r_max: int) -> list[IdealGenerator]:
    """All h_r(nu; I) with r above the slack of I, truncated to r <= r_max."""
    lam, nu = _validate(lam, nu)
    out = []
    for indices in _index_sets(len(nu)):
        for r in range(max(_slack(lam, nu, indices) + 1, 0), r_max + 1):
            poly = sym("h", r, nu, indices)
            out.append(IdealGenerator(indices, r, BlockSymPoly(poly, nu)))
    return out


# -- generators in elementary coordinates ---------------------------------------


@lru_cache(maxsize=None)
def _h_block(nu: tuple[int, ...], i: int, r: int) -> MPoly:
    """h_r of block i as a polynomial in the free generators e_s(nu; j)."""
    ng = sum(nu)
    if r < 0:
        return MPoly(ng)
    if r == 0:
        return MPoly.one(ng)
    gens = e_generators(nu)
    acc = MPoly(ng)
    for s in range(1, min(r, nu[i - 1]) + 1):
        term = MPoly.var(ng, gens.index((i, s)) + 1) * _h_block(nu, i, r - s)
        acc = acc + (term if s % 2 else -term)
    return acc


@lru_cache(maxsize=None)
def _h_multi(nu: tuple[int, ...], indices: tuple[int, ...], r: int) -> MPoly:
    ng = sum(nu)
    if r < 0:
        return MPoly(ng)
    if len(indices) == 1:
        return _h_block(nu, indices[0], r)
    head, rest = indices[0], indices[1:]
    acc = MPoly(ng)
    for a in range(r + 1):
        left = _h_block(nu, head, a)
        if left:
            right = _h_multi(nu, rest, r - a)
            if right:
                acc = acc + left * right
    return acc


class CoinvariantQuotient:
    """Graded normal forms for P_nu / I^lam_nu in elementary coordinates."""

    def __init__(self, lam: Sequence[int], nu: Sequence[int], max_degree: int | None = None):
        self.lam, self.nu = _validate(lam, nu)
        self.gens = e_generators(self.nu)
        self.ng = len(self.gens)
        self.weights = [s for _, s in self.gens]
        self.units = [pack([1 if k == j else 0 for k in range(self.ng)]) for j in range(self.ng)]
        self.standard: list[list[int]] = []
        self.nf: dict[int, dict[int, Fraction]] = {}
        self.top = -1
        self._max_degree = max_degree
        self._build()

    @property
    def dims(self) -> list[int]:
        return [len(s) for s in self.standard]

    def graded_dim(self) -> TPoly:
        return TPoly({r: d for r, d in enumerate(self.dims) if d})

    def wdeg(self, key: int) -> int:
        return sum(a * w for a, w in zip(unpack(key, self.ng), self.weights))

    def _generators(self, r: int) -> list[MPoly]:
        nu = tuple(self.nu)
        out = []
        for indices in _index_sets(len(nu)):
            if r > _slack(self.lam, nu, indices):
                g = _h_multi(nu, indices, r)
                if g:
                    out.append(g)
        return out

    def _build(self) -> None:
        if self.ng == 0:
            self.standard = [[0]]
            self.nf = {0: {0: Fraction(1)}}
            self.top = 0
            return
        if any(g.constant_term() for g in self._generators(0)):
            self.top = 0
            self.standard = [[]]
            self.nf = {0: {}}
            return
        self.standard = [[0]]
        self.nf = {0: {0: Fraction(1)}}
        maxw = max(self.weights)
        zeros = 0
        r = 0
        while zeros < maxw:
            r += 1
            if self._max_degree is not None and r > self._max_degree:
                break
            self._build_degree(r)
            zeros = zeros + 1 if not self.standard[r] else 0
        self.top = r
        while self.standard and not self.standard[-1] and len(self.standard) > 1:
            self.standard.pop()

    def _build_degree(self, r: int) -> None:
        columns: dict[tuple[int, int], int] = {}
        for j, w in enumerate(self.weights):
            if w <= r and r - w < len(self.standard):
                for s in self.standard[r - w]:
                    columns[(j, s)] = len(columns)
        monomials = [pack(m) for m in weighted_monomials(self.weights, r)]
        if not columns:
            self.standard.append([])
            for mu in monomials:
                self.nf[mu] = {}
            return
        ech = Echelon()
        full = len(columns)

        def lift(mu: int, j: int) -> dict[int, Fraction]:
            below = self.nf[mu - self.units[j]]
            return {columns[(j, s)]: c for s, c in below.items()}

        exps_of = {mu: unpack(mu, self.ng) for mu in monomials}
        lifts: dict[int, dict[int, Fraction]] = {}
        for mu in monomials:
            divisors = [j for j, a in enumerate(exps_of[mu]) if a]
            lifts[mu] = lift(mu, divisors[0])
        for g in self._generators(r):
            if ech.rank == full:
                break
            vec: dict[int, Fraction] = {}
            for mu, c in g.terms.items():
                for col, x in lifts[mu].items():
                    v = vec.get(col, 0) + c * x
                    if v:
                        vec[col] = v
                    else:
                        vec.pop(col, None)
            ech.add(vec)
        for mu in monomials:
            if ech.rank == full:
                break
            divisors = [j for j, a in enumerate(exps_of[mu]) if a]
            base = lifts[mu]
            for j in divisors[1:]:
                other = lift(mu, j)
                vec = dict(other)
                for col, x in base.items():
                    v = vec.get(col, 0) - x
                    if v:
                        vec[col] = v
                    else:
                        vec.pop(col, None)
                ech.add(vec)
        inverse = {idx: (j, s) for (j, s), idx in columns.items()}
        free_cols = [idx for idx in range(full) if idx not in ech.rows]
        col_to_mono = {}
        for idx in free_cols:
            j, s = inverse[idx]
            col_to_mono[idx] = s + self.units[j]
        if len(set(col_to_mono.values())) != len(col_to_mono):
            raise AssertionError("standard monomials are not distinct")
        self.standard.append(sorted(col_to_mono.values()))
        if not free_cols:
            for mu in monomials:
                self.nf[mu] = {}
            return
        for mu in monomials:
            red = ech.reduce(lifts[mu])
            self.nf[mu] = {col_to_mono[c]: x for c, x in red.items()}

    def normal_form(self, coords: dict) -> dict[int, Fraction]:
        """Normal form of sum c * e^mono; monomials given as exponent tuples or keys."""
        out: dict[int, Fraction] = {}
        for mono, c in coords.items():
            key = mono if isinstance(mono, int) else pack(mono)
            nf = self.nf.get(key)
            if nf is None:
                if self.wdeg(key) <= self.top and self._max_degree is not None:
                    raise ValueError("degree beyond the computed range")
                continue
            for s, x in nf.items():
                v = out.get(s, 0) + c * x
                if v:
                    out[s] = v
                else:
                    out.pop(s, None)
        return out

    def contains(self, p: MPoly) -> bool:
        """Whether a polynomial in P_nu (in the X variables) lies in the ideal."""
        coords = ECoords(self.nu).from_poly(p)
        return not self.normal_form(coords)


@lru_cache(maxsize=None)
def _quotient(lam: tuple[int, ...], nu: tuple[int, ...]) -> CoinvariantQuotient:
    return CoinvariantQuotient(lam, nu)


def coinv_graded_dim_linear(lam: Sequence[int], nu: Sequence[int]) -> TPoly:
    """Graded dimension of C^lam_nu by exact linear algebra."""
    lam, nu = _validate(lam, nu)
    return _quotient(tuple(lam), tuple(nu)).graded_dim()


def coinv_graded_dim_formula(lam: Sequence[int], nu: Sequence[int]) -> TPoly:
    """t^{d/2} sum_tau K_{tau,nu}(1) K_{tau^T,lam^T}(t^{-1})."""
    lam, nu = _validate(lam, nu)
    n, N = len(nu), nu.total
    acc = TPoly()
    lam_t = transpose(lam)
    for tau in enumerate_partitions(n, N):
        k = kostka_number(tau, nu)
        if k:
            acc = acc + kostka_foulkes(transpose(tau), lam_t).reflect() * k
    out = acc.shift(degree_gap(lam, nu) // 2)
    if not out.is_polynomial():
        raise ArithmeticError(f"negative powers survived for lambda={lam}, nu={nu}: {out}")
    return out


def coinv_graded_dim(lam: Sequence[int], nu: Sequence[int], method: str = "linear") -> TPoly:
    if method == "linear":
        return coinv_graded_dim_linear(lam, nu)
    if method == "formula":
        return coinv_graded_dim_formula(lam, nu)
    raise ValueError(f"unknown method {method!r}")


def check_descent(
    lam: Sequence[int], n: int, N: int, j_max: int, degree_cutoff: int
) -> Report:
    """Images of ideal generators under E_{i,j}, F_{i,j} stay in the target ideal."""
    from .currentaction import apply_E, apply_F, WeightVector

    lam = Partition(lam)
    if len(lam) != n or lam.total != N:
        raise ValueError("lambda must be an n-part partition of N")
    report = Report("descent", {"lambda": list(lam), "n": n, "N": N, "jmax": j_max, "cutoff": degree_cutoff})
    for nu in enumerate_compositions(n, N):
        gens = ideal_generators(lam, nu, degree_cutoff)
        for i in range(1, n):
            for j in range(j_max + 1):
                for name, op in (("E", apply_E), ("F", apply_F)):
                    for g in gens:
                        out = op(i, j, WeightVector(nu, g.poly.poly))
                        if out.nu is None or out.poly.is_zero():
                            report.record(name, True)
                            continue
                        q = _quotient(tuple(lam), tuple(out.nu))
                        ok = q.contains(out.poly)
                        report.record(
                            name,
                            ok,
                            {"nu": list(nu), "i": i, "j": j, "generator": (g.indices, g.r)},
                        )
    return report.finish()

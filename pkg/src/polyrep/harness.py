"""The property suites behind ``polyrep verify``.

Each suite runs the invariants of one module over every weight with the
given n and N and returns a Report.
"""
from __future__ import annotations

from ._linalg import rank
from .coinvariants import (
    check_descent,
    coinv_graded_dim_formula,
    coinv_graded_dim_linear,
    ideal_generators,
)
from .combinat import (
    EMPTY,
    Composition,
    Partition,
    TPoly,
    add_root,
    degree_gap,
    dominance_leq,
    enumerate_compositions,
    enumerate_partitions,
    shift,
    sorted_partition,
    transpose,
)
from .currentaction import WeightVector, apply_E, apply_F, apply_H, verify_current_relations
from .kostka import kostka_foulkes, kostka_number
from .report import Report
from .sympoly import MPoly, graded_basis, render, sym
from .thetafunctor import bubble_image, verify_pi, verify_theta
from .weylchar import (
    dual_reflection_check,
    fusion_dim_check,
    weyl_graded_character,
    weyl_weight_graded_dim,
)

SUITES = ("current", "theta", "coinv", "kostka", "weyl")

# Kostka-Foulkes values that appear in the two worked examples.
KNOWN_KOSTKA_FOULKES = (
    ((4, 2, 1, 1, 1), (4, 2, 1, 1, 1), TPoly.from_list([1])),
    ((2, 1, 1, 1), (1, 1, 1, 1, 1), TPoly.from_list([0, 1, 1, 1, 1])),
    ((3, 1, 1), (1, 1, 1, 1, 1), TPoly.from_list([0, 0, 0, 1, 1, 2, 1, 1])),
)


def _basis(nu, cutoff: int) -> list[MPoly]:
    return [b.poly for r in range(cutoff + 1) for b in graded_basis(nu, r)]


def current_suite(n: int, N: int, cutoff: int, j_max: int, convention: str = "literal") -> Report:
    report = verify_current_relations(n, N, cutoff, j_max, convention)
    for name in ("weight", "H0", "linearity", "bubble"):
        report.check(name)
    for nu in enumerate_compositions(n, N):
        basis = _basis(nu, cutoff)
        for i in range(1, n):
            wbar = nu[i - 1] - nu[i]
            for sign, op in ((-1, apply_F), (1, apply_E)):
                target = add_root(nu, i, sign)
                for p in basis:
                    out = op(i, 0, WeightVector(nu, p, check=False), convention)
                    report.record("weight", out.nu == target or (target is EMPTY and out.nu is EMPTY))
                if target is EMPTY:
                    continue
                # multiplication by generators of the target ring commutes with the operator
                gens = [
                    sym("e", s, target, b)
                    for b in range(1, n + 1)
                    for s in range(1, target[b - 1] + 1)
                ]
                for j in range(j_max + 1):
                    for p in basis:
                        base = op(i, j, WeightVector(nu, p, check=False), convention).poly
                        for q in gens:
                            moved = op(i, j, WeightVector(nu, q * p, check=False), convention).poly
                            ok = moved == q * base
                            report.record(
                                "linearity",
                                ok,
                                None if ok else {"nu": tuple(nu), "i": i, "j": j, "p": render(p), "q": render(q)},
                            )
            for p in basis:
                out = apply_H(i, 0, WeightVector(nu, p, check=False), convention)
                report.record("H0", out.poly == p.scale(wbar), {"nu": tuple(nu), "i": i})
            lower = add_root(nu, i, -1)
            if lower is not EMPTY:
                got = apply_F(i, 0, WeightVector(nu, 1)).poly
                want = bubble_image(i, lower, wbar - 1, "ccw").poly
                report.record("bubble", got == want, {"nu": tuple(nu), "i": i, "got": render(got), "want": render(want)})
    return report.finish()


def theta_suite(n: int, N: int, cutoff: int, j_max: int, convention: str = "literal") -> Report:
    report = verify_theta(n, N, max_exp=cutoff, convention=convention)
    report.merge(verify_pi(N, j_max, (n,), convention))
    return report.finish()


def _ideal_span_matches(nu: Composition, degree: int) -> bool:
    """Degree piece of the ideal for (N, 0, ..., 0) against Sym_N^+ * P_nu."""
    nu = Composition(nu)
    lam0 = (nu.total,) + (0,) * (len(nu) - 1)
    N = nu.total
    left, right = [], []
    for g in ideal_generators(lam0, nu, degree):
        if g.r >= 1:
            for b in graded_basis(nu, degree - g.r):
                left.append((g.poly.poly * b.poly).terms)
    for r in range(1, degree + 1):
        h = sym("h", r, [N], 1)
        for b in graded_basis(nu, degree - r):
            right.append((h * b.poly).terms)
    a, b = rank(left), rank(right)
    return a == b == rank(left + right)


def coinv_suite(n: int, N: int, cutoff: int, j_max: int, stability_m: int = 1) -> Report:
    report = Report("coinv", {"n": n, "N": N, "cutoff": cutoff, "jmax": j_max})
    for name in ("oracle", "vanishing", "top_degree", "stability", "ideal_sym", "descent_E", "descent_F"):
        report.check(name)
    for lam in enumerate_partitions(n, N):
        for nu in enumerate_compositions(n, N):
            lin = coinv_graded_dim_linear(lam, nu)
            form = coinv_graded_dim_formula(lam, nu)
            label = {"lambda": tuple(lam), "nu": tuple(nu)}
            report.record("oracle", lin == form, dict(label, linear=lin.to_json(), formula=form.to_json()))
            # nonvanishing is governed by the sorted weight, not nu itself
            dominated = dominance_leq(sorted_partition(nu), lam)
            report.record("vanishing", lin.is_zero() != dominated, label)
            if dominated:
                report.record("top_degree", lin.degree() == degree_gap(lam, nu) // 2, label)
            for m in range(1, stability_m + 1):
                lam_m, nu_m = shift(lam, m), shift(nu, m)
                ok = coinv_graded_dim_linear(lam_m, nu_m) == lin and coinv_graded_dim_formula(lam_m, nu_m) == form
                report.record("stability", ok, dict(label, m=m))
        report.merge(check_descent(lam, n, N, j_max, cutoff), prefix="descent_")
    for nu in enumerate_compositions(n, N):
        for d in range(cutoff + 1):
            report.record("ideal_sym", _ideal_span_matches(nu, d), {"nu": tuple(nu), "degree": d})
    return report.finish()


def kostka_suite(n: int, N: int, stability_m: int = 3) -> Report:
    report = Report("kostka", {"n": n, "N": N})
    for name in ("known_values", "ssyt", "vanishing", "content", "stability"):
        report.check(name)
    for lam, mu, want in KNOWN_KOSTKA_FOULKES:
        got = kostka_foulkes(lam, mu)
        report.record("known_values", got == want, {"lambda": lam, "mu": mu, "got": got.to_json()})
    partitions = enumerate_partitions(n, N)
    for lam in partitions:
        for mu in enumerate_compositions(n, N):
            kf = kostka_foulkes(lam, mu)
            label = {"lambda": tuple(lam), "mu": tuple(mu)}
            k = kostka_number(lam, mu)
            report.record("ssyt", kf(1) == k, dict(label, kf=kf.to_json(), ssyt=k))
            report.record("vanishing", kf.is_zero() != dominance_leq(sorted_partition(mu), lam), label)
            report.record("content", k == kostka_number(lam, sorted_partition(mu)), label)
        for mu in partitions:
            kf = kostka_foulkes(lam, mu)
            kf_t = kostka_foulkes(transpose(mu), transpose(lam))
            for m in range(1, stability_m + 1):
                lam_m, mu_m = Partition(shift(lam, m)), Partition(shift(mu, m))
                ok = kostka_foulkes(lam_m, mu_m) == kf
                ok = ok and kostka_foulkes(transpose(mu_m), transpose(lam_m)) == kf_t
                report.record("stability", ok, {"lambda": tuple(lam), "mu": tuple(mu), "m": m})
    return report.finish()


def weyl_suite(n: int, N: int, stability_m: int = 2) -> Report:
    report = Report("weyl", {"n": n, "N": N})
    for name in ("dual_reflection", "fusion", "highest", "top_degree", "stability"):
        report.check(name)
    for lam in enumerate_partitions(n, N):
        report.record("fusion", fusion_dim_check(lam), {"lambda": tuple(lam)})
        report.record("highest", weyl_weight_graded_dim(lam, lam) == TPoly.from_list([1]), {"lambda": tuple(lam)})
        for nu in enumerate_compositions(n, N):
            label = {"lambda": tuple(lam), "nu": tuple(nu)}
            report.record("dual_reflection", dual_reflection_check(lam, nu), label)
            if dominance_leq(sorted_partition(nu), lam):
                w = weyl_weight_graded_dim(lam, nu)
                report.record("top_degree", w.degree() == degree_gap(lam, nu) // 2, label)
        table = weyl_graded_character(lam)
        for m in range(1, stability_m + 1):
            shifted = weyl_graded_character(shift(lam, m))
            ok = {shift(nu, m): d for nu, d in table.entries.items()} == shifted.entries
            report.record("stability", ok, {"lambda": tuple(lam), "m": m})
    return report.finish()


def run_suite(name: str, n: int, N: int, cutoff: int, j_max: int, convention: str = "literal") -> list[Report]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, n, N, cutoff, j_max, convention)]
    if name == "current":
        return [current_suite(n, N, cutoff, j_max, convention)]
    if name == "theta":
        return [theta_suite(n, N, cutoff, j_max, convention)]
    if name == "coinv":
        return [coinv_suite(n, N, cutoff, j_max)]
    if name == "kostka":
        return [kostka_suite(n, N)]
    if name == "weyl":
        return [weyl_suite(n, N)]
    raise ValueError(f"unknown suite {name!r}")

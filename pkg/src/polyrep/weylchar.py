"""Graded characters of local Weyl modules and their duality with C^lam_nu."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, prod
from typing import Sequence

from .combinat import (
    Composition,
    Partition,
    TPoly,
    degree_gap,
    enumerate_compositions,
    enumerate_partitions,
    transpose,
)
from .kostka import kostka_foulkes, kostka_number


def irr_weight_multiplicities(tau: Sequence[int]) -> dict[Composition, int]:
    """Weight multiplicities of the irreducible module with highest weight tau."""
    tau = Partition(tau)
    out = {}
    for nu in enumerate_compositions(len(tau), tau.total):
        k = kostka_number(tau, nu)
        if k:
            out[nu] = k
    return out


def weyl_dimension(tau: Sequence[int]) -> int:
    """prod_{a<b} (tau_a - tau_b + b - a) / (b - a)."""
    n = len(tau)
    num = den = 1
    for a in range(n):
        for b in range(a + 1, n):
            num *= tau[a] - tau[b] + b - a
            den *= b - a
    return num // den


@lru_cache(maxsize=None)
def _kf_weights(lam: Partition) -> tuple[tuple[Partition, TPoly], ...]:
    """(tau, K_{tau^T, lam^T}(t)) for every tau with a nonzero polynomial."""
    lam_t = transpose(lam)
    out = []
    for tau in enumerate_partitions(len(lam), lam.total):
        kf = kostka_foulkes(transpose(tau), lam_t)
        if not kf.is_zero():
            out.append((tau, kf))
    return tuple(out)


def weyl_weight_graded_dim(lam: Sequence[int], nu: Sequence[int]) -> TPoly:
    """sum_tau K_{tau,nu}(1) K_{tau^T,lam^T}(t)."""
    lam, nu = Partition(lam), Composition(nu)
    if lam.total != nu.total or len(lam) != len(nu):
        raise ValueError("lambda and nu must have the same length and total")
    acc = TPoly()
    for tau, kf in _kf_weights(lam):
        k = kostka_number(tau, nu)
        if k:
            acc = acc + kf * k
    return acc


@dataclass
class CharacterTable:
    lam: Partition
    n: int
    N: int
    entries: dict[Composition, TPoly] = field(default_factory=dict)

    def __getitem__(self, nu) -> TPoly:
        return self.entries.get(Composition(nu), TPoly())

    def total(self) -> TPoly:
        acc = TPoly()
        for v in self.entries.values():
            acc = acc + v
        return acc

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "entries": [
                {"nu": list(nu), "dim": dim.to_json()}
                for nu, dim in sorted(self.entries.items())
            ],
        }

    def to_csv(self) -> str:
        top = max((d.degree() for d in self.entries.values()), default=0)
        lines = ["nu," + ",".join(f"t^{r}" for r in range(top + 1))]
        for nu, dim in sorted(self.entries.items()):
            cells = [str(dim.coeff(r)) for r in range(top + 1)]
            lines.append('"' + ",".join(map(str, nu)) + '",' + ",".join(cells))
        return "\n".join(lines) + "\n"


def weyl_graded_character(lam: Sequence[int]) -> CharacterTable:
    """Every weight space of W(lam) with its graded dimension."""
    lam = Partition(lam)
    table = CharacterTable(lam, len(lam), lam.total)
    weights = _kf_weights(lam)
    for nu in enumerate_compositions(len(lam), lam.total):
        acc = TPoly()
        for tau, kf in weights:
            k = kostka_number(tau, nu)
            if k:
                acc = acc + kf * k
        if not acc.is_zero():
            table.entries[nu] = acc
    return table


def dual_reflection_check(lam: Sequence[int], nu: Sequence[int], method: str = "linear") -> bool:
    """Does dim_t C^lam_nu equal the reflected weight space of W(lam)?"""
    from .coinvariants import coinv_graded_dim

    coinv = coinv_graded_dim(lam, nu, method)
    weyl = weyl_weight_graded_dim(lam, nu)
    reflected = weyl.reflect().shift(degree_gap(lam, nu) // 2)
    return coinv == reflected


def fusion_dimension(lam: Sequence[int]) -> int:
    """prod_j C(n, lam^T_j): dimension of the fusion of exterior powers."""
    n = len(lam)
    return prod(comb(n, c) for c in transpose(lam))


def fusion_dim_check(lam: Sequence[int]) -> bool:
    lam = Partition(lam)
    total = sum(weyl_weight_graded_dim(lam, nu)(1) for nu in enumerate_compositions(len(lam), lam.total))
    return total == fusion_dimension(lam)

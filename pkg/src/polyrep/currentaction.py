"""The current algebra U(sl_n[t]) acting on the direct sum of the rings P_nu.

F_{i,j} and E_{i,j} are module maps over the target ring: an element of P_nu
is written in the free basis 1, X, X^2, ... of the refined ring over the
target (X the variable that changes blocks), and each power of X is sent to
an explicit combination of e's and h's.  H_{i,j} is a multiplication.

With convention="literal" every scalar is 1 and H_{i,j} multiplies by
(-1)^j (p_j(nu; i+1) - p_j(nu; i)).  With convention="signed", E_i and F_i
on P_nu carry the sign (-1)^{nu_1 + ... + nu_{i-1}} and H_{i,j} multiplies by
p_j(nu; i) - p_j(nu; i+1), the value the bubble generating functions give.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Sequence

from .combinat import EMPTY, Composition, add_root, cartan, enumerate_compositions
from .report import Report
from .sympoly import MPoly, decompose_over, graded_basis, merged_block, render, symmetry_violation, sym


class WeightVector:
    """An element p of the weight space P_nu; nu may be EMPTY (then p = 0)."""

    __slots__ = ("nu", "poly")

    def __init__(self, nu, poly: MPoly | int = 0, check: bool = True):
        if nu is EMPTY or nu is None:
            self.nu = EMPTY
            self.poly = MPoly(0)
            return
        self.nu = Composition(nu)
        n = self.nu.total
        if isinstance(poly, int):
            poly = MPoly.const(n, poly)
        if poly.n != n:
            raise ValueError(f"polynomial has {poly.n} variables, expected {n}")
        if check:
            bad = symmetry_violation(poly, self.nu)
            if bad is not None:
                raise ValueError(f"not symmetric under X{bad[0]} <-> X{bad[1]} for nu={tuple(self.nu)}")
        self.poly = poly

    @classmethod
    def zero(cls, nu) -> "WeightVector":
        return cls(nu, 0, check=False)

    def is_zero(self) -> bool:
        return self.nu is EMPTY or self.poly.is_zero()

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.nu != other.nu:
            raise ValueError("cannot add vectors of different weights")
        return WeightVector(self.nu, self.poly + other.poly, check=False)

    def __neg__(self) -> "WeightVector":
        return self.scale(-1)

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return self + other.scale(-1)

    def scale(self, c: int) -> "WeightVector":
        if self.nu is EMPTY:
            return self
        return WeightVector(self.nu, self.poly.scale(c), check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.nu == other.nu and self.poly == other.poly

    def __hash__(self):
        return hash((tuple(self.nu) if self.nu is not EMPTY else None, self.poly))

    def __repr__(self) -> str:
        if self.nu is EMPTY:
            return "WeightVector(EMPTY)"
        return f"WeightVector({tuple(self.nu)}, {render(self.poly)})"

    def to_json(self) -> dict:
        if self.nu is EMPTY:
            return {"nu": None, "poly": "0"}
        return {"nu": list(self.nu), "poly": render(self.poly)}


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in ("E", "F", "H"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.i < 1 or self.j < 0:
            raise ValueError("need i >= 1 and j >= 0")

    def __str__(self) -> str:
        return f"{self.kind}_{{{self.i},{self.j}}}"

    @classmethod
    def parse(cls, text: str) -> "GeneratorSymbol":
        """Read forms like 'E1,0', 'F_{2,1}' or 'H 1 3'."""
        kind = text.strip()[0].upper()
        digits = "".join(ch if ch.isdigit() else " " for ch in text[1:]).split()
        if len(digits) not in (1, 2):
            raise ValueError(f"cannot parse generator {text!r}")
        return cls(kind, int(digits[0]), int(digits[1]) if len(digits) == 2 else 0)


# -- images of the powers of the moving variable -----------------------------------------


@lru_cache(maxsize=None)
def _f_power_image(nu: tuple[int, ...], i: int, j: int, m: int) -> MPoly:
    target = add_root(nu, i, -1)
    a, b = nu[i - 1], nu[i]
    acc = MPoly(sum(nu))
    for l in range(a):
        term = sym("e", l, target, i) * sym("h", m + j + a - b - 1 - l, target, i + 1)
        acc = acc + (term if l % 2 == 0 else -term)
    return acc


@lru_cache(maxsize=None)
def _e_power_image(nu: tuple[int, ...], i: int, j: int, m: int) -> MPoly:
    target = add_root(nu, i, 1)
    a, b = nu[i - 1], nu[i]
    acc = MPoly(sum(nu))
    for l in range(b):
        term = sym("e", l, target, i + 1) * sym("h", m + j + b - a - 1 - l, target, i)
        acc = acc + (term if l % 2 == 0 else -term)
    return acc


def _check_index(nu: Sequence[int], i: int) -> None:
    if not 1 <= i <= len(nu) - 1:
        raise IndexError(f"root index {i} out of range for n={len(nu)}")


CONVENTIONS = ("literal", "signed")


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")


def _apply_raise_lower(sign: int, i: int, j: int, v: WeightVector, convention: str) -> WeightVector:
    if v.nu is EMPTY:
        return v
    nu = v.nu
    _check_index(nu, i)
    target = add_root(nu, i, sign)
    if target is EMPTY:
        return WeightVector(EMPTY)
    if v.poly.is_zero():
        return WeightVector.zero(target)
    sep = nu.prefix(i) if sign < 0 else nu.prefix(i) + 1
    coeffs = decompose_over(v.poly, sep, merged_block(target, sep))
    image = _f_power_image if sign < 0 else _e_power_image
    acc = MPoly(nu.total)
    for m, q in enumerate(coeffs):
        if q:
            img = image(tuple(nu), i, j, m)
            if img:
                acc = acc + q * img
    if convention == "signed" and sum(nu[: i - 1]) % 2:
        acc = -acc
    return WeightVector(target, acc, check=False)


def apply_F(i: int, j: int, v: WeightVector, convention: str = "literal") -> WeightVector:
    """F_{i,j}: P_nu -> P_{nu - alpha_i}."""
    _check_convention(convention)
    return _apply_raise_lower(-1, i, j, v, convention)


def apply_E(i: int, j: int, v: WeightVector, convention: str = "literal") -> WeightVector:
    """E_{i,j}: P_nu -> P_{nu + alpha_i}."""
    _check_convention(convention)
    return _apply_raise_lower(1, i, j, v, convention)


@lru_cache(maxsize=None)
def h_multiplier(nu: tuple[int, ...], i: int, j: int, convention: str = "literal") -> MPoly:
    """The element of P_nu by which H_{i,j} multiplies."""
    _check_convention(convention)
    n = sum(nu)
    if j == 0:
        return MPoly.const(n, nu[i - 1] - nu[i])
    diff = sym("p", j, nu, i + 1) - sym("p", j, nu, i)
    if convention == "signed":
        return -diff
    return diff if j % 2 == 0 else -diff


def apply_H(i: int, j: int, v: WeightVector, convention: str = "literal") -> WeightVector:
    if v.nu is EMPTY:
        return v
    _check_index(v.nu, i)
    return WeightVector(v.nu, v.poly * h_multiplier(tuple(v.nu), i, j, convention), check=False)


_DISPATCH = {"E": apply_E, "F": apply_F, "H": apply_H}


def apply_generator(g: GeneratorSymbol, v: WeightVector, convention: str = "literal") -> WeightVector:
    return _DISPATCH[g.kind](g.i, g.j, v, convention)


def apply_word(word: Sequence[GeneratorSymbol], v: WeightVector, convention: str = "literal") -> WeightVector:
    """Apply a product of generators; the rightmost symbol acts first."""
    for g in reversed(list(word)):
        v = apply_generator(g, v, convention)
        if v.nu is EMPTY:
            break
    return v


def degree_shift(g: GeneratorSymbol, nu: Sequence[int]) -> int:
    """Change of polynomial degree under g on P_nu (degree X_k = 2)."""
    wbar = nu[g.i - 1] - nu[g.i]
    if g.kind == "H":
        return 2 * g.j
    if g.kind == "F":
        return 2 * (g.j + wbar - 1)
    return 2 * (g.j - wbar - 1)


# -- relation suite ----------------------------------------------------------------


Combination = list[tuple[int, tuple[GeneratorSymbol, ...]]]


def _commutator(a: GeneratorSymbol, b: GeneratorSymbol) -> Combination:
    return [(1, (a, b)), (-1, (b, a))]


def relations(n: int, j_max: int) -> Iterable[tuple[str, str, Combination]]:
    """(family, label, combination that must act as zero)."""
    G = GeneratorSymbol
    idx = range(1, n)
    rs = range(j_max + 1)
    for i in idx:
        for j in idx:
            for r in rs:
                for s in rs:
                    yield "C1", f"[H{i},{r} H{j},{s}]", _commutator(G("H", i, r), G("H", j, s))
    for i in idx:
        for j in idx:
            a = cartan(i, j)
            for r in rs:
                for s in rs:
                    lhs = _commutator(G("H", i, r), G("E", j, s))
                    yield "C2", f"[H{i},{r} E{j},{s}]", lhs + [(-a, (G("E", j, r + s),))]
                    lhs = _commutator(G("H", i, r), G("F", j, s))
                    yield "C2", f"[H{i},{r} F{j},{s}]", lhs + [(a, (G("F", j, r + s),))]
    for i in idx:
        for j in idx:
            for r in rs:
                for s in rs:
                    for k in "EF":
                        lhs = _commutator(G(k, i, r + 1), G(k, j, s))
                        rhs = _commutator(G(k, i, r), G(k, j, s + 1))
                        yield "C3", f"{k}{i},{r}+1 {k}{j},{s}", lhs + [(-c, w) for c, w in rhs]
    for i in idx:
        for j in idx:
            for r in rs:
                for s in rs:
                    combo = _commutator(G("E", i, r), G("F", j, s))
                    if i == j:
                        combo.append((-1, (G("H", i, r + s),)))
                    yield "C4", f"[E{i},{r} F{j},{s}]", combo
    for i in idx:
        for j in idx:
            if abs(i - j) != 1:
                continue
            m = 1 - cartan(i, j)
            for ks in _tuples(min(j_max, 1), m):
                for s in range(min(j_max, 1) + 1):
                    for k in "EF":
                        combo: Combination = []
                        for pi in permutations(range(m)):
                            seq = [ks[p] for p in pi]
                            for l in range(m + 1):
                                word = (
                                    tuple(G(k, i, x) for x in seq[:l])
                                    + (G(k, j, s),)
                                    + tuple(G(k, i, x) for x in seq[l:])
                                )
                                combo.append(((-1) ** l * comb(m, l), word))
                        yield "C5", f"{k} i={i} j={j} r={ks} s={s}", combo


def _tuples(top: int, m: int):
    if m == 0:
        yield ()
        return
    for first in range(top + 1):
        for rest in _tuples(top, m - 1):
            yield (first,) + rest


class _Evaluator:
    """Applies words with memoized single steps."""

    def __init__(self, convention: str = "literal"):
        self.memo: dict = {}
        self.convention = convention

    def step(self, g: GeneratorSymbol, v: WeightVector) -> WeightVector:
        if v.is_zero():
            return WeightVector(EMPTY)
        key = (g, v)
        hit = self.memo.get(key)
        if hit is None:
            hit = apply_generator(g, v, self.convention)
            self.memo[key] = hit
        return hit

    def word(self, word: Sequence[GeneratorSymbol], v: WeightVector) -> WeightVector:
        for g in reversed(word):
            v = self.step(g, v)
            if v.is_zero():
                return WeightVector(EMPTY)
        return v

    def combination(self, combo: Combination, v: WeightVector) -> WeightVector:
        acc = WeightVector(EMPTY)
        for c, word in combo:
            acc = acc + self.word(word, v).scale(c)
        return acc


def verify_current_relations(
    n: int, N: int, degree_cutoff: int, j_max: int, convention: str = "literal"
) -> Report:
    """Check C1-C5 on graded bases of every P_nu up to the given half-degree."""
    _check_convention(convention)
    report = Report(
        "current", {"n": n, "N": N, "cutoff": degree_cutoff, "jmax": j_max, "convention": convention}
    )
    for name in ("C1", "C2", "C3", "C4", "C5", "degree"):
        report.check(name)
    rels = list(relations(n, j_max))
    ev = _Evaluator(convention)
    for nu in enumerate_compositions(n, N):
        basis = [
            WeightVector(nu, b.poly, check=False)
            for r in range(degree_cutoff + 1)
            for b in graded_basis(nu, r)
        ]
        for v in basis:
            d = v.poly.degree()
            for i in range(1, n):
                for j in range(j_max + 1):
                    for kind in "EFH":
                        g = GeneratorSymbol(kind, i, j)
                        out = ev.step(g, v)
                        ok = out.is_zero() or (
                            out.poly.is_homogeneous() and out.poly.degree() == d + degree_shift(g, nu)
                        )
                        report.record("degree", ok, {"nu": tuple(nu), "gen": str(g), "v": render(v.poly)})
            for family, label, combo in rels:
                res = ev.combination(combo, v)
                report.record(
                    family,
                    res.is_zero(),
                    None if res.is_zero() else {
                        "relation": label,
                        "nu": tuple(nu),
                        "v": render(v.poly),
                        "residual": repr(res),
                    },
                )
    return report.finish()

"""Exact polynomial arithmetic and block-symmetric polynomial rings.

Variables are X_1..X_N, each of degree 2.  A monomial is packed into one
integer with 6 bits per exponent and X_1 in the highest field, so that
comparing keys numerically is lexicographic comparison of exponent vectors
and multiplying monomials is adding keys.  Exponents must stay below 64.

The ring P_nu of polynomials symmetric separately in each block of a
composition nu is handled through ``BlockSymPoly`` and through coordinates in
the elementary generators e_s(nu; i), which form a free polynomial basis of
P_nu.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import _kernel
from ._linalg import solve_unique
from .combinat import EMPTY, Composition, add_root

BITS = 6
FIELD = (1 << BITS) - 1
MAX_EXP = FIELD


def _shift(n: int, k: int) -> int:
    """Bit offset of variable k (1-based) in an n-variable key."""
    return BITS * (n - k)


def pack(exps: Sequence[int]) -> int:
    n = len(exps)
    key = 0
    for k, a in enumerate(exps, start=1):
        if a < 0 or a > MAX_EXP:
            raise OverflowError(f"exponent {a} outside 0..{MAX_EXP}")
        key |= a << _shift(n, k)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> _shift(n, k)) & FIELD for k in range(1, n + 1))


def key_degree(key: int) -> int:
    d = 0
    while key:
        d += key & FIELD
        key >>= BITS
    return d


class MPoly:
    """Sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("n", "terms", "_deg")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = terms if terms is not None else {}
        self._deg = None

    # construction
    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls(n, {})

    @classmethod
    def const(cls, n: int, c: int) -> "MPoly":
        return cls(n, {0: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "MPoly":
        return cls(n, {0: 1})

    @classmethod
    def var(cls, n: int, k: int, power: int = 1) -> "MPoly":
        if not 1 <= k <= n:
            raise IndexError(f"variable X_{k} outside X_1..X_{n}")
        if power > MAX_EXP:
            raise OverflowError("exponent too large")
        return cls(n, {power << _shift(n, k): 1})

    @classmethod
    def from_exps(cls, n: int, data) -> "MPoly":
        items = data.items() if isinstance(data, dict) else data
        terms: dict = {}
        for exps, c in items:
            if len(exps) != n:
                raise ValueError("exponent vector of wrong length")
            if c:
                k = pack(exps)
                v = terms.get(k, 0) + int(c)
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return cls(n, terms)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(exponents, coefficient) pairs in descending lexicographic order."""
        for k in sorted(self.terms, reverse=True):
            yield unpack(k, self.n), self.terms[k]

    def half_degree(self) -> int:
        """Largest total exponent; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = max((key_degree(k) for k in self.terms), default=-1)
        return self._deg

    def degree(self) -> int:
        """Largest degree with deg X_k = 2."""
        return 2 * self.half_degree()

    def is_homogeneous(self) -> bool:
        return len({key_degree(k) for k in self.terms}) <= 1

    def graded_piece(self, degree: int) -> "MPoly":
        """Homogeneous component of (even) degree ``degree``."""
        if degree % 2:
            return MPoly(self.n)
        r = degree // 2
        return MPoly(self.n, {k: c for k, c in self.terms.items() if key_degree(k) == r})

    def constant_term(self) -> int:
        return self.terms.get(0, 0)

    def exponent(self, key: int, k: int) -> int:
        return (key >> _shift(self.n, k)) & FIELD

    def variables(self) -> set[int]:
        used = set()
        for key in self.terms:
            for k in range(1, self.n + 1):
                if (key >> _shift(self.n, k)) & FIELD:
                    used.add(k)
        return used

    # arithmetic
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise ValueError("polynomials in different variable sets")
            return other
        if isinstance(other, int):
            return MPoly.const(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _kernel.axpy(out, other.terms, 1)
        return MPoly(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _kernel.axpy(out, other.terms, -1)
        return MPoly(self.n, out)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly(self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, c: int) -> "MPoly":
        if not c:
            return MPoly(self.n)
        return MPoly(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.half_degree() + other.half_degree() > MAX_EXP:
            raise OverflowError("product degree exceeds the packed exponent range")
        return MPoly(self.n, _kernel.mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = MPoly.one(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def mul_monomial(self, key: int, coef: int = 1) -> "MPoly":
        if self.half_degree() + key_degree(key) > MAX_EXP:
            raise OverflowError("product degree exceeds the packed exponent range")
        return MPoly(self.n, _kernel.mul_term(self.terms, key, coef))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # variable manipulations
    def swap(self, a: int, b: int) -> "MPoly":
        """Exchange X_a and X_b."""
        if a == b:
            return self
        sa, sb = _shift(self.n, a), _shift(self.n, b)
        out = {}
        for key, c in self.terms.items():
            ea = (key >> sa) & FIELD
            eb = (key >> sb) & FIELD
            nk = key & ~((FIELD << sa) | (FIELD << sb)) | (eb << sa) | (ea << sb)
            out[nk] = c
        return MPoly(self.n, out)

    def is_symmetric_in(self, variables: Sequence[int]) -> bool:
        variables = list(variables)
        return all(self.swap(a, b) == self for a, b in zip(variables, variables[1:]))

    def collect(self, k: int) -> dict[int, "MPoly"]:
        """Write self = sum_a X_k^a c_a with c_a free of X_k; return {a: c_a}."""
        s = _shift(self.n, k)
        mask = ~(FIELD << s)
        out: dict[int, dict] = {}
        for key, c in self.terms.items():
            a = (key >> s) & FIELD
            out.setdefault(a, {})[key & mask] = c
        return {a: MPoly(self.n, t) for a, t in out.items()}

    def evaluate(self, values: Sequence[int]):
        total = 0
        for exps, c in self.items():
            term = c
            for v, a in zip(values, exps):
                if a:
                    term *= v**a
            total += term
        return total

    def embed(self, n: int, offset: int = 0) -> "MPoly":
        """Re-express in n variables, sending X_k to X_{k+offset}."""
        return MPoly.from_exps(
            n,
            (
                (tuple([0] * offset) + exps + tuple([0] * (n - offset - self.n)), c)
                for exps, c in self.items()
            ),
        )

    # serialization
    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coef": str(c)} for e, c in self.items()]

    @classmethod
    def from_json(cls, n: int, data: list[dict]) -> "MPoly":
        return cls.from_exps(n, ((tuple(d["exps"]), int(d["coef"])) for d in data))

    def __repr__(self) -> str:
        return f"MPoly({render(self)})"


def render(p: MPoly) -> str:
    """Text form accepted by the expression parser, e.g. ``2*X(1)^2*X(3) - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.items():
        factors = [f"X({k})" if a == 1 else f"X({k})^{a}" for k, a in enumerate(exps, 1) if a]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# -- symmetric functions of a variable set -----------------------------------


@lru_cache(maxsize=4096)
def _e_table(n: int, variables: tuple[int, ...]) -> tuple[MPoly, ...]:
    es = [MPoly.one(n)]
    for k in variables:
        x = MPoly.var(n, k)
        new = [es[0]]
        for r in range(1, len(es)):
            new.append(es[r] + x * es[r - 1])
        new.append(x * es[-1])
        es = new
    return tuple(es)


@lru_cache(maxsize=16384)
def _h_poly(n: int, variables: tuple[int, ...], r: int) -> MPoly:
    if r < 0:
        return MPoly(n)
    if r == 0:
        return MPoly.one(n)
    if not variables:
        return MPoly(n)
    *rest, last = variables
    rest = tuple(rest)
    out: dict = {}
    for a in range(r + 1):
        term = _h_poly(n, rest, r - a)
        if term:
            _kernel.axpy(out, term.mul_monomial(a << _shift(n, last)).terms, 1)
    return MPoly(n, out)


def e_poly(n: int, variables: Iterable[int], r: int) -> MPoly:
    variables = tuple(variables)
    if r < 0 or r > len(variables):
        return MPoly(n)
    return _e_table(n, variables)[r]


def h_poly(n: int, variables: Iterable[int], r: int) -> MPoly:
    return _h_poly(n, tuple(variables), r)


def p_poly(n: int, variables: Iterable[int], r: int) -> MPoly:
    if r < 0:
        return MPoly(n)
    if r == 0:
        return MPoly.one(n)
    return MPoly(n, {r << _shift(n, k): 1 for k in variables})


_FAMILIES = {"e": e_poly, "h": h_poly, "p": p_poly}


def sym_poly(kind: str, n: int, variables: Iterable[int], r: int) -> MPoly:
    try:
        return _FAMILIES[kind](n, variables, r)
    except KeyError:
        raise ValueError(f"unknown symmetric family {kind!r}") from None


# -- blocks -------------------------------------------------------------------


def block_vars(blocks: Sequence[int], i: int) -> range:
    """Variables of the i-th block (1-based), grouped left to right."""
    if not 1 <= i <= len(blocks):
        raise IndexError(f"block {i} out of range")
    start = sum(blocks[: i - 1])
    return range(start + 1, start + blocks[i - 1] + 1)


def union_vars(blocks: Sequence[int], indices: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for i in indices:
        out.extend(block_vars(blocks, i))
    return tuple(out)


def block_groups(blocks: Sequence[int]) -> list[tuple[int, ...]]:
    return [tuple(block_vars(blocks, i)) for i in range(1, len(blocks) + 1)]


def is_block_symmetric(p: MPoly, blocks: Sequence[int]) -> bool:
    return all(p.is_symmetric_in(g) for g in block_groups(blocks))


def symmetry_violation(p: MPoly, blocks: Sequence[int]) -> tuple[int, int] | None:
    """First adjacent transposition within a block that changes p, if any."""
    for g in block_groups(blocks):
        for a, b in zip(g, g[1:]):
            if p.swap(a, b) != p:
                return (a, b)
    return None


@dataclass(frozen=True)
class BlockSymPoly:
    """A polynomial tagged with the blocks it is symmetric in."""

    poly: MPoly
    blocks: Composition

    def __post_init__(self):
        if self.poly.n != sum(self.blocks):
            raise ValueError("blocks do not cover the variables")

    def check(self) -> "BlockSymPoly":
        bad = symmetry_violation(self.poly, self.blocks)
        if bad is not None:
            raise ValueError(f"not symmetric under X_{bad[0]} <-> X_{bad[1]}")
        return self

    def is_valid(self) -> bool:
        return symmetry_violation(self.poly, self.blocks) is None

    def __add__(self, other: "BlockSymPoly"):
        return BlockSymPoly(self.poly + other.poly, self.blocks)

    def __sub__(self, other: "BlockSymPoly"):
        return BlockSymPoly(self.poly - other.poly, self.blocks)

    def __mul__(self, other):
        if isinstance(other, BlockSymPoly):
            other = other.poly
        return BlockSymPoly(self.poly * other, self.blocks)

    def __eq__(self, other):
        if isinstance(other, BlockSymPoly):
            return self.poly == other.poly
        if isinstance(other, (MPoly, int)):
            return self.poly == other
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)


def sym(kind: str, r: int, nu: Sequence[int], blocks: Iterable[int] | int) -> MPoly:
    """e/h/p of degree r in the union of the given blocks of nu."""
    if isinstance(blocks, int):
        blocks = (blocks,)
    return sym_poly(kind, sum(nu), union_vars(nu, blocks), r)


def generator(kind: str, r: int, nu: Sequence[int], block: int) -> BlockSymPoly:
    nu = Composition(nu)
    return BlockSymPoly(sym(kind, r, nu, block), nu)


def multi_block(kind: str, r: int, nu: Sequence[int], blocks: Sequence[int]) -> BlockSymPoly:
    """Convolution sum over r_1+...+r_m = r of products of single-block terms."""
    nu = Composition(nu)
    blocks = list(blocks)
    if any(a >= b for a, b in zip(blocks, blocks[1:])):
        raise ValueError("block indices must be strictly increasing")
    if kind not in ("e", "h"):
        raise ValueError("multi_block supports e and h")
    n = sum(nu)
    acc = [MPoly.one(n)] + [MPoly(n)] * r
    for b in blocks:
        new = []
        for s in range(r + 1):
            term = MPoly(n)
            for a in range(s + 1):
                f = sym(kind, a, nu, b)
                if f and acc[s - a]:
                    term = term + acc[s - a] * f
            new.append(term)
        acc = new
    return BlockSymPoly(acc[r] if r >= 0 else MPoly(n), nu)


def mul(a: MPoly, b: MPoly) -> MPoly:
    return a * b


def add(a: MPoly, b: MPoly) -> MPoly:
    return a + b


def scale(a: MPoly, c: int) -> MPoly:
    return a.scale(c)


def graded_piece(p: MPoly, degree: int) -> MPoly:
    return p.graded_piece(degree)


# -- elementary coordinates ------------------------------------------------------


def e_generators(nu: Sequence[int]) -> list[tuple[int, int]]:
    """The free generators (block, s) of P_nu, s = 1..nu_block, weight s."""
    return [(i, s) for i in range(1, len(nu) + 1) for s in range(1, nu[i - 1] + 1)]


def weighted_monomials(weights: Sequence[int], r: int) -> list[tuple[int, ...]]:
    """Exponent vectors a with sum a_j * weights_j = r, lexicographically descending."""
    out: list[tuple[int, ...]] = []
    m = len(weights)

    def rec(j: int, remaining: int, prefix: list[int]):
        if j == m:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = weights[j]
        for a in range(remaining // w, -1, -1):
            prefix.append(a)
            rec(j + 1, remaining - a * w, prefix)
            prefix.pop()

    if r >= 0:
        rec(0, r, [])
    return out


class ECoords:
    """Translate between P_nu and the free algebra on e_s(nu; i)."""

    def __init__(self, nu: Sequence[int]):
        self.nu = Composition(nu)
        self.n = sum(self.nu)
        self.gens = e_generators(self.nu)
        self.weights = [s for _, s in self.gens]
        self.index = {g: j for j, g in enumerate(self.gens)}
        self._cache: dict[tuple[int, ...], MPoly] = {}

    def monomials(self, r: int) -> list[tuple[int, ...]]:
        return weighted_monomials(self.weights, r)

    def evaluate(self, mono: Sequence[int]) -> MPoly:
        mono = tuple(mono)
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        j = next((j for j, a in enumerate(mono) if a), None)
        if j is None:
            out = MPoly.one(self.n)
        else:
            rest = list(mono)
            rest[j] -= 1
            i, s = self.gens[j]
            out = self.evaluate(rest) * sym("e", s, self.nu, i)
        self._cache[mono] = out
        return out

    def to_poly(self, coords: dict) -> MPoly:
        acc: dict = {}
        for mono, c in coords.items():
            _kernel.axpy(acc, self.evaluate(mono).terms, c)
        return MPoly(self.n, acc)

    def from_poly(self, p: MPoly) -> dict[tuple[int, ...], int]:
        """Coordinates of a block-symmetric p; raises if p is not in P_nu."""
        groups = block_groups(self.nu)
        rem = dict(p.terms)
        out: dict[tuple[int, ...], int] = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            exps = unpack(lead, self.n)
            mono = [0] * len(self.gens)
            for i, g in enumerate(groups, start=1):
                part = [exps[k - 1] for k in g]
                if any(part[t] < part[t + 1] for t in range(len(part) - 1)):
                    raise ValueError("polynomial is not block symmetric")
                for s in range(1, len(part) + 1):
                    nxt = part[s] if s < len(part) else 0
                    if part[s - 1] - nxt:
                        mono[self.index[(i, s)]] = part[s - 1] - nxt
            mono = tuple(mono)
            out[mono] = out.get(mono, 0) + c
            _kernel.axpy(rem, self.evaluate(mono).terms, -c)
            if rem.get(lead):
                raise ValueError("polynomial is not block symmetric")
        return out


def graded_basis(nu: Sequence[int], r: int) -> list[BlockSymPoly]:
    """Products of the e_s(nu; i) of total half-degree r."""
    ec = ECoords(nu)
    return [BlockSymPoly(ec.evaluate(m), ec.nu) for m in ec.monomials(r)]


def graded_dim(nu: Sequence[int], r: int) -> int:
    return len(weighted_monomials([s for _, s in e_generators(nu)], r))


# -- refinements and free decomposition ----------------------------------------------


def refine(nu: Sequence[int], i: int, sign: int):
    """Blocks of P_{(nu + sign*alpha_i, nu)} and its separated variable.

    For sign = -1 the i-th block loses its last variable X_{k_i}; for
    sign = +1 the (i+1)-th block loses its first variable X_{k_i+1}.
    Returns (blocks, variable) or EMPTY.
    """
    if add_root(nu, i, sign) is EMPTY:
        return EMPTY
    parts = list(nu)
    k = sum(parts[:i])
    if sign < 0:
        blocks = parts[: i - 1] + [parts[i - 1] - 1, 1] + parts[i:]
        return Composition(blocks), k
    blocks = parts[:i] + [1, parts[i] - 1] + parts[i + 1 :]
    return Composition(blocks), k + 1


def merged_block(base: Sequence[int], var: int) -> tuple[int, ...]:
    """Variables of the block of ``base`` that contains X_var."""
    start = 0
    for part in base:
        if start < var <= start + part:
            return tuple(range(start + 1, start + part + 1))
        start += part
    raise ValueError(f"X_{var} not covered by blocks {tuple(base)}")


@lru_cache(maxsize=65536)
def _reduced_power_table(size: int, a: int, beta: tuple[int, ...]):
    """y^a * prod_k e_k(W)^beta_k in the basis y^0..y^{size-1} over Sym(Omega).

    W has size-1 variables, Omega = W + {y}.  The answer is symbolic in the
    elementary functions E_1..E_size of Omega: a dict m -> {gamma: coef}
    where gamma is an exponent vector for (E_1, ..., E_size).
    """
    ne = size
    # symbolic ring: variable 1 = y, variables 2..size+1 = E_1..E_size
    nv = ne + 1

    def E(j: int) -> MPoly:
        if j == 0:
            return MPoly.one(nv)
        if j > ne:
            return MPoly(nv)
        return MPoly.var(nv, j + 1)

    y = MPoly.var(nv, 1)
    acc = y**a
    for k, b in enumerate(beta, start=1):
        if not b:
            continue
        # e_k(W) = sum_s (-1)^s y^s E_{k-s}(Omega)
        ek = MPoly(nv)
        for s in range(k + 1):
            term = (y**s) * E(k - s)
            ek = ek + (term if s % 2 == 0 else -term)
        acc = acc * ek**b
    by_power = acc.collect(1)
    top = max(by_power, default=-1)
    for s in range(top, size - 1, -1):
        c = by_power.pop(s, None)
        if c is None or c.is_zero():
            continue
        # y^size = sum_{l=1}^{size} (-1)^{l+1} E_l y^{size-l}
        for l in range(1, size + 1):
            t = s - l
            contrib = c * E(l)
            if l % 2 == 0:
                contrib = -contrib
            by_power[t] = by_power.get(t, MPoly(nv)) + contrib
    out = {}
    for m, c in by_power.items():
        if c.is_zero():
            continue
        out[m] = {exps[1:]: coef for exps, coef in c.items()}
    return out


@lru_cache(maxsize=65536)
def _omega_e_monomial(n: int, omega: tuple[int, ...], gamma: tuple[int, ...]) -> MPoly:
    out = MPoly.one(n)
    for j, g in enumerate(gamma, start=1):
        if g:
            out = out * e_poly(n, omega, j) ** g
    return out


def _symmetric_coords(p: MPoly, group: tuple[int, ...]) -> dict[int, dict[tuple[int, ...], int]]:
    """Write p (symmetric in ``group``) as sum u * prod e_k(group)^beta_k.

    Returns {u_key: {beta: coef}} where u_key is a monomial free of the group.
    """
    n = p.n
    gmask = 0
    for k in group:
        gmask |= FIELD << _shift(n, k)
    split: dict[int, dict] = {}
    for key, c in p.terms.items():
        split.setdefault(key & ~gmask, {})[key & gmask] = c
    m = len(group)
    out: dict[int, dict[tuple[int, ...], int]] = {}
    for u, rem in split.items():
        coords: dict[tuple[int, ...], int] = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            part = [(lead >> _shift(n, k)) & FIELD for k in group]
            if any(part[t] < part[t + 1] for t in range(m - 1)):
                raise ValueError("polynomial is not symmetric in the merged block")
            beta = tuple(part[s] - (part[s + 1] if s + 1 < m else 0) for s in range(m))
            coords[beta] = coords.get(beta, 0) + c
            prod = _omega_e_monomial(n, group, beta)
            _kernel.axpy(rem, prod.terms, -c)
            if rem.get(lead):
                raise ValueError("polynomial is not symmetric in the merged block")
        out[u] = coords
    return out


def decompose_over(p: MPoly, sep: int, omega: Sequence[int]) -> list[MPoly]:
    """Coefficients q_0..q_{|omega|-1}, symmetric in omega, with p = sum q_m X_sep^m.

    ``p`` must be symmetric in omega minus X_sep.  Uses the relation
    prod_{x in omega} (X_sep - x) = 0 to reduce powers of X_sep.
    """
    n = p.n
    omega = tuple(omega)
    if sep not in omega:
        raise ValueError("separated variable is not in the merged block")
    size = len(omega)
    rest = tuple(k for k in omega if k != sep)
    # symbolic accumulation: m -> gamma -> polynomial in the outside variables
    sym_acc: dict[int, dict[tuple[int, ...], dict]] = {}
    for a, ca in p.collect(sep).items():
        coords = _symmetric_coords(ca, rest) if rest else {u: {(): c} for u, c in ca.terms.items()}
        for u, betas in coords.items():
            for beta, c in betas.items():
                for m, gammas in _reduced_power_table(size, a, beta).items():
                    slot = sym_acc.setdefault(m, {})
                    for gamma, g in gammas.items():
                        d = slot.setdefault(gamma, {})
                        v = d.get(u, 0) + c * g
                        if v:
                            d[u] = v
                        else:
                            del d[u]
    out = []
    for m in range(size):
        acc: dict = {}
        for gamma, outside in sym_acc.get(m, {}).items():
            if outside:
                prod = _omega_e_monomial(n, omega, gamma) * MPoly(n, outside)
                _kernel.axpy(acc, prod.terms, 1)
        out.append(MPoly(n, acc))
    return out


def recompose(coeffs: Sequence[MPoly], sep: int) -> MPoly:
    n = coeffs[0].n
    acc: dict = {}
    for m, q in enumerate(coeffs):
        if q:
            _kernel.axpy(acc, q.mul_monomial(m << _shift(n, sep)).terms, 1)
    return MPoly(n, acc)


def free_decompose(
    p, sep: int, base: Sequence[int], rank: int | None = None, method: str = "euclid"
) -> list[BlockSymPoly]:
    """Unique coefficients q_m in P_base with p = sum_{m < rank} q_m X_sep^m.

    ``base`` is the coarser composition; the block containing X_sep
    determines the rank.  ``method="linear"`` solves degree by degree with
    exact rational linear algebra instead of the Euclidean reduction.
    """
    poly = p.poly if isinstance(p, BlockSymPoly) else p
    base = Composition(base)
    omega = merged_block(base, sep)
    if rank is None:
        rank = len(omega)
    if rank != len(omega):
        raise ValueError(
            f"decomposition infeasible: rank {rank} but the merged block has {len(omega)} variables"
        )
    if method == "euclid":
        coeffs = decompose_over(poly, sep, omega)
    elif method == "linear":
        coeffs = decompose_linear(poly, sep, base)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [BlockSymPoly(q, base) for q in coeffs]


def decompose_linear(p: MPoly, sep: int, base: Sequence[int]) -> list[MPoly]:
    """Degree-by-degree exact solve against {X_sep^m * graded basis of P_base}."""
    base = Composition(base)
    omega = merged_block(base, sep)
    rank = len(omega)
    ec = ECoords(base)
    n = p.n
    coeffs = [dict() for _ in range(rank)]
    for r in sorted({key_degree(k) for k in p.terms}):
        target = p.graded_piece(2 * r)
        columns = []
        labels = []
        for m in range(min(rank - 1, r) + 1):
            for mono in ec.monomials(r - m):
                vec = ec.evaluate(mono).mul_monomial(m << _shift(n, sep))
                columns.append(vec.terms)
                labels.append((m, mono))
        sol = solve_unique(columns, target.terms)
        if sol is None:
            raise ValueError("decomposition infeasible: no solution in this degree")
        for (m, mono), val in zip(labels, sol):
            if val:
                if val.denominator != 1:
                    raise ValueError("decomposition infeasible: non-integral coefficient")
                _kernel.axpy(coeffs[m], ec.evaluate(mono).terms, int(val))
    return [MPoly(n, c) for c in coeffs]


# -- identity library ------------------------------------------------------------


def identity_pairs(nu: Sequence[int], i: int, r: int) -> dict[str, tuple[MPoly, MPoly]]:
    """Named (lhs, rhs) pairs of the standard relations in the refined rings.

    Keys ``minus.*`` live in P_{(nu - alpha_i, nu)}, keys ``plus.*`` in
    P_{(nu + alpha_i, nu)}; absent when the refinement is EMPTY.
    """
    nu = Composition(nu)
    n = sum(nu)
    out: dict[str, tuple[MPoly, MPoly]] = {}

    def S(kind, rr, comp, b):
        return sym(kind, rr, comp, b)

    def rng(top):
        return range(0, top + 1)

    lo = add_root(nu, i, -1)
    if lo is not EMPTY:
        x = MPoly.var(n, nu.prefix(i))
        X = lambda s: x**s  # noqa: E731
        out["minus.e_next"] = (
            S("e", r, nu, i + 1),
            sum((S("e", r - s, lo, i + 1) * X(s) * (-1) ** s for s in rng(r)), MPoly(n)),
        )
        out["minus.e_this_small"] = (
            S("e", r, lo, i),
            sum((X(s) * S("e", r - s, nu, i) * (-1) ** s for s in rng(r)), MPoly(n)),
        )
        out["minus.e_next_big"] = (S("e", r, lo, i + 1), x * S("e", r - 1, nu, i + 1) + S("e", r, nu, i + 1))
        out["minus.e_this"] = (S("e", r, nu, i), S("e", r - 1, lo, i) * x + S("e", r, lo, i))
        out["minus.h_next"] = (S("h", r, nu, i + 1), S("h", r, lo, i + 1) - S("h", r - 1, lo, i + 1) * x)
        out["minus.h_this_small"] = (S("h", r, lo, i), S("h", r, nu, i) - x * S("h", r - 1, nu, i))
        out["minus.h_next_big"] = (
            S("h", r, lo, i + 1),
            sum((X(s) * S("h", r - s, nu, i + 1) for s in rng(r)), MPoly(n)),
        )
        out["minus.h_this"] = (
            S("h", r, nu, i),
            sum((S("h", r - s, lo, i) * X(s) for s in rng(r)), MPoly(n)),
        )
        out["minus.power_via_next"] = (
            X(r),
            sum((S("h", r - l, lo, i + 1) * S("e", l, nu, i + 1) * (-1) ** l for l in rng(r)), MPoly(n)),
        )
        out["minus.power_via_this"] = (
            X(r),
            sum((S("e", l, lo, i) * S("h", r - l, nu, i) * (-1) ** l for l in rng(r)), MPoly(n)),
        )
    hi = add_root(nu, i, 1)
    if hi is not EMPTY:
        x = MPoly.var(n, nu.prefix(i) + 1)
        X = lambda s: x**s  # noqa: E731
        out["plus.e_next_small"] = (
            S("e", r, hi, i + 1),
            sum((X(s) * S("e", r - s, nu, i + 1) * (-1) ** s for s in rng(r)), MPoly(n)),
        )
        out["plus.e_this"] = (
            S("e", r, nu, i),
            sum((X(s) * S("e", r - s, hi, i) * (-1) ** s for s in rng(r)), MPoly(n)),
        )
        out["plus.e_next"] = (S("e", r, nu, i + 1), x * S("e", r - 1, hi, i + 1) + S("e", r, hi, i + 1))
        out["plus.e_this_big"] = (S("e", r, hi, i), x * S("e", r - 1, nu, i) + S("e", r, nu, i))
        out["plus.h_next_small"] = (S("h", r, hi, i + 1), S("h", r, nu, i + 1) - x * S("h", r - 1, nu, i + 1))
        out["plus.h_this"] = (S("h", r, nu, i), S("h", r, hi, i) - x * S("h", r - 1, hi, i))
        out["plus.h_next"] = (
            S("h", r, nu, i + 1),
            sum((X(s) * S("h", r - s, hi, i + 1) for s in rng(r)), MPoly(n)),
        )
        out["plus.h_this_big"] = (
            S("h", r, hi, i),
            sum((X(s) * S("h", r - s, nu, i) for s in rng(r)), MPoly(n)),
        )
        out["plus.power_via_next"] = (
            X(r),
            sum((S("e", l, hi, i + 1) * S("h", r - l, nu, i + 1) * (-1) ** l for l in rng(r)), MPoly(n)),
        )
        out["plus.power_via_this"] = (
            X(r),
            sum((S("h", l, hi, i) * S("e", r - l, nu, i) * (-1) ** (r - l) for l in rng(r)), MPoly(n)),
        )
    return out


def split_identity_pairs(p: int, q: int, r: int) -> dict[str, tuple[MPoly, MPoly]]:
    """Relations between symmetric functions of X (p vars), Y (q vars) and X+Y."""
    n = p + q
    xs, ys, xy = tuple(range(1, p + 1)), tuple(range(p + 1, n + 1)), tuple(range(1, n + 1))
    e = lambda v, k: e_poly(n, v, k)  # noqa: E731
    h = lambda v, k: h_poly(n, v, k)  # noqa: E731
    z = MPoly(n)
    return {
        "h_union": (h(xy, r), sum((h(xs, s) * h(ys, r - s) for s in range(r + 1)), z)),
        "e_union": (e(xy, r), sum((e(xs, s) * e(ys, r - s) for s in range(r + 1)), z)),
        "h_complement": (h(ys, r), sum((e(xs, s) * h(xy, r - s) * (-1) ** s for s in range(r + 1)), z)),
        "e_complement": (e(ys, r), sum((h(xs, s) * e(xy, r - s) * (-1) ** s for s in range(r + 1)), z)),
        "eh_orthogonality": (
            sum((e(xy, s) * h(xy, r - s) * (-1) ** s for s in range(r + 1)), z),
            MPoly.const(n, 1 if r == 0 else 0),
        ),
    }


__all__ = [
    "MPoly",
    "BlockSymPoly",
    "ECoords",
    "pack",
    "unpack",
    "render",
    "e_poly",
    "h_poly",
    "p_poly",
    "sym",
    "generator",
    "multi_block",
    "graded_basis",
    "graded_dim",
    "graded_piece",
    "refine",
    "free_decompose",
    "decompose_over",
    "decompose_linear",
    "recompose",
    "identity_pairs",
    "split_identity_pairs",
    "block_vars",
    "is_block_symmetric",
    "symmetry_violation",
]

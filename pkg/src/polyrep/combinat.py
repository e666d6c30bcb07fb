"""Compositions, partitions, sl_n weights and t-analogues.

Compositions are immutable tuples of non-negative integers.  Trailing zeros
are significant: ``(5, 0, 0)`` lives in a different weight lattice than
``(5,)``.  Shifting a composition by a simple root can leave the set of
compositions; that case is represented by the ``EMPTY`` sentinel instead of
raising, so operator algebra stays total.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from math import comb
from typing import Iterable, Iterator, Sequence


class _Empty:
    """Sentinel for an out-of-range composition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()


class Composition(tuple):
    """An ordered tuple of non-negative integers."""

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def total(self) -> int:
        return sum(self)

    def prefix(self, i: int) -> int:
        """k_i: the sum of the first ``i`` parts."""
        return sum(self[:i])

    def __repr__(self) -> str:
        return f"{type(self).__name__}{tuple(self)}"


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts: Iterable[int]):
        obj = super().__new__(cls, parts)
        if any(obj[i] < obj[i + 1] for i in range(len(obj) - 1)):
            raise ValueError(f"not a partition: {tuple(obj)}")
        return obj


class Weight(tuple):
    """An sl_n weight, stored as the n-1 differences of consecutive parts."""

    def __new__(cls, entries: Iterable[int]):
        return super().__new__(cls, (int(e) for e in entries))

    def __repr__(self) -> str:
        return f"Weight{tuple(self)}"


def as_composition(nu) -> Composition:
    if isinstance(nu, Composition):
        return nu
    return Composition(nu)


def parse_composition(text: str) -> Composition:
    """Parse ``"3,1,2,3"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty composition")
    return Composition(int(tok) for tok in text.split(","))


def format_composition(nu: Sequence[int]) -> str:
    return ",".join(str(p) for p in nu)


def weight_of(nu: Sequence[int]) -> Weight:
    return Weight(nu[i] - nu[i + 1] for i in range(len(nu) - 1))


def add_root(nu: Sequence[int], i: int, sign: int):
    """Return nu + sign*alpha_i, or EMPTY if a part would become negative.

    ``i`` is 1-based, 1 <= i <= n-1.
    """
    if nu is EMPTY:
        return EMPTY
    n = len(nu)
    if not 1 <= i <= n - 1:
        raise IndexError(f"root index {i} out of range for n={n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    parts = list(nu)
    parts[i - 1] += sign
    parts[i] -= sign
    if parts[i - 1] < 0 or parts[i] < 0:
        return EMPTY
    return Composition(parts)


def cartan(i: int, j: int) -> int:
    """Cartan matrix entry a_ij of type A."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def dominance_leq(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff nu <= mu in dominance order (all prefix sums of mu - nu >= 0)."""
    if len(nu) != len(mu):
        raise ValueError("compositions of different lengths")
    if sum(nu) != sum(mu):
        raise ValueError("compositions with different totals")
    s = 0
    for a, b in zip(nu, mu):
        s += b - a
        if s < 0:
            return False
    return True


def transpose(lam: Sequence[int]) -> Partition:
    """Conjugate partition, with trailing zeros dropped."""
    lam = [p for p in lam if p > 0]
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    if len(parts) > length:
        if any(parts[length:]):
            raise ValueError(f"cannot pad {tuple(parts)} to length {length}")
        return tuple(parts[:length])
    return tuple(parts) + (0,) * (length - len(parts))


def scalar(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def degree_gap(lam: Sequence[int], nu: Sequence[int]) -> int:
    """max((lam, lam) - (nu, nu), 0)."""
    if sum(lam) != sum(nu):
        raise ValueError("lambda and nu have different totals")
    return max(scalar(lam, lam) - scalar(nu, nu), 0)


def shift(parts: Sequence[int], m: int) -> Composition:
    return Composition(p + m for p in parts)


def sorted_partition(nu: Sequence[int]) -> Partition:
    return Partition(sorted(nu, reverse=True))


# -- enumeration ---------------------------------------------------------


def _compositions(n: int, total: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(n - 1, total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _compositions_cached(n: int, total: int) -> tuple[Composition, ...]:
    return tuple(Composition(c) for c in _compositions(n, total))


def enumerate_compositions(n: int, N: int) -> list[Composition]:
    """All n-part compositions of N in lexicographic order."""
    return list(_compositions_cached(n, N))


def enumerate_partitions(n: int, N: int) -> list[Partition]:
    """All partitions of N with at most n parts (zero padded), lexicographic."""
    return [
        Partition(c)
        for c in _compositions_cached(n, N)
        if all(c[i] >= c[i + 1] for i in range(n - 1))
    ]


def is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        p >= 0 for p in parts
    )


def prefix_sums(parts: Sequence[int]) -> list[int]:
    return list(accumulate(parts, initial=0))


# -- t-analogues ----------------------------------------------------------


class TPoly:
    """A Laurent polynomial in t with integer coefficients.

    Exponent ``r`` stands for polynomial degree ``2r`` (deg X = 2).  Zero
    coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, v in items:
                e, v = int(e), int(v)
                if v:
                    c[e] = c.get(e, 0) + v
                    if not c[e]:
                        del c[e]
        self._c = c

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> "TPoly":
        """Coefficients listed by ascending exponent starting at 0."""
        return cls(enumerate(coeffs))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "TPoly":
        return cls({e: c})

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero TPoly")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero TPoly")
        return min(self._c)

    def to_list(self) -> list[int]:
        """Dense coefficient list from exponent 0 (polynomials only)."""
        if not self.is_polynomial():
            raise ValueError("Laurent polynomial has no dense list")
        if not self._c:
            return []
        return [self._c.get(e, 0) for e in range(max(self._c) + 1)]

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]

    @classmethod
    def from_json(cls, pairs) -> "TPoly":
        return cls((e, c) for e, c in pairs)

    def __call__(self, t):
        return sum(c * t**e for e, c in self._c.items())

    def reflect(self) -> "TPoly":
        """t -> t^{-1}."""
        return TPoly({-e: c for e, c in self._c.items()})

    def shift(self, k: int) -> "TPoly":
        """Multiply by t^k."""
        return TPoly({e + k: c for e, c in self._c.items()})

    def __add__(self, other):
        other = _as_tpoly(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return TPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_tpoly(other))

    def __rsub__(self, other):
        return _as_tpoly(other) - self

    def __mul__(self, other):
        other = _as_tpoly(other)
        c: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + c1 * c2
        return TPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly({0: other})
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "TPoly(0)"
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(str(c))
            else:
                mono = "t" if e == 1 else f"t^{e}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "TPoly(" + " + ".join(terms) + ")"


def _as_tpoly(x) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int):
        return TPoly({0: x})
    raise TypeError(f"cannot convert {type(x).__name__} to TPoly")


def t_integer(a: int) -> TPoly:
    """[a]_t = 1 + t + ... + t^{a-1}."""
    return TPoly({e: 1 for e in range(a)})


def t_factorial(a: int) -> TPoly:
    out = TPoly({0: 1})
    for k in range(1, a + 1):
        out = out * t_integer(k)
    return out


def _exact_divide(num: TPoly, den: TPoly) -> TPoly:
    """Polynomial long division that must leave no remainder."""
    num_c = dict(num._c)
    dd = den.degree()
    lead = den.coeff(dd)
    quot: dict[int, int] = {}
    while num_c:
        top = max(num_c)
        if top < dd:
            break
        q, r = divmod(num_c[top], lead)
        if r:
            break
        e = top - dd
        quot[e] = q
        for de, dc in den._c.items():
            k = de + e
            num_c[k] = num_c.get(k, 0) - q * dc
            if not num_c[k]:
                del num_c[k]
    if num_c:
        raise ArithmeticError("inexact t-polynomial division")
    return TPoly(quot)


def t_multinomial(N: int, nu: Sequence[int]) -> TPoly:
    """[N]_t! / prod [nu_i]_t!."""
    if sum(nu) != N:
        raise ValueError("parts do not sum to N")
    out = t_factorial(N)
    for p in nu:
        out = _exact_divide(out, t_factorial(p))
    return out


def multinomial(N: int, nu: Sequence[int]) -> int:
    out, rest = 1, N
    for p in nu:
        out *= comb(rest, p)
        rest -= p
    return out

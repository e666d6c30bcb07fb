"""Exact sparse linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable


class Echelon:
    """Incrementally maintained row echelon form of sparse rational vectors.

    Columns are integers; the pivot of a stored row is its smallest column
    and every other entry of that row lies in a larger column.  Rows are kept
    as primitive integer vectors so reduction never touches Fraction.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}
        self._order: list[int] = []
        self._dirty = False

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _pivots(self) -> list[int]:
        if self._dirty:
            self._order.sort()
            self._dirty = False
        return self._order

    @staticmethod
    def _integral(vec) -> tuple[dict[int, int], int]:
        d = 1
        for x in vec.values():
            if isinstance(x, Fraction) and x.denominator != 1:
                d = d * x.denominator // gcd(d, x.denominator)
        return {c: int(x * d) for c, x in vec.items() if x}, d

    def reduce_scaled(self, vec) -> tuple[dict[int, int], int]:
        """Reduce vec; the true remainder is the returned vector divided by d."""
        v, d = self._integral(vec)
        if not v:
            return v, 1
        for p in self._pivots():
            x = v.get(p)
            if not x:
                continue
            row = self.rows[p]
            rp = row[p]
            if rp != 1:
                for c in v:
                    v[c] *= rp
                d *= rp
            for c, y in row.items():
                w = v.get(c, 0) - x * y
                if w:
                    v[c] = w
                else:
                    v.pop(c, None)
            g = d
            for y in v.values():
                g = gcd(g, y)
                if g == 1:
                    break
            if g > 1:
                v = {c: y // g for c, y in v.items()}
                d //= g
        return v, d

    def reduce(self, vec) -> dict[int, Fraction]:
        v, d = self.reduce_scaled(vec)
        if d == 1:
            return {c: Fraction(x) for c, x in v.items()}
        return {c: Fraction(x, d) for c, x in v.items()}

    def add(self, vec) -> bool:
        """Insert a vector; return True if it increased the rank."""
        v, _ = self.reduce_scaled(vec)
        if not v:
            return False
        p = min(v)
        g = 0
        for y in v.values():
            g = gcd(g, y)
        if v[p] < 0:
            g = -g
        self.rows[p] = {c: y // g for c, y in v.items()}
        self._order.append(p)
        self._dirty = True
        return True

    def normalized_row(self, p: int) -> dict[int, Fraction]:
        row = self.rows[p]
        return {c: Fraction(y, row[p]) for c, y in row.items()}

    def contains(self, vec) -> bool:
        return not self.reduce_scaled(vec)[0]


def rank(vectors: Iterable[dict]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def solve_unique(columns: list[dict[Hashable, int]], target: dict[Hashable, int]):
    """Solve sum x_j columns[j] = target exactly.

    Returns the list of Fraction solutions, or None when the system has no
    solution.  Raises ValueError when the columns are linearly dependent.
    """
    keys: dict[Hashable, int] = {}
    for col in columns:
        for k in col:
            keys.setdefault(k, len(keys))
    for k in target:
        keys.setdefault(k, len(keys))
    m = len(columns)
    # rows of the augmented matrix, indexed by monomial
    rows: list[dict[int, Fraction]] = [dict() for _ in range(len(keys))]
    for j, col in enumerate(columns):
        for k, c in col.items():
            rows[keys[k]][j] = Fraction(c)
    for k, c in target.items():
        rows[keys[k]][m] = Fraction(c)
    ech = Echelon()
    for row in rows:
        ech.add(row)
    if m in ech.rows:
        return None
    pivots = sorted(ech.rows)
    if len(pivots) != m:
        raise ValueError("columns are linearly dependent")
    sol = [Fraction(0)] * m
    for p in reversed(pivots):
        row = ech.normalized_row(p)
        val = row.get(m, Fraction(0))
        for c, x in row.items():
            if c != p and c != m:
                val -= x * sol[c]
        sol[p] = val
    return sol

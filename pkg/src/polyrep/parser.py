"""Text input for polynomials in the block-symmetric rings P_nu.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := ("+" | "-") factor | power
    power  := atom ("^" INT)?
    atom   := INT | "X(" INT ")" | ("e" | "h" | "p") "(" INT "," INT ")" | "(" expr ")"

``X(k)`` is the k-th variable and ``e(r,i)`` the r-th elementary symmetric
polynomial of block i of nu (likewise ``h`` and ``p``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .combinat import Composition
from .sympoly import BlockSymPoly, MPoly, sym, symmetry_violation


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SymmetryError(ValueError):
    def __init__(self, pair: tuple[int, int]):
        a, b = pair
        super().__init__(f"not block-symmetric: changes under X({a}) <-> X({b})")
        self.transposition = pair


# -- syntax tree ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    index: int
    position: int


@dataclass(frozen=True)
class SymFn:
    kind: str
    r: int
    block: int
    position: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, SymFn, BinOp, Neg, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(("op", ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.k += 1
        return tok

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def parse(self) -> Expr:
        tree = self.expr()
        self.take("end")
        return tree

    def expr(self) -> Expr:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take("op")[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.at("*"):
            self.take("op")
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.at("-"):
            self.take("op")
            return Neg(self.factor())
        if self.at("+"):
            self.take("op")
            return self.factor()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at("^"):
            self.take("op")
            return Pow(base, int(self.take("int")[1]))
        return base

    def atom(self) -> Expr:
        kind, value, pos = self.peek()
        if kind == "int":
            self.k += 1
            return Num(int(value))
        if kind == "op" and value == "(":
            self.take("op")
            node = self.expr()
            self.take("op", ")")
            return node
        if kind == "name":
            self.k += 1
            if value == "X":
                self.take("op", "(")
                idx = int(self.take("int")[1])
                self.take("op", ")")
                return Var(idx, pos)
            if value in "ehp":
                self.take("op", "(")
                r = int(self.take("int")[1])
                self.take("op", ",")
                block = int(self.take("int")[1])
                self.take("op", ")")
                return SymFn(value, r, block, pos)
            raise ParseError(f"unknown name {value!r}", pos)
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(tree: Expr, nu: Sequence[int]) -> MPoly:
    nu = Composition(nu)
    n = nu.total
    if isinstance(tree, Num):
        return MPoly.const(n, tree.value)
    if isinstance(tree, Var):
        if not 1 <= tree.index <= n:
            raise ParseError(f"variable X({tree.index}) out of range 1..{n}", tree.position)
        return MPoly.var(n, tree.index)
    if isinstance(tree, SymFn):
        if not 1 <= tree.block <= len(nu):
            raise ParseError(f"block {tree.block} out of range 1..{len(nu)}", tree.position)
        return sym(tree.kind, tree.r, nu, tree.block)
    if isinstance(tree, Neg):
        return -evaluate(tree.arg, nu)
    if isinstance(tree, Pow):
        return evaluate(tree.base, nu) ** tree.exponent
    left, right = evaluate(tree.left, nu), evaluate(tree.right, nu)
    if tree.op == "+":
        return left + right
    if tree.op == "-":
        return left - right
    return left * right


def parse_poly(text: str, nu: Sequence[int]) -> BlockSymPoly:
    """Parse and expand; the result must be symmetric within each block of nu."""
    nu = Composition(nu)
    poly = evaluate(parse_expr(text), nu)
    bad = symmetry_violation(poly, nu)
    if bad is not None:
        raise SymmetryError(bad)
    return BlockSymPoly(poly, nu)

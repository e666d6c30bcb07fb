import pytest
import sympy as sp

from polyrep.combinat import EMPTY, add_root, enumerate_compositions
from polyrep.currentaction import (
    GeneratorSymbol,
    WeightVector,
    apply_E,
    apply_F,
    apply_H,
    apply_word,
    verify_current_relations,
)
from polyrep.sympoly import MPoly, graded_basis, sym


def _x(n, k, e=1):
    return MPoly.var(n, k, e)


# -- worked examples -----------------------------------------------------------------


def test_F_examples():
    assert apply_F(1, 0, WeightVector((1, 1), 1)).is_zero()
    out = apply_F(1, 0, WeightVector((2, 0), 1))
    assert out.nu == (1, 1) and out.poly == _x(2, 2) - _x(2, 1)
    out = apply_F(1, 0, WeightVector((1, 1), _x(2, 1)))
    assert out.nu == (0, 2) and out.poly == 1


def test_E_examples():
    out = apply_E(1, 0, WeightVector((1, 1), _x(2, 2)))
    assert out.nu == (2, 0) and out.poly == 1
    assert apply_E(1, 0, WeightVector((1, 1), 1)).is_zero()
    out = apply_E(1, 0, WeightVector((2, 0), _x(2, 1) + _x(2, 2)))
    assert out.nu is EMPTY and out.is_zero()


def test_H_examples():
    p = _x(3, 1) + _x(3, 2)
    assert apply_H(1, 0, WeightVector((2, 1), p)).poly == p.scale(1)
    assert apply_H(1, 1, WeightVector((1, 1), 1)).poly == _x(2, 1) - _x(2, 2)
    assert apply_H(1, 1, WeightVector((3, 0, 0), 1)).poly == sym("p", 1, (3, 0, 0), 1)


def test_word_examples():
    v = WeightVector((1, 1), _x(2, 1))
    E, F = GeneratorSymbol("E", 1, 0), GeneratorSymbol("F", 1, 0)
    assert apply_word([], v) == v
    assert apply_word([E, F], v).poly == _x(2, 1) - _x(2, 2)
    assert apply_word([F, E], v).poly == _x(2, 1) - _x(2, 2)


def test_hand_checked_commutator():
    v = WeightVector((1, 1), _x(2, 1))
    E1, F0 = GeneratorSymbol("E", 1, 1), GeneratorSymbol("F", 1, 0)
    comm = apply_word([E1, F0], v) - apply_word([F0, E1], v)
    want = _x(2, 1, 2) - _x(2, 1) * _x(2, 2)
    assert comm.poly == want
    assert apply_H(1, 1, v).poly == want


def test_generator_symbol_parse():
    assert GeneratorSymbol.parse("F_{2,1}") == GeneratorSymbol("F", 2, 1)
    assert GeneratorSymbol.parse("E1") == GeneratorSymbol("E", 1, 0)
    with pytest.raises(ValueError):
        GeneratorSymbol("G", 1, 0)


def test_rejects_non_symmetric_input():
    with pytest.raises(ValueError):
        WeightVector((2,), _x(2, 1))


# -- independent oracle: symmetrizing divided differences in sympy ---------------------


def _to_sympy(p, xs):
    return sum(c * sp.prod([x**e for x, e in zip(xs, exps)]) for exps, c in p.items())


def _symmetrize(g, x, omega, xs):
    # sum over y in omega of g(x <-> y) / prod_{z != y} (y - z)
    total = 0
    for y in omega:
        swapped = g.xreplace({xs[x]: xs[y], xs[y]: xs[x]})
        total += swapped / sp.prod([xs[y] - xs[z] for z in omega if z != y])
    return sp.expand(sp.cancel(sp.together(total)))


def _oracle(kind, i, j, nu, f):
    n = sum(nu)
    xs = sp.symbols(f"x0:{n}")
    k = sum(nu[: i])
    if kind == "F":
        x = k - 1
        stay = [z for z in range(k - nu[i - 1], k) if z != x]
        omega = [x] + list(range(k, k + nu[i]))
    else:
        x = k
        stay = list(range(k + 1, k + nu[i]))
        omega = list(range(k - nu[i - 1], k)) + [x]
    g = _to_sympy(f, xs) * xs[x] ** j * sp.prod([xs[x] - xs[z] for z in stay])
    return _symmetrize(g, x, omega, xs), xs


CASES = [
    (nu, i)
    for n, N in ((2, 2), (2, 3), (3, 3), (3, 4))
    for nu in enumerate_compositions(n, N)
    for i in range(1, n)
]


@pytest.mark.parametrize("nu, i", CASES)
@pytest.mark.parametrize("convention", ["literal", "signed"])
def test_raise_lower_match_divided_differences(nu, i, convention):
    twist = -1 if convention == "signed" and sum(nu[: i - 1]) % 2 else 1
    for kind, op, sign in (("F", apply_F, -1), ("E", apply_E, 1)):
        if add_root(nu, i, sign) is EMPTY:
            continue
        for r in range(3):
            for b in graded_basis(nu, r):
                for j in range(3):
                    got = op(i, j, WeightVector(nu, b.poly), convention)
                    want, xs = _oracle(kind, i, j, nu, b.poly)
                    assert sp.expand(_to_sympy(got.poly, xs) - twist * want) == 0, (kind, nu, i, j, b.poly)


# -- relation suites ---------------------------------------------------------------


@pytest.mark.parametrize("n, N", [(2, 2), (2, 3), (3, 3)])
def test_signed_convention_satisfies_all_relations(n, N):
    report = verify_current_relations(n, N, 3 if n == 2 else 2, 2 if n == 2 else 1, "signed")
    assert report.passed, report.table()


def test_literal_convention_breaks_relations():
    # taken verbatim, H_{i,j} has the wrong sign at even j >= 2; [H, E] and [E, F] notice
    report = verify_current_relations(2, 2, 3, 2, "literal")
    assert {c.name for c in report.failures()} == {"C2", "C4"}
    assert report.checks["C4"].witness["relation"] == "[E1,0 F1,2]"
    assert verify_current_relations(2, 2, 3, 1, "literal").checks["C2"].passed


def test_unknown_convention():
    with pytest.raises(ValueError):
        apply_F(1, 0, WeightVector((1, 1), 1), "other")

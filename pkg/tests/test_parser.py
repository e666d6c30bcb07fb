import pytest
from hypothesis import given, settings, strategies as st

from polyrep.parser import ParseError, SymmetryError, parse_expr, parse_poly
from polyrep.sympoly import MPoly, graded_basis, render


def test_examples():
    x1, x2 = MPoly.var(3, 1), MPoly.var(3, 2)
    assert parse_poly("e(1,1)", (2, 1)).poly == x1 + x2
    assert parse_poly("X(1)*X(2) - e(2,1)", (2, 1)).poly.is_zero()
    with pytest.raises(SymmetryError) as info:
        parse_poly("X(1)", (2, 1))
    assert info.value.transposition == (1, 2)


def test_precedence_and_unary_minus():
    x = MPoly.var(2, 1)
    y = MPoly.var(2, 2)
    assert parse_poly("-X(1)^2 + 2*X(2)", (1, 1)).poly == -(x**2) + y.scale(2)
    assert parse_poly("(X(1) - X(2))^2", (1, 1)).poly == (x - y) ** 2
    assert parse_poly("3 - -2", (1, 1)).poly == 5
    assert parse_poly("h(2,2) - p(1,1)*X(1)", (1, 1)).poly == y**2 - x**2


@pytest.mark.parametrize(
    "text, position",
    [("X(1) +", 6), ("X(1) $ 2", 5), ("e(1)", 3), ("Y(1)", 0), ("(X(1)", 5), ("X(1)^", 5)],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.position == position


def test_range_errors():
    with pytest.raises(ParseError):
        parse_poly("X(3)", (1, 1))
    with pytest.raises(ParseError):
        parse_poly("e(1,3)", (1, 1))


_nus = st.sampled_from([(1, 1), (2, 1), (1, 2, 1), (3,), (0, 2, 2)])


@settings(max_examples=80, deadline=None)
@given(_nus, st.data())
def test_render_roundtrip(nu, data):
    basis = [b.poly for r in range(4) for b in graded_basis(nu, r)]
    picks = data.draw(st.lists(st.tuples(st.sampled_from(basis), st.integers(-5, 5)), max_size=4))
    p = MPoly(sum(nu))
    for b, c in picks:
        p = p + b.scale(c)
    assert parse_poly(render(p), nu).poly == p

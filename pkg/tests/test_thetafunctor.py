import pytest

from polyrep.combinat import enumerate_compositions
from polyrep.sympoly import MPoly, sym
from polyrep.thetafunctor import (
    BimoduleElement,
    Word,
    bubble_image,
    cap_ef_image,
    cap_fe_image,
    closed_bubble,
    crossing_down_image,
    crossing_up_image,
    cup_ef_image,
    cup_fe_image,
    dot_image,
    pi_image,
    pi_target,
    t_scalar,
    verify_pi,
    verify_theta,
)


def _x(n, k, e=1):
    return MPoly.var(n, k, e)


def test_bubble_examples():
    for orientation in ("cw", "ccw"):
        assert bubble_image(1, (2, 1), 0, orientation) == 1
        assert bubble_image(1, (2, 1), -1, orientation) == 0
    assert bubble_image(1, (1, 1), 1, "cw").poly == _x(2, 1) - _x(2, 2)


@pytest.mark.parametrize("nu", [c for N in range(1, 5) for c in enumerate_compositions(3, N)])
def test_closed_bubbles_match_formula(nu):
    # a real bubble with d dots has degree 2(d + 1 -+ nu_i + nu_{i+1}); compare past the spade
    for i in (1, 2):
        wbar = nu[i - 1] - nu[i]
        for dots in range(4):
            cw_r = dots + 1 - wbar
            ccw_r = dots + 1 + wbar
            # dotted real bubbles: the cw one needs nu_{i+1} > 0, the ccw one nu_i > 0
            if nu[i] > 0:
                assert closed_bubble(i, nu, dots, "cw") == bubble_image(i, nu, cw_r, "cw").poly
            if nu[i - 1] > 0:
                assert closed_bubble(i, nu, dots, "ccw") == bubble_image(i, nu, ccw_r, "ccw").poly


def test_dot_image_identity():
    word = Word([("E", 1)], (1, 1))
    x = BimoduleElement.powers(word, [2])
    assert dot_image(1, (1, 1), 0)(x) == x


def test_fe_cup_example():
    out = cup_fe_image(1, (1, 1))()
    n = 2
    word = Word([("E", 1), ("F", 1)], (1, 1))
    want = BimoduleElement.from_factors(word, [-_x(n, 2), MPoly.one(n)]) + BimoduleElement.powers(word, [0, 1])
    assert out == want
    # the same element written with the other factor moved: X1 (x) 1 - 1 (x) X2
    alt = BimoduleElement.from_factors(word, [_x(n, 1), MPoly.one(n)]) - BimoduleElement.from_factors(
        word, [MPoly.one(n), _x(n, 2)]
    )
    assert out == alt


def test_fe_cup_single_term():
    out = cup_fe_image(1, (2, 0))()
    assert out == BimoduleElement.powers(Word([("E", 1), ("F", 1)], (2, 0)), [0, 0])


def test_ef_cup_vanishes_off_range():
    assert cup_ef_image(1, (2, 0))().is_zero()


def test_cap_examples():
    word = Word([("E", 1), ("F", 1)], (1, 1))
    assert cap_fe_image(1, (1, 1))(BimoduleElement.powers(word, [0, 0])) == BimoduleElement.scalar((1, 1))
    got = cap_fe_image(1, (1, 1))(BimoduleElement.powers(word, [0, 1]))
    assert got == BimoduleElement.scalar((1, 1), _x(2, 1))
    word = Word([("F", 1), ("E", 1)], (1, 1))
    assert cap_ef_image(1, (1, 1))(BimoduleElement.powers(word, [0, 0])) == BimoduleElement.scalar((1, 1))


def test_crossing_examples():
    nu = (1, 0)
    word = Word([("E", 1), ("E", 1)], nu)
    up = crossing_up_image(1, 1, nu)
    assert up([0, 0]).is_zero()
    assert up([1, 0]) == BimoduleElement.powers(word, [0, 0])
    nu = (1, 1, 1, 1)
    swap = crossing_up_image(1, 3, nu)
    out_word = Word([("E", 3), ("E", 1)], nu)
    assert swap([2, 1]) == BimoduleElement.powers(out_word, [1, 2])


def test_down_crossing_mirrors():
    nu = (2, 0)
    word = Word([("F", 1), ("F", 1)], nu)
    down = crossing_down_image(1, 1, nu)
    assert down([0, 0]).is_zero()
    assert down([1, 0]) == BimoduleElement.powers(word, [0, 0]).scale(-1)
    assert down([0, 1]) == BimoduleElement.powers(word, [0, 0])
    nu = (1, 1, 1, 1)
    assert crossing_down_image(1, 3, nu)([2, 1]) == BimoduleElement.powers(Word([("F", 3), ("F", 1)], nu), [1, 2])


def test_scalars():
    assert t_scalar(1, 2) == t_scalar(2, 1) == 1
    assert (t_scalar(1, 2, "signed"), t_scalar(2, 1, "signed")) == (-1, 1)


def test_pi_examples():
    assert pi_image(1, 0, (3, 1)) == 2
    assert pi_image(1, 1, (1, 1)).poly == _x(2, 1) - _x(2, 2)


@pytest.mark.parametrize("j", [1, 2, 3, 4, 5])
def test_pi_is_power_sum_difference(j):
    # the bubble generating function always produces p_j(nu; i) - p_j(nu; i+1)
    for N in range(5):
        for nu in enumerate_compositions(3, N):
            for i in (1, 2):
                want = sym("p", j, nu, i) - sym("p", j, nu, i + 1)
                assert pi_image(i, j, nu).poly == want
                assert pi_target(i, j, nu, "signed") == want


def test_pi_antisymmetry_for_odd_j():
    nu = (2, 2)
    for j in (1, 3, 5):
        p = pi_image(1, j, nu).poly
        assert p.swap(1, 3).swap(2, 4) == -p


def test_pi_literal_target_differs_at_even_j():
    report = verify_pi(3, 4, (2,), "literal")
    assert not report.passed
    assert report.checks["pi"].witness["j"] % 2 == 0
    assert verify_pi(3, 3, (2,), "literal").passed is False
    assert verify_pi(3, 1, (2,), "literal").passed


@pytest.mark.parametrize("n, N", [(2, 3), (2, 4), (3, 3)])
def test_signed_relation_suite_passes(n, N):
    report = verify_theta(n, N, max_exp=2, convention="signed")
    assert report.passed, report.table()
    assert verify_pi(N, 5, (n,), "signed").passed


def test_literal_fails_only_for_adjacent_colors():
    # with all scalars 1 the square and i != j slide relations fail; the rest holds
    report = verify_theta(3, 2, max_exp=2)
    assert {c.name for c in report.failures()} <= {"square", "slide_ij"}
    assert not report.checks["square"].passed
    assert verify_theta(2, 4, max_exp=3).passed

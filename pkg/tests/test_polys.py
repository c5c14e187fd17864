import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigcert.families import phi, sigma
from trigcert.polys import (
    AlgPoly,
    CosinePoly,
    SinePoly,
    chebyshev_u,
    cosine_to_algebraic,
    eval_float,
    eval_rational,
    format_rational,
    parse_coefficients,
    parse_rational,
    reflect,
    sine_to_algebraic,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
sine_polys = st.lists(rationals, min_size=1, max_size=10).map(SinePoly)


# --- parsing -------------------------------------------------------------


def test_parse_rational_forms():
    assert parse_rational("5/4") == F(5, 4)
    assert parse_rational("-3") == -3
    assert parse_rational(" 2 / 6 ") == F(1, 3)


@pytest.mark.parametrize("text", ["0.6", "1e3", "", "1/0", "a/b", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_coefficients():
    assert parse_coefficients("5/4,1,1,1/4") == [F(5, 4), 1, 1, F(1, 4)]
    with pytest.raises(ValueError):
        parse_coefficients("1,,2")


def test_format_rational():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(-2)) == "-2"


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        SinePoly([0.5])


def test_empty_sine_poly_rejected():
    with pytest.raises(ValueError):
        SinePoly([])


# --- Chebyshev reduction ---------------------------------------------------


def test_kappa_one_lambda_reduction():
    kappa, lam = F(7, 3), F(-2, 5)
    got = sine_to_algebraic(SinePoly([kappa, 1, lam]))
    assert got == AlgPoly([kappa - lam, 2, 4 * lam])


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1], [1]), ([0, 1], [0, 2]), ([0, 0, 1], [-1, 0, 4])],
)
def test_sine_to_algebraic_small(coeffs, expected):
    assert sine_to_algebraic(SinePoly(coeffs)) == AlgPoly(expected)


def test_u_matches_sin_ratio():
    # independent oracle: U_j(cos x) = sin((j+1)x) / sin x
    us = chebyshev_u(12)
    for x in (0.3, 1.1, 2.7):
        for j, u in enumerate(us):
            assert u.eval_float(math.cos(x)) == pytest.approx(math.sin((j + 1) * x) / math.sin(x), abs=1e-9)


def test_cosine_to_algebraic_examples():
    assert cosine_to_algebraic(CosinePoly([0, 1])) == AlgPoly([0, 1])
    assert cosine_to_algebraic(CosinePoly([1])) == AlgPoly([1])
    a, b, c = F(1, 2), F(-3), F(2, 7)
    # a + b(2X^2 - 1) + c(4X^3 - 3X)
    assert cosine_to_algebraic(CosinePoly([a, 0, b, c])) == AlgPoly([a - b, -3 * c, 2 * b, 4 * c])


def test_trailing_zero_uses_effective_degree():
    p = SinePoly([1, 2, 0, 0])
    assert p.degree == 4
    assert p.effective_degree == 2
    assert sine_to_algebraic(p).degree == 1


def test_chebyshev_identity_random():
    rng = random.Random(1234)
    for _ in range(1000):
        deg = rng.randint(1, 10)
        p = SinePoly(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(deg))
        alg = sine_to_algebraic(p)
        for _ in range(100):
            x = rng.uniform(1e-6, math.pi - 1e-6)
            assert abs(eval_float(p, x) - math.sin(x) * alg.eval_float(math.cos(x))) <= 1e-9


@given(sine_polys)
def test_denominators_divide_input_lcm(p):
    lcm = 1
    for a in p.coeffs:
        lcm = lcm * a.denominator // math.gcd(lcm, a.denominator)
    for c in sine_to_algebraic(p).coeffs:
        assert lcm % c.denominator == 0


# --- reflection ------------------------------------------------------------


def test_reflect_phi_alternates():
    n = 7
    q = reflect(phi(n))
    assert q.coeffs == (F(5, 4), -1, 1, -1, 1, -1, F(2 * n - 3, 4 * n))


def test_reflect_single_term_fixed():
    assert reflect(SinePoly([F(3, 2)])) == SinePoly([F(3, 2)])


@given(sine_polys)
def test_reflect_involution(p):
    assert reflect(reflect(p)) == p


@given(sine_polys, st.floats(min_value=0, max_value=math.pi))
def test_reflect_is_x_to_pi_minus_x(p, x):
    assert eval_float(reflect(p), x) == pytest.approx(eval_float(p, math.pi - x), abs=1e-9)


# --- evaluation --------------------------------------------------------------


def test_eval_float_examples():
    assert abs(eval_float(sigma(4), 2 * math.pi / 4)) <= 1e-12
    assert eval_float(SinePoly([3, -1, F(2, 3)]), 0.0) == 0
    assert abs(eval_float(phi(3), math.pi)) <= 1e-12
    assert eval_float(CosinePoly([1, 1]), 0.0) == 2


def test_eval_rational_examples():
    p = sine_to_algebraic(SinePoly([F(5, 4), 1, F(1, 4)]))
    assert eval_rational(p, -1) == 0
    assert p == AlgPoly([1, 2, 1])
    assert eval_rational(AlgPoly(), F(7, 3)) == 0
    assert eval_rational(AlgPoly([1, 2, 1]), F(1, 2)) == F(9, 4)


def test_alg_poly_arithmetic():
    p = AlgPoly([1, 1])
    assert p * p == AlgPoly([1, 2, 1])
    assert (p * p).derivative() == AlgPoly([2, 2])
    assert (p - p).is_zero()
    assert AlgPoly([0, 0]).degree == -1

import math
from fractions import Fraction

import pytest

import quartic as q


def test_rational_arithmetic():
    assert q.Rational(1, 2) + q.Rational(1, 3) == q.Rational(5, 6)
    assert q.Rational("7/3").num == 7
    assert q.Rational("7/3").den == 3
    assert float(q.Rational(1, 4)) == 0.25
    assert str(q.Rational(-8, 6)) == "-4/3"
    assert q.Rational(5, 6).as_fraction() == Fraction(5, 6)
    assert q.Rational(Fraction(22, 7)) == q.Rational(22, 7)
    with pytest.raises(ValueError):
        q.Rational(1, 0)


def test_binomial_matches_math_comb():
    assert q.binomial(10, 5) == math.comb(10, 5)
    assert q.binomial(100, 50) == math.comb(100, 50)


def test_coefficient_table():
    assert q.quartic_coefficient(2, 0) == q.Rational(21, 8)
    assert q.quartic_polynomial(1) == [q.Rational(3, 2), q.Rational(1)]
    for l in range(7):
        assert q.quartic_coefficient(6, l) == q.quartic_coefficient_oracle(6, l)


def test_quartic_value_routes():
    exact = q.quartic_value_exact(q.Rational(1), 1)
    assert str(exact) == "5/32·π"
    assert q.quartic_value(1.0, 1) == pytest.approx(float(exact), rel=1e-15)
    assert q.quartic_value_exact(q.Rational(1, 2), 1) is None
    closed = q.quartic_value(0.7, 3)
    assert q.quartic_value_hypergeometric(0.7, 3) == pytest.approx(closed, rel=1e-12)
    assert q.quartic_value_landen_route(0.7, 3) == pytest.approx(closed, rel=1e-12)


def test_even_moment_is_pi_rational():
    moment = q.even_moment(1, 1)
    assert moment.q == q.Rational(1, 4)
    assert moment.pi_power == 1
    assert float(moment) == pytest.approx(math.pi / 4, rel=1e-15)


def test_transform_matches_closed_form():
    a = q.Rational(1)
    assert q.landen_transform(q.quartic_integrand(a, 1)) == q.quartic_transformed(a, 1)
    g = q.quartic_transformed(a, 1)
    assert g.num == [q.Rational(1, 8), q.Rational(0), q.Rational(1, 2)]


def test_rational_function_evaluation():
    f = q.RationalFunction([1], [1, 0, 1])
    assert f(0.0) == 1.0
    assert f(q.Rational(1)) == q.Rational(1, 2)
    r = q.cot_multiple(2)
    assert r(2.0) == 0.75
    assert r(q.Rational(2)) == q.Rational(3, 4)


def test_quadratic_landen_iteration():
    report = q.landen_iterate(q.QuadraticState(1, 1, 1))
    assert report.converged
    assert report.iterations == 3
    assert report.final_value == pytest.approx(2 * math.pi / math.sqrt(3), rel=1e-13)
    assert 2.7 < report.estimated_order < 3.3
    with pytest.raises(q.SingularStepError):
        q.landen_step(q.QuadraticState(1, 4, 1))


def test_sextic_landen_iteration():
    report = q.landen_iterate(q.SexticState(3, 3, 1, 2, 1))
    assert report.converged
    assert report.warnings == []
    assert report.final_value == pytest.approx(math.pi / 2, rel=1e-14)


def test_agm_and_elliptic():
    assert q.agm(1, 1) == 1.0
    assert q.elliptic_integral(1, 1) == pytest.approx(math.pi / 2, rel=1e-15)
    with pytest.raises(ValueError):
        q.agm(-1, 2)


def test_integrate_python_callables():
    assert q.integrate(lambda x: x * x, 0, 1).value == pytest.approx(1 / 3, rel=1e-14)
    assert q.integrate_half_line(lambda x: 1 / (1 + x * x)).value == pytest.approx(
        math.pi / 2, rel=1e-12
    )
    assert q.integrate_whole_line(lambda x: math.exp(-x * x)).value == pytest.approx(
        math.sqrt(math.pi), rel=1e-12
    )
    with pytest.raises(q.AccuracyError):
        q.integrate_half_line(lambda x: 1.0, max_subintervals=200)


def test_estimate_order():
    assert q.estimate_order([1e-1, 1e-2, 1e-4, 1e-8]) == pytest.approx(2.0, rel=1e-12)


def test_numeric_identity_checks():
    assert abs(q.vanishing_odd_moment(1.0, 2, 1)) < 1e-12
    pair = q.ramanujan_master_pair(1.0, 1)
    assert pair.lhs == pytest.approx(pair.rhs, rel=1e-7)
    pair = q.sqrt_derivative_pair(1.0, 0.0)
    assert pair.lhs == pytest.approx(pair.rhs, rel=1e-9)

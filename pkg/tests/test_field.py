from fractions import Fraction

import pytest

from fusscat.field import RealCyclotomicField, minpoly_two_cos_pi_over


def test_minpolys():
    assert minpoly_two_cos_pi_over(1) == (Fraction(2), Fraction(1))
    assert minpoly_two_cos_pi_over(2) == (Fraction(0), Fraction(1))
    assert minpoly_two_cos_pi_over(3) == (Fraction(-1), Fraction(1))
    # 2cos(pi/4) = sqrt(2), 2cos(pi/6) = sqrt(3), 2cos(pi/5) = golden ratio
    assert minpoly_two_cos_pi_over(4) == (Fraction(-2), Fraction(0), Fraction(1))
    assert minpoly_two_cos_pi_over(6) == (Fraction(-3), Fraction(0), Fraction(1))
    assert minpoly_two_cos_pi_over(5) == (Fraction(-1), Fraction(-1), Fraction(1))


def test_rational_field():
    F = RealCyclotomicField.for_labels([2, 3])
    assert F.degree == 1
    a = F.rational(Fraction(3, 2))
    assert float(a) == 1.5
    assert (a * a) == F.rational(Fraction(9, 4))
    assert a.sign() == 1 and (-a).sign() == -1 and F.zero.sign() == 0


def test_sqrt2_field():
    F = RealCyclotomicField.for_labels([4])
    r2 = F.generator()
    assert r2 * r2 == F.rational(2)
    assert abs(float(r2) - 2**0.5) < 1e-12
    assert (r2 - F.rational(1)).sign() == 1
    assert (r2 - F.rational(2)).sign() == -1
    inv = r2.inverse()
    assert inv * r2 == F.one
    assert r2 / r2 == F.one


def test_golden_field():
    F = RealCyclotomicField(5)
    phi = F.generator()  # 2cos(pi/5)
    assert phi * phi == phi + F.one
    assert F.two_cos_pi_over(5) == phi
    # 2cos(2pi/5)? not requested; but 2cos(pi/5) satisfies x^2 = x + 1
    assert F.two_cos_pi_over(2) == F.zero


def test_compositum():
    # An edge 4 and an edge 5 together need L = 20
    F = RealCyclotomicField.for_labels([4, 5, 3, 2])
    assert F.L == 20
    r2 = F.two_cos_pi_over(4)
    assert r2 * r2 == F.rational(2)
    g = F.two_cos_pi_over(5)
    assert g * g == g + F.one
    assert F.two_cos_pi_over(3) == F.one
    assert (r2 * g).sign() == 1


def test_division_errors():
    F = RealCyclotomicField(4)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()

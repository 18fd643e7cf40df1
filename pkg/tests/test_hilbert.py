from fractions import Fraction
from math import factorial

import pytest

from thetalab.fields import QQ
from thetalab.hilbert import (
    HilbertFit,
    NonIntegralChern,
    SingularSystem,
    _solve3,
    canonical_power,
    evaluate,
    fit_hilbert,
)
from thetalab.polys import Poly

# values of the fitted polynomial at n = 3..10, frozen from the exact
# closed form (cross-checked below by integrality and symmetry)
VALUES_3_TO_10 = (256, 945, 3048, 8811, 23232, 56628, 128986, 276991)


@pytest.fixture(scope="module")
def fit():
    return fit_hilbert(1, 10, 58)


class TestFit:
    def test_gamma(self, fit):
        assert fit.gamma == Fraction(6, factorial(10))
        assert fit.gamma == Fraction(1, 604800)

    def test_sigma_pi(self, fit):
        assert fit.sigma == -35
        assert fit.pi == 1284

    def test_chern_degree(self, fit):
        assert fit.chern_degree == 6

    def test_reproduces_inputs_exactly(self, fit):
        assert evaluate(fit, 0) == 1
        assert evaluate(fit, 1) == 10
        assert evaluate(fit, 2) == 58

    def test_forward_values(self, fit):
        for n, expected in zip(range(3, 11), VALUES_3_TO_10):
            assert evaluate(fit, n) == expected

    def test_vanishing_at_minus_1_to_5(self, fit):
        for n in range(-5, 0):
            assert evaluate(fit, n) == 0

    def test_integer_values_on_window(self, fit):
        for n in range(-10, 11):
            assert evaluate(fit, n).denominator == 1

    def test_symmetry_pointwise(self, fit):
        for n in range(-12, 13):
            assert evaluate(fit, n) == evaluate(fit, -6 - n)


class TestPolynomial:
    def test_degree_ten(self, fit):
        assert fit.polynomial().degree == 10

    def test_leading_coefficient_is_gamma(self, fit):
        poly = fit.polynomial()
        assert poly.lc() == fit.gamma
        assert poly.lc() == Fraction(fit.chern_degree, factorial(10))

    def test_coefficient_level_symmetry(self, fit):
        poly = fit.polynomial()
        x = Poly.x(QQ)
        reflected = poly.compose(-x - 6)
        assert reflected == poly

    def test_symmetry_center_matches_canonical_power(self, fit):
        assert canonical_power() == -6
        assert Fraction(canonical_power(), 2) == -3


class TestErrors:
    def test_non_integral_chern(self):
        with pytest.raises(NonIntegralChern):
            fit_hilbert(1, 10, Fraction(175, 3))

    def test_singular_system_detected(self):
        rows = ((1, 2, 3), (2, 4, 6), (0, 1, 1))
        with pytest.raises(SingularSystem):
            _solve3(rows, (1, 2, 3))

    def test_chern_linear_in_inputs(self):
        # 10! * gamma = 90*p0 - 20*p1 + 2*p2 by Cramer elimination, so
        # integer inputs always pass the integrality check
        for p0, p1, p2 in ((1, 10, 58), (2, 3, 4), (0, 0, 1), (7, -1, 5)):
            fit = fit_hilbert(p0, p1, p2)
            assert fit.chern_degree == 90 * p0 - 20 * p1 + 2 * p2


class TestEvaluateRational:
    def test_evaluate_at_fraction(self, fit):
        center = evaluate(fit, Fraction(-3))
        assert center == 0
        assert evaluate(fit, Fraction(-7, 2)) == evaluate(fit, Fraction(-5, 2))

import itertools
from fractions import Fraction

import pytest

from YM_Beta.gaussian import (
    ZERO_INDEX, GaussianIntegrand, WickTerm, add_index, kernel_derivative, kernel_product, moment_oracle,
    unit, wick_expand, wick_moment,
)


class TestMultiIndex:
    def test_unit(self):
        assert unit(2) == (0, 1, 0, 0)
        assert unit(1, 2) == (2, 0, 0, 0)

    def test_add_index(self):
        assert add_index(unit(1), unit(4, 3)) == (1, 0, 0, 3)


class TestIntegrand:
    def test_cancelling_terms_vanish(self):
        first = GaussianIntegrand.monomial(unit(1), 2, p=1)
        total = first + first.scaled(-1)
        assert total.is_zero

    def test_coefficients_are_fractions(self):
        integrand = GaussianIntegrand.monomial(ZERO_INDEX, 3)
        assert integrand.terms == {(ZERO_INDEX, 0, 0, 0): Fraction(3)}


class TestWickExpand:
    def test_constant_leading_term(self):
        terms = wick_expand(GaussianIntegrand.monomial(ZERO_INDEX), max_order=0)
        assert terms == [WickTerm(ZERO_INDEX, Fraction(1), 2)]

    def test_quadratic_moment(self):
        terms = wick_expand(GaussianIntegrand.monomial(unit(1, 2)), max_order=0)
        assert terms == [WickTerm(ZERO_INDEX, Fraction(2), 3)]

    def test_first_subleading_order(self):
        terms = wick_expand(GaussianIntegrand.monomial(ZERO_INDEX), max_order=1)
        assert len(terms) == 5
        second_derivatives = [t for t in terms if t.tau_power == 3]
        assert {t.beta for t in second_derivatives} == {unit(m, 2) for m in range(1, 5)}
        assert all(t.coefficient == 1 for t in second_derivatives)

    def test_odd_monomial_needs_derivative(self):
        terms = wick_expand(GaussianIntegrand.monomial(unit(3)), max_order=0)
        assert terms == [WickTerm(unit(3), Fraction(2), 3)]

    def test_prefactor_carried(self):
        terms = wick_expand(GaussianIntegrand.monomial(ZERO_INDEX, p=1, q=2, r=3), max_order=0)
        assert terms[0].prefactor == (1, 2, 3)

    def test_negative_order_raises(self):
        with pytest.raises(ValueError, match="max_order"):
            wick_expand(GaussianIntegrand.monomial(ZERO_INDEX), max_order=-1)


class TestMomentOracle:
    @pytest.mark.parametrize("alpha", [(0, 0, 0, 0), (2, 0, 0, 0), (2, 2, 0, 0), (4, 0, 0, 0), (2, 4, 0, 2)])
    def test_expansion_matches_quadrature(self, alpha):
        tau = 1.3
        assert wick_moment(alpha, tau) == pytest.approx(moment_oracle(alpha, tau), rel=1e-9)

    def test_odd_moment_vanishes(self):
        assert wick_moment((1, 0, 0, 0), 0.7) == 0
        assert moment_oracle((1, 0, 0, 0), 0.7) == pytest.approx(0, abs=1e-10)

    def test_oracle_rejects_nonpositive_tau(self):
        with pytest.raises(ValueError, match="tau must be positive"):
            moment_oracle((0, 0, 0, 0), 0.0)


def _monomials(max_degree):
    return [alpha for alpha in itertools.product(range(max_degree + 1), repeat=4) if sum(alpha) <= max_degree]


def _by_key(terms):
    return {(t.beta, t.tau_power, t.prefactor): t.coefficient for t in terms}


class TestMomentGrid:
    @pytest.mark.parametrize("tau", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("alpha", _monomials(6))
    def test_expansion_matches_quadrature(self, alpha, tau):
        assert wick_moment(alpha, tau) == pytest.approx(moment_oracle(alpha, tau), rel=1e-9, abs=1e-8)

    @pytest.mark.parametrize("alpha", [(0, 0, 0, 0), (2, 0, 0, 0), (2, 2, 0, 0), (4, 0, 2, 0), (2, 2, 2, 0)])
    def test_tau_scaling(self, alpha):
        weight = 2 + sum(alpha) // 2
        for tau in (0.5, 2.0, 3.0):
            assert wick_moment(alpha, tau) == pytest.approx(tau ** -weight * wick_moment(alpha, 1.0), rel=1e-12)

    def test_expansion_is_linear(self):
        first = GaussianIntegrand.monomial(unit(1, 2), p=1, r=2) + GaussianIntegrand.monomial(unit(2), 3)
        second = GaussianIntegrand.monomial(ZERO_INDEX, q=1) + GaussianIntegrand.monomial(unit(2), -1)
        combined = _by_key(wick_expand(first.scaled(2) + second.scaled(Fraction(-3, 2)), max_order=2))
        expected = {}
        for factor, integrand in ((Fraction(2), first), (Fraction(-3, 2), second)):
            for key, value in _by_key(wick_expand(integrand, max_order=2)).items():
                expected[key] = expected.get(key, Fraction(0)) + factor * value
        assert combined == {key: value for key, value in expected.items() if value != 0}


class TestKernelDerivative:
    def test_undifferentiated(self):
        assert kernel_derivative() == {(ZERO_INDEX, -2): Fraction(1)}

    def test_spatial(self):
        assert kernel_derivative((1,)) == {(unit(1), -3): Fraction(-1, 2)}

    def test_second_spatial_same_index(self):
        assert kernel_derivative((2, 2)) == {
            (ZERO_INDEX, -3): Fraction(-1, 2),
            (unit(2, 2), -4): Fraction(1, 4),
        }

    def test_time(self):
        expected = {(ZERO_INDEX, -3): Fraction(-2)}
        expected.update({(unit(m, 2), -4): Fraction(1, 4) for m in range(1, 5)})
        assert kernel_derivative(time=1) == expected

    def test_bad_index(self):
        with pytest.raises(ValueError, match="derivative index"):
            kernel_derivative((5,))

    def test_product(self):
        integrand = kernel_product(kernel_derivative(), kernel_derivative((1,)), first_power=1)
        assert integrand.terms == {(unit(1), -1, -3, 0): Fraction(-1, 2)}

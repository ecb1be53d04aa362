import math
from fractions import Fraction

import pytest

import YM_Beta.state as state
from YM_Beta.errors import UnsupportedExponentError
from YM_Beta.tintegrals import (
    TRationalTerm, absorb_tau, clear_tau, irwin_hall_density, log_coefficient, log_coefficient_sum,
    merge_terms, numeric_singular_fit, t_integral, wheel_convergence_check,
)


def term(p, q, r, coeff=1):
    return TRationalTerm(Fraction(coeff), p, q, r)


class TestTerms:
    def test_clear_tau(self):
        assert clear_tau(1, 3, 2, 3).exponents == (0, 1, 3)
        assert clear_tau(1, 3, 3, 4).exponents == (1, 1, 4)

    def test_absorb_tau(self):
        assert absorb_tau(term(0, 0, 0, 5), 2) == term(2, 2, 2, 5)

    def test_homogeneity(self):
        assert term(1, 1, 4).homogeneity == -2

    def test_merge(self):
        merged = merge_terms([term(0, 1, 3, 1), term(0, 1, 3, -1), term(1, 1, 4, 2), term(1, 1, 4, 1)])
        assert merged == [term(1, 1, 4, 3)]


class TestLogCoefficient:
    @pytest.mark.parametrize("exponents,expected", [
        ((0, 1, 3), Fraction(-1, 2)),
        ((1, 0, 3), Fraction(-1, 2)),
        ((1, 1, 4), Fraction(-1, 6)),
        ((2, 0, 4), Fraction(-1, 3)),
        ((0, 0, 2), Fraction(-1)),
    ])
    def test_beta_function_values(self, exponents, expected):
        assert log_coefficient(term(*exponents)) == expected

    def test_not_log_divergent(self):
        assert log_coefficient(term(0, 0, 3)) == 0
        assert log_coefficient(term(0, 0, 1)) == 0

    def test_linear_in_coefficient(self):
        assert log_coefficient(term(0, 1, 3, Fraction(-2, 3))) == Fraction(1, 3)

    def test_sum(self):
        assert log_coefficient_sum([term(0, 1, 3), term(1, 0, 3), term(0, 0, 3)]) == -1

    def test_negative_r_rejected(self):
        with pytest.raises(UnsupportedExponentError, match="outside"):
            log_coefficient(term(0, 0, -1))

    def test_single_variable_pole_rejected(self):
        with pytest.raises(UnsupportedExponentError, match="L-dependent"):
            log_coefficient(term(-1, 0, 1))


class TestNumericFit:
    def test_integral_of_constant(self):
        assert t_integral(term(-1, -1, 0), 0.5, 1.0) == pytest.approx(0.4804530139182014, rel=1e-9)

    def test_log_divergent_matches_exact(self):
        fitted = numeric_singular_fit(term(0, 1, 3))
        assert fitted == pytest.approx(-0.5, abs=1e-3)

    def test_convergent_integral_has_no_log(self):
        assert numeric_singular_fit(term(0, 0, 1)) == pytest.approx(0.0, abs=1e-3)

    def test_bad_grid(self):
        with pytest.raises(ValueError, match="at least 3"):
            numeric_singular_fit(term(0, 1, 3), eps_grid=[1e-3, 1e-4])

    def test_grid_from_state(self):
        state.EPS_GRID = (2.0, 1.0, 0.5)
        with pytest.raises(ValueError, match="below L"):
            numeric_singular_fit(term(0, 1, 3))

    @pytest.mark.parametrize("exponents,expected", [
        ((0, 0, 3), 0.0),
        ((1, 1, 4), -1 / 6),
        ((2, 0, 4), -1 / 3),
    ])
    def test_fit_matches_beta_values(self, exponents, expected):
        assert numeric_singular_fit(term(*exponents)) == pytest.approx(expected, abs=1e-3)

    @pytest.mark.parametrize("exponents", [(0, 1, 3), (1, 1, 4), (2, 0, 4), (0, 0, 3)])
    def test_fit_independent_of_L(self, exponents):
        at_one = numeric_singular_fit(term(*exponents), L=1.0)
        at_half = numeric_singular_fit(term(*exponents), L=0.5)
        assert at_one == pytest.approx(at_half, abs=1e-3)


# every (p, q, r) with 0 <= p, q <= 4 and 0 <= r <= 8
_GRID = [(p, q, r) for p in range(5) for q in range(5) for r in range(9)]
# below h = -3 the eps^(h+2) power swamps the log in double precision; above h = 0 no singular term is left
_RESOLVABLE = [(p, q, r) for p, q, r in _GRID if p + q - r >= -3 and p + q - r <= 0]


class TestExponentGrid:
    def test_beta_symmetry(self):
        for p, q, r in _GRID:
            assert log_coefficient(term(p, q, r)) == log_coefficient(term(q, p, r))

    def test_log_only_at_critical_homogeneity(self):
        for p, q, r in _GRID:
            value = log_coefficient(term(p, q, r))
            if p + q - r == -2:
                assert value == -Fraction(math.factorial(p) * math.factorial(q), math.factorial(p + q + 1))
            else:
                assert value == 0

    @pytest.mark.parametrize("exponents", _RESOLVABLE)
    def test_fit_matches_exact(self, exponents):
        exact = float(log_coefficient(term(*exponents)))
        assert numeric_singular_fit(term(*exponents)) == pytest.approx(exact, abs=1e-3)


class TestWheels:
    def test_irwin_hall(self):
        assert irwin_hall_density(0.5, 1) == 1
        assert irwin_hall_density(1.0, 2) == 1
        assert irwin_hall_density(-0.1, 3) == 0

    def test_two_vertices_diverge(self):
        assert not wheel_convergence_check(2).bounded

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_three_or_more_vertices_bounded(self, n):
        report = wheel_convergence_check(n)
        assert report.bounded
        assert report.n_vertices == n
        assert abs(report.log_coefficient) < 1e-3

    @pytest.mark.parametrize("n", [1, 6])
    def test_vertex_range(self, n):
        with pytest.raises(ValueError, match="n_vertices"):
            wheel_convergence_check(n)

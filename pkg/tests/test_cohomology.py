from fractions import Fraction

import pytest
import sympy as sp

import YM_Beta.state as state
from YM_Beta.cohomology import (
    CohomologyClass, beta_one_loop, coboundary_B_Bdual, coboundary_F_Bdual, coupling_table, critical_lambda,
    diagram_classes, first_order_action, framing_factor, reduce_to_class, running_coupling,
)
from YM_Beta.constants import BB, DADA, FB, FF, LIE_SLOT_ADJOINT, LIE_SLOT_MATTER
from YM_Beta.diagrams import LocalFunctional
from YM_Beta.errors import LandauPoleError, ReductionError
from YM_Beta.lie import adjoint_representation, builtin_algebra, builtin_representation, make_algebra


def _eps_f(offset=0):
    f = {}
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        f[(a + offset, b + offset, c + offset)] = 1
        f[(b + offset, a + offset, c + offset)] = -1
    return f


class TestClasses:
    def test_coboundaries_are_exact(self):
        assert reduce_to_class(coboundary_F_Bdual()).coefficient == 0
        assert reduce_to_class(coboundary_B_Bdual()).coefficient == 0

    def test_action_class(self):
        assert reduce_to_class(first_order_action()).coefficient == Fraction(1, 2)

    def test_basis_classes(self):
        for key in (FF, FB, BB):
            assert reduce_to_class(LocalFunctional({key: 1})).coefficient == 1
        assert reduce_to_class(LocalFunctional({DADA: 1})).coefficient == 2

    def test_raw_terms_rejected(self):
        with pytest.raises(ReductionError) as info:
            reduce_to_class(LocalFunctional({("M", 2, 2): 1}))
        assert info.value.module == "cohomology"

    def test_class_plus_keeps_slot(self):
        total = CohomologyClass(Fraction(1), LIE_SLOT_ADJOINT).plus(CohomologyClass(Fraction(2)))
        assert total == CohomologyClass(Fraction(3), LIE_SLOT_ADJOINT)

    def test_diagram_classes(self):
        classes = diagram_classes(workers=1)
        assert classes["I+II"] == CohomologyClass(Fraction(-4, 3), LIE_SLOT_ADJOINT)
        assert classes["III"].coefficient == 1
        assert classes["IV"].coefficient == -4
        assert classes["V"] == CohomologyClass(Fraction(8, 3), LIE_SLOT_MATTER)


class TestFraming:
    def test_values(self):
        assert framing_factor("action") == Fraction(1, 2)
        assert framing_factor("ff") == 1

    def test_unknown(self):
        with pytest.raises(ValueError, match="framing must be one of"):
            framing_factor("other")


class TestBetaOneLoop:
    def test_su3_pure(self, su3):
        result = beta_one_loop(su3.data)
        assert result.casimir == 12
        assert result.adjoint_class == Fraction(-13, 3)
        assert result.matter_class == Fraction(8, 3)
        assert result.b == -26
        assert result.asymptotically_free

    def test_su2_pure(self, su2):
        assert beta_one_loop(su2.data).b == Fraction(-52, 3)

    def test_su2_epsilon(self):
        assert beta_one_loop(builtin_algebra("su2-eps").data).b == Fraction(-13, 3)

    def test_ff_framing_doubles(self, su3):
        assert beta_one_loop(su3.data, framing="ff").b == -52

    def test_default_framing_from_state(self, su3):
        state.DEFAULT_FRAMING = "ff"
        result = beta_one_loop(su3.data)
        assert result.framing == "ff"
        assert result.framing_factor == 1

    def test_adjoint_matter(self, su3):
        L = su3.data
        result = beta_one_loop(L, [(adjoint_representation(L), 1)])
        assert result.matter == 12
        assert result.b == Fraction(-10)

    @pytest.mark.parametrize("flavours,free", [(4, True), (5, False)])
    def test_su3_flavour_threshold(self, su3, su3_fund_conj, flavours, free):
        result = beta_one_loop(su3.data, [(su3_fund_conj, flavours)])
        assert result.b == -26 + Fraction(16, 3) * flavours
        assert result.asymptotically_free is free

    def test_real_and_complex_fundamental_agree(self, su3, su3_fund_conj):
        real = builtin_representation(su3, "fund-real")
        assert beta_one_loop(su3.data, [(real, 2)]).b == beta_one_loop(su3.data, [(su3_fund_conj, 2)]).b

    def test_kappa_rescaling(self):
        L = make_algebra(3, _eps_f(), 3 * sp.eye(3))
        assert beta_one_loop(L).b == Fraction(-13, 9)

    def test_per_factor_fallback(self):
        f = dict(_eps_f())
        f.update(_eps_f(3))
        L = make_algebra(6, f, sp.diag(1, 1, 1, 2, 2, 2), name="su2+su2")
        result = beta_one_loop(L)
        assert result.b is None
        assert [factor.b for factor in result.per_factor] == [Fraction(-13, 3), Fraction(-13, 6)]
        assert result.asymptotically_free

    def test_bad_multiplicity(self, su3, su3_fund_conj):
        with pytest.raises(ValueError, match="positive integer"):
            beta_one_loop(su3.data, [(su3_fund_conj, 0)])

    def test_worker_count_does_not_change_b(self, su3):
        assert beta_one_loop(su3.data, workers=1).b == beta_one_loop(su3.data, workers=8).b


class TestRunningCoupling:
    def test_reference_scale(self):
        assert running_coupling(-44, 1.2, 1.0) == pytest.approx(1.2)

    def test_free_theory_shrinks_at_short_distance(self):
        assert running_coupling(-44, 1.0, 0.01) < 1.0
        assert running_coupling(-44, 1.0, 2.0) > 1.0

    def test_zero_b_is_constant(self):
        assert running_coupling(0, 0.7, 1e6) == pytest.approx(0.7)
        assert critical_lambda(0, 0.7) is None

    def test_landau_pole(self):
        pole = critical_lambda(-44, 1.0)
        assert 5.0 < pole < 7.0
        with pytest.raises(LandauPoleError) as info:
            running_coupling(-44, 1.0, 10.0)
        assert info.value.critical_lambda == pytest.approx(pole)

    def test_table(self):
        rows = coupling_table(-44, 1.0, 0.1, 100.0, 7)
        assert len(rows) == 7
        assert rows[0].lam == pytest.approx(0.1)
        assert rows[0].g < 1.0
        assert rows[-1].pole and rows[-1].g is None
        assert not rows[0].pole

    def test_table_validation(self):
        with pytest.raises(ValueError, match="below lambda_max"):
            coupling_table(-44, 1.0, 10.0, 1.0, 5)
        with pytest.raises(ValueError, match="at most"):
            coupling_table(-44, 1.0, 0.1, 1.0, 10 ** 6)
        with pytest.raises(ValueError, match="must be positive"):
            coupling_table(-44, 0.0, 0.1, 1.0, 5)

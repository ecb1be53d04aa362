import random
from fractions import Fraction

import pytest
import sympy as sp

from YM_Beta.errors import InvariantViolation, ProportionalityError, StructuralError, UnknownNameError
from YM_Beta.lie import (
    adjoint_representation, builtin_algebra, builtin_representation, casimir_adjoint, casimir_per_factor,
    change_of_basis, direct_sum, lie_factor_matter, lie_factor_matter_per_factor, make_algebra,
    make_representation, require_valid, simple_factors, validate,
)


def _eps_f():
    f = {}
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        f[(a, b, c)] = 1
        f[(b, a, c)] = -1
    return f


def _su2_plus_su2():
    """su(2) (+) su(2) with epsilon brackets on each block and identity kappa."""
    f = dict(_eps_f())
    for (a, b, c), value in _eps_f().items():
        f[(a + 3, b + 3, c + 3)] = value
    return make_algebra(6, f, sp.eye(6), name="su2+su2")


def _random_invertible(size, rng):
    """Unit lower times upper triangular with nonzero diagonal, exact rational entries."""
    def entry():
        return sp.Rational(rng.randint(-4, 4), rng.randint(1, 3))

    lower = sp.Matrix(size, size, lambda i, j: 1 if i == j else (entry() if i > j else 0))
    diagonal = [sp.Rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(size)]
    upper = sp.Matrix(size, size, lambda i, j: diagonal[i] if i == j else (entry() if i < j else 0))
    return lower * upper


class TestValidation:
    def test_builtins_are_valid(self):
        for name in ("su2", "su3", "su2-eps"):
            assert validate(builtin_algebra(name).data) == []

    def test_antisymmetry_violation(self):
        L = make_algebra(3, {(1, 2, 3): 1}, sp.eye(3))
        issues = validate(L)
        assert any(issue.invariant == "antisymmetry" for issue in issues)

    def test_degenerate_kappa(self):
        L = make_algebra(3, _eps_f(), sp.diag(1, 1, 0))
        assert any(issue.invariant == "kappa nondegenerate" for issue in validate(L))

    def test_non_invariant_kappa(self):
        L = make_algebra(3, _eps_f(), sp.diag(1, 2, 3))
        assert any(issue.invariant == "kappa invariance" for issue in validate(L))

    def test_jacobi_violation(self):
        f = {(1, 2, 3): 1, (2, 1, 3): -1, (1, 3, 3): 1, (3, 1, 3): -1, (2, 3, 1): 1, (3, 2, 1): -1}
        L = make_algebra(3, f, sp.eye(3))
        assert any(issue.invariant == "jacobi" for issue in validate(L))

    def test_require_valid_raises(self):
        with pytest.raises(InvariantViolation, match="antisymmetry"):
            require_valid(make_algebra(3, {(1, 2, 3): 1}, sp.eye(3)))

    def test_representation_property_violation(self):
        L = builtin_algebra("su2-eps").data
        rep = make_representation(3, 2, {(1, 1, 2): 1, (1, 2, 1): -1}, sp.eye(2))
        assert validate(rep) == []
        assert any(issue.invariant == "representation property" for issue in validate(rep, L))

    def test_mu_invariance_violation(self):
        rep = make_representation(3, 2, {(1, 1, 2): 1, (1, 2, 1): 1}, sp.eye(2))
        assert any(issue.invariant == "mu invariance" for issue in validate(rep))

    def test_dimension_mismatch(self):
        rep = make_representation(8, 1, {}, [[1]])
        with pytest.raises(StructuralError):
            validate(rep, builtin_algebra("su2").data)

    def test_index_out_of_range(self):
        with pytest.raises(StructuralError, match="out of range"):
            make_algebra(3, {(1, 2, 4): 1}, sp.eye(3))


class TestCasimir:
    @pytest.mark.parametrize("N", [2, 3, 4])
    def test_su_n(self, N):
        assert casimir_adjoint(builtin_algebra(f"su{N}").data) == 4 * N

    def test_su2_epsilon(self):
        assert casimir_adjoint(builtin_algebra("su2-eps").data) == 2

    def test_kappa_rescaling(self):
        L = builtin_algebra("su2-eps").data
        scaled = make_algebra(3, L.f, 3 * sp.eye(3))
        assert casimir_adjoint(scaled) == Fraction(2, 3)

    def test_not_proportional(self):
        L = make_algebra(6, _su2_plus_su2().f, sp.diag(1, 1, 1, 2, 2, 2))
        with pytest.raises(ProportionalityError) as info:
            casimir_adjoint(L)
        assert info.value.residual


class TestMatterFactor:
    @pytest.mark.parametrize("rep", ["fund+conj", "fund-real"])
    def test_fundamental(self, su3, rep):
        assert lie_factor_matter(su3.data, builtin_representation(su3, rep)) == 4

    def test_adjoint_matches_casimir(self, su3):
        L = su3.data
        assert lie_factor_matter(L, adjoint_representation(L)) == casimir_adjoint(L)

    def test_trivial_and_zero(self, su2):
        assert lie_factor_matter(su2.data, builtin_representation(su2, "trivial")) == 0
        assert lie_factor_matter(su2.data, builtin_representation(su2, "zero")) == 0

    def test_additive_under_direct_sum(self, su2):
        fund = builtin_representation(su2, "fund+conj")
        adj = builtin_representation(su2, "adjoint")
        total = direct_sum(fund, adj)
        assert lie_factor_matter(su2.data, total) == lie_factor_matter(su2.data, fund) + lie_factor_matter(su2.data, adj)

    def test_basis_independent(self, su2):
        rep = builtin_representation(su2, "fund-real")
        P = sp.Matrix([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 1, 1]])
        moved = change_of_basis(rep, P)
        assert validate(moved, su2.data) == []
        assert lie_factor_matter(su2.data, moved) == lie_factor_matter(su2.data, rep)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_basis_change(self, su2, seed):
        rep = builtin_representation(su2, "fund-real" if seed % 2 else "adjoint")
        P = _random_invertible(rep.dimV, random.Random(seed))
        moved = change_of_basis(rep, P)
        assert validate(moved, su2.data) == []
        assert lie_factor_matter(su2.data, moved) == lie_factor_matter(su2.data, rep)

    def test_wrong_algebra(self, su2, su3):
        with pytest.raises(StructuralError, match="generators"):
            lie_factor_matter(su2.data, builtin_representation(su3, "adjoint"))


class TestSimpleFactors:
    def test_simple(self, su3):
        assert simple_factors(su3.data) == [tuple(range(1, 9))]

    def test_direct_sum_blocks(self):
        L = _su2_plus_su2()
        assert simple_factors(L) == [(1, 2, 3), (4, 5, 6)]
        assert [c.value for c in casimir_per_factor(L)] == [2, 2]

    def test_matter_per_factor(self):
        L = _su2_plus_su2()
        rep = adjoint_representation(L)
        assert [c.value for c in lie_factor_matter_per_factor(L, rep)] == [2, 2]


class TestBuiltins:
    def test_dimensions(self):
        assert builtin_algebra("su2").data.dim == 3
        assert builtin_algebra("SU(3)").data.dim == 8

    def test_cached(self):
        assert builtin_algebra("su3") is builtin_algebra("su3")

    def test_unknown_algebra_suggests(self):
        with pytest.raises(UnknownNameError) as info:
            builtin_algebra("su9")
        assert info.value.suggestions

    def test_unknown_representation(self, su2):
        with pytest.raises(UnknownNameError, match="adjont"):
            builtin_representation(su2, "adjont")

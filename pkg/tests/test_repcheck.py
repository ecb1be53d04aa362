from fractions import Fraction

import pytest

from YM_Beta.errors import StructuralError
from YM_Beta.repcheck import (
    K1, K2, S_MINUS, S_PLUS, TRIVIAL, Spin4Rep, has_trivial_summand, matter_obstruction_check,
    su2_clebsch_gordan, sym_power, tensor_decompose,
)

HALF = Fraction(1, 2)


class TestClebschGordan:
    def test_spin_half_squared(self):
        assert list(su2_clebsch_gordan(HALF, HALF)) == [0, 1]

    def test_range(self):
        assert list(su2_clebsch_gordan(Fraction(1), Fraction(3, 2))) == [HALF, Fraction(3, 2), Fraction(5, 2)]


class TestSpin4Rep:
    def test_labels_validated(self):
        with pytest.raises(StructuralError, match="half-integer"):
            Spin4Rep.of([(Fraction(1, 3), 0)])
        with pytest.raises(StructuralError, match="half-integer"):
            Spin4Rep.of([(-1, 0)])

    def test_dimension(self):
        assert S_PLUS.dimension == 2
        assert K1.dimension == 4
        assert K2.dimension == 12

    def test_sum_and_text(self):
        rep = S_PLUS + S_PLUS + TRIVIAL
        assert rep.multiplicity(HALF, 0) == 2
        assert str(rep) == "(0,0) + 2(1/2,0)"
        assert str(Spin4Rep.of()) == "0"

    def test_sym_power(self):
        assert sym_power(2, "-") == Spin4Rep.of([(0, 1)])
        assert sym_power(0) == TRIVIAL
        with pytest.raises(ValueError, match="chirality"):
            sym_power(1, "x")


class TestTensorDecompose:
    def test_chiral_spinors(self):
        product = tensor_decompose(S_PLUS, S_MINUS)
        assert product == Spin4Rep.of([(HALF, HALF)])
        assert not has_trivial_summand(product)

    def test_spinor_square_has_singlet(self):
        product = tensor_decompose(S_PLUS, S_PLUS)
        assert product.multiplicity(0, 0) == 1
        assert product.multiplicity(1, 0) == 1

    def test_matter_obstruction(self):
        product, trivial = matter_obstruction_check()
        assert not trivial
        assert product.dimension == 48
        assert product == Spin4Rep.from_counts({
            (Fraction(0), Fraction(1)): 1,
            (Fraction(1), Fraction(0)): 1,
            (HALF, HALF): 2,
            (Fraction(1), Fraction(1)): 2,
            (Fraction(3, 2), HALF): 1,
            (HALF, Fraction(3, 2)): 1,
        })

    def test_matches_product_of_components(self):
        assert tensor_decompose(K1, K2) == tensor_decompose(K2, K1)

    @pytest.mark.parametrize("first", [TRIVIAL, S_PLUS, S_MINUS, K1, sym_power(3, "-")])
    @pytest.mark.parametrize("second", [S_PLUS, K1, K2, S_PLUS + S_MINUS])
    def test_commutative(self, first, second):
        assert tensor_decompose(first, second) == tensor_decompose(second, first)

    @pytest.mark.parametrize("first,second,third", [
        (S_PLUS, S_MINUS, K1),
        (S_PLUS, S_PLUS, S_PLUS),
        (K1, S_MINUS + TRIVIAL, sym_power(2)),
        (sym_power(3), K1, S_MINUS),
    ])
    def test_associative(self, first, second, third):
        left = tensor_decompose(tensor_decompose(first, second), third)
        right = tensor_decompose(first, tensor_decompose(second, third))
        assert left == right
        assert left.dimension == first.dimension * second.dimension * third.dimension

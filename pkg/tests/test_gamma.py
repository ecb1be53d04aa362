import itertools

import sympy as sp

from YM_Beta.spacetime import gamma_algebra
from YM_Beta.spacetime.gamma import expected_trace4


class TestGammaAlgebra:
    def test_clifford_relation(self):
        assert gamma_algebra().clifford_defects() == []

    def test_hermitian(self):
        gamma = gamma_algebra()
        for i in range(1, 5):
            assert gamma.gamma(i).H == gamma.gamma(i)

    def test_squares_to_identity(self):
        gamma = gamma_algebra()
        for i in range(1, 5):
            assert gamma.gamma(i) ** 2 == sp.eye(4)

    def test_entry_is_one_based(self):
        gamma = gamma_algebra()
        assert gamma.entry(4, 1, 3) == 1
        assert gamma.entry(4, 1, 1) == 0

    def test_four_gamma_traces(self):
        gamma = gamma_algebra()
        for i, a, j, b in itertools.product(range(1, 5), repeat=4):
            assert gamma.trace4(i, a, j, b) == expected_trace4(i, a, j, b)

    def test_trace_values(self):
        assert expected_trace4(1, 1, 2, 2) == 4
        assert expected_trace4(1, 2, 1, 2) == -4
        assert expected_trace4(1, 1, 1, 1) == 4

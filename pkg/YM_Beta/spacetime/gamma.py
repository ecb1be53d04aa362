"""Euclidean gamma matrices on the four spinor components.

    Gamma^k = [[0, -i sigma_k], [i sigma_k, 0]]   (k = 1, 2, 3)
    Gamma^4 = [[0, 1], [1, 0]]

with sigma_k the Pauli matrices.  They satisfy
Gamma^i Gamma^j + Gamma^j Gamma^i = 2 s delta^{ij} with s = +1.  The Euclidean
Clifford algebra in four dimensions has no real 4x4 representation, so
entries are Gaussian rationals.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import sympy as sp

from YM_Beta.constants import SPACETIME_INDICES
from YM_Beta.exact import to_fraction

CLIFFORD_SIGN = 1

_PAULI = (
    sp.Matrix([[0, 1], [1, 0]]),
    sp.Matrix([[0, -sp.I], [sp.I, 0]]),
    sp.Matrix([[1, 0], [0, -1]]),
)


def _block(upper_right: sp.Matrix, lower_left: sp.Matrix) -> sp.ImmutableMatrix:
    zero = sp.zeros(2, 2)
    return sp.ImmutableMatrix(
        sp.Matrix.vstack(sp.Matrix.hstack(zero, upper_right), sp.Matrix.hstack(lower_left, zero))
    )


@dataclass(frozen=True)
class GammaAlgebra:
    matrices: Tuple[sp.ImmutableMatrix, ...]
    clifford_sign: int = CLIFFORD_SIGN

    def gamma(self, i: int) -> sp.ImmutableMatrix:
        return self.matrices[i - 1]

    def entry(self, i: int, p: int, q: int) -> sp.Expr:
        """Gamma^i[p][q], 1-based."""
        return self.matrices[i - 1][p - 1, q - 1]

    def clifford_defects(self) -> List[Tuple[int, int]]:
        """Index pairs where the Clifford relation fails (empty when it holds)."""
        failures = []
        for i, j in itertools.product(SPACETIME_INDICES, repeat=2):
            anticommutator = self.gamma(i) * self.gamma(j) + self.gamma(j) * self.gamma(i)
            expected = 2 * self.clifford_sign * (1 if i == j else 0) * sp.eye(4)
            if (anticommutator - expected).applyfunc(sp.expand) != sp.zeros(4, 4):
                failures.append((i, j))
        return failures

    def trace4(self, i: int, a: int, j: int, b: int) -> Fraction:
        """tr(Gamma^i Gamma^a Gamma^j Gamma^b) as an exact rational."""
        product = self.gamma(i) * self.gamma(a) * self.gamma(j) * self.gamma(b)
        return to_fraction(sp.expand(product.trace()), "gamma trace")


def _delta(x: int, y: int) -> int:
    return 1 if x == y else 0


def expected_trace4(i: int, a: int, j: int, b: int) -> Fraction:
    d = _delta
    return Fraction(4 * (d(i, a) * d(j, b) - d(i, j) * d(a, b) + d(i, b) * d(a, j)))


@lru_cache(maxsize=1)
def gamma_algebra() -> GammaAlgebra:
    matrices = [_block(-sp.I * sigma, sp.I * sigma) for sigma in _PAULI]
    matrices.append(_block(sp.eye(2), sp.eye(2)))
    return GammaAlgebra(tuple(matrices))

"""Lie-theoretic loop factors C(g) and C(V).

Both factors come from the same contraction.  For action matrices A^a on a
space with invariant pairing G,

    M^{ab} = sum G^{-1}_{kl} G_{mn} A^a_{mk} A^b_{nl} = tr(G^{-1} (A^a)^T G A^b),

which is basis independent and equals -tr(A^a A^b) when G is invariant.  The
adjoint loop uses A = ad, G = kappa; the matter loop uses the representation
matrices with G = mu.  The factor is the single rational c with M = c * kappa.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy as sp

from YM_Beta.errors import ProportionalityError, StructuralError
from YM_Beta.exact import is_zero, to_fraction
from YM_Beta.lie.data import (
    LieAlgebraData,
    RepresentationData,
    make_algebra,
    make_representation,
)

logger = logging.getLogger("YM_Beta")


@dataclass(frozen=True)
class FactorConstant:
    """Loop factor restricted to one simple ideal (basis indices are 1-based)."""

    indices: Tuple[int, ...]
    value: Fraction


# ---------------------------------------------------------------------------
# Contraction
# ---------------------------------------------------------------------------

def _loop_tensor(matrices: Sequence[sp.Matrix], G, G_inv) -> sp.Matrix:
    n = len(matrices)
    M = sp.zeros(n, n)
    if not matrices or matrices[0].shape == (0, 0):
        return M
    G = sp.Matrix(G)
    G_inv = sp.Matrix(G_inv)
    twisted = [(G * A * G_inv).applyfunc(sp.expand) for A in matrices]
    support = []
    for A in matrices:
        rows, cols = A.shape
        support.append([(m, k, A[m, k]) for m in range(rows) for k in range(cols) if not is_zero(A[m, k])])
    for a in range(n):
        for b in range(n):
            W = twisted[b]
            M[a, b] = sp.expand(sum((value * W[m, k] for m, k, value in support[a]), sp.Integer(0)))
    return M


def _proportionality(T: sp.Matrix, kappa, what: str) -> Fraction:
    n = T.shape[0]
    pivot = next(((a, b) for a in range(n) for b in range(n) if not is_zero(kappa[a, b])), None)
    if pivot is None:
        raise StructuralError(f"{what}: kappa is identically zero", module="lie")
    c = sp.expand(T[pivot] / kappa[pivot])
    residual: Dict[Tuple[int, int], sp.Expr] = {}
    for a in range(n):
        for b in range(n):
            defect = sp.expand(T[a, b] - c * kappa[a, b])
            if defect != 0:
                residual[(a + 1, b + 1)] = defect
    if residual:
        raise ProportionalityError(
            f"{what}: loop tensor is not proportional to kappa ({len(residual)} residual entries)",
            residual,
        )
    return to_fraction(c, what)


def loop_tensor_adjoint(L: LieAlgebraData) -> sp.Matrix:
    return _loop_tensor([L.ad_matrix(a) for a in range(1, L.dim + 1)], L.kappa, L.kappa_inv)


def loop_tensor_matter(R: RepresentationData) -> sp.Matrix:
    return _loop_tensor(R.matrices(), R.mu, R.mu_inv)


def casimir_adjoint(L: LieAlgebraData) -> Fraction:
    """C(g): proportionality constant of the adjoint loop tensor against kappa.

    Rescaling kappa by s leaves the loop tensor unchanged, so C(g) scales as s^-1.
    """
    value = _proportionality(loop_tensor_adjoint(L), L.kappa, f"casimir_adjoint({L.name})")
    logger.debug("C(%s) = %s", L.name, value)
    return value


def lie_factor_matter(L: LieAlgebraData, R: RepresentationData) -> Fraction:
    """C(V): proportionality constant of the matter loop tensor against kappa."""
    if R.dim_algebra != L.dim:
        raise StructuralError(
            f"representation '{R.name}' acts by {R.dim_algebra} generators, algebra has {L.dim}",
            module="lie",
        )
    if R.dimV == 0:
        return Fraction(0)
    value = _proportionality(loop_tensor_matter(R), L.kappa, f"lie_factor_matter({R.name})")
    logger.debug("C(%s) = %s", R.name, value)
    return value


# ---------------------------------------------------------------------------
# Simple factors
# ---------------------------------------------------------------------------

def simple_factors(L: LieAlgebraData) -> List[Tuple[int, ...]]:
    """Basis blocks spanning the ideals of a basis-adapted direct sum."""
    parent = list(range(L.dim + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for a, b, c in L.f:
        union(a, b)
        union(a, c)
    for a in range(1, L.dim + 1):
        for b in range(a + 1, L.dim + 1):
            if not is_zero(L.kappa[a - 1, b - 1]):
                union(a, b)

    blocks: Dict[int, List[int]] = {}
    for a in range(1, L.dim + 1):
        blocks.setdefault(find(a), []).append(a)
    return [tuple(block) for _, block in sorted(blocks.items())]


def _restrict_algebra(L: LieAlgebraData, block: Tuple[int, ...]) -> LieAlgebraData:
    position = {old: new for new, old in enumerate(block, start=1)}
    f = {
        (position[a], position[b], position[c]): value
        for (a, b, c), value in L.f.items()
        if a in position and b in position and c in position
    }
    kappa = L.kappa.extract([a - 1 for a in block], [a - 1 for a in block])
    return make_algebra(len(block), f, kappa, name=f"{L.name}{list(block)}", kappa_note=L.kappa_note)


def _restrict_representation(R: RepresentationData, block: Tuple[int, ...]) -> RepresentationData:
    position = {old: new for new, old in enumerate(block, start=1)}
    alpha = {(position[a], i, j): value for (a, i, j), value in R.alpha.items() if a in position}
    return make_representation(len(block), R.dimV, alpha, R.mu, name=R.name, algebra=R.algebra)


def casimir_per_factor(L: LieAlgebraData) -> List[FactorConstant]:
    return [FactorConstant(block, casimir_adjoint(_restrict_algebra(L, block))) for block in simple_factors(L)]


def lie_factor_matter_per_factor(L: LieAlgebraData, R: RepresentationData) -> List[FactorConstant]:
    return [
        FactorConstant(block, lie_factor_matter(_restrict_algebra(L, block), _restrict_representation(R, block)))
        for block in simple_factors(L)
    ]


# ---------------------------------------------------------------------------
# Building representations
# ---------------------------------------------------------------------------

def adjoint_representation(L: LieAlgebraData) -> RepresentationData:
    # e_a . e_k = sum_m f^{ak}_m e_m
    return make_representation(L.dim, L.dim, dict(L.f), L.kappa, name="adjoint", algebra=L.name)


def representation_from_matrices(
    dim_algebra: int,
    matrices: Sequence[sp.Matrix],
    G,
    name: str = "",
    algebra: str = "",
) -> RepresentationData:
    alpha = {}
    for a, A in enumerate(matrices, start=1):
        rows, cols = A.shape
        for j in range(rows):
            for i in range(cols):
                if not is_zero(A[j, i]):
                    alpha[(a, i + 1, j + 1)] = A[j, i]
    return make_representation(dim_algebra, G.shape[0], alpha, G, name=name, algebra=algebra)


def direct_sum(first: RepresentationData, second: RepresentationData) -> RepresentationData:
    if first.dim_algebra != second.dim_algebra:
        raise StructuralError("direct_sum: representations of different algebras", module="lie")
    shift = first.dimV
    alpha = dict(first.alpha)
    for (a, i, j), value in second.alpha.items():
        alpha[(a, i + shift, j + shift)] = value
    mu = sp.diag(sp.Matrix(first.mu), sp.Matrix(second.mu)) if first.dimV and second.dimV else (
        first.mu if second.dimV == 0 else second.mu
    )
    return make_representation(
        first.dim_algebra,
        first.dimV + second.dimV,
        alpha,
        mu,
        name=f"{first.name}+{second.name}",
        algebra=first.algebra or second.algebra,
    )


def change_of_basis(R: RepresentationData, P) -> RepresentationData:
    """Re-express R in the basis v'_i = sum_j P[j, i] v_j."""
    P = sp.Matrix(P)
    if P.shape != (R.dimV, R.dimV) or P.det() == 0:
        raise StructuralError("change_of_basis needs an invertible dimV x dimV matrix", module="lie")
    P_inv = P.inv()
    matrices = [(P_inv * A * P).applyfunc(sp.expand) for A in R.matrices()]
    G = (P.T * sp.Matrix(R.mu) * P).applyfunc(sp.expand)
    return representation_from_matrices(R.dim_algebra, matrices, G, name=R.name, algebra=R.algebra)

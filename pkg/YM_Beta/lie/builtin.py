"""Built-in algebras and representations, generated from explicit matrices.

su(N) uses the rational anti-Hermitian basis

    X^{jk} = E_jk - E_kj,   Y^{jk} = i(E_jk + E_kj)   (j < k),
    H_l    = i(E_ll - E_{l+1,l+1}),

ordered pair by pair and then the diagonal, with kappa(x, y) = -1/2 tr(xy).
Structure constants are read off by decomposing commutators back into the
basis, and every generated algebra passes ``require_valid`` before use.
"""

import logging
import re
from dataclasses import dataclass
from typing import Callable, List, Tuple

import sympy as sp

import YM_Beta.state as state
from YM_Beta.constants import BUILTIN_REPS, BUILTIN_SU_RANGE
from YM_Beta.errors import StructuralError, UnknownNameError
from YM_Beta.lie.data import LieAlgebraData, RepresentationData, make_algebra, make_representation, require_valid
from YM_Beta.lie.factors import adjoint_representation, representation_from_matrices
from YM_Beta.validation import find_similar_names

logger = logging.getLogger("YM_Beta")


@dataclass(frozen=True)
class BuiltinAlgebra:
    data: LieAlgebraData
    basis: Tuple[sp.ImmutableMatrix, ...]   # defining N x N complex matrices


# ---------------------------------------------------------------------------
# su(N) matrices
# ---------------------------------------------------------------------------

def _unit(N: int, j: int, k: int) -> sp.Matrix:
    matrix = sp.zeros(N, N)
    matrix[j, k] = 1
    return matrix


def su_basis(N: int) -> List[sp.Matrix]:
    basis = []
    for j in range(N):
        for k in range(j + 1, N):
            basis.append(_unit(N, j, k) - _unit(N, k, j))
            basis.append(sp.I * (_unit(N, j, k) + _unit(N, k, j)))
    for l in range(N - 1):
        basis.append(sp.I * (_unit(N, l, l) - _unit(N, l + 1, l + 1)))
    return basis


def su_coordinates(M: sp.Matrix) -> List[sp.Expr]:
    """Coordinates of a traceless anti-Hermitian matrix in ``su_basis``."""
    N = M.shape[0]
    coords = []
    for j in range(N):
        for k in range(j + 1, N):
            entry = sp.expand(M[j, k])
            coords.append(sp.re(entry))
            coords.append(sp.im(entry))
    running = sp.Integer(0)
    for l in range(N - 1):
        running += sp.im(sp.expand(M[l, l]))
        coords.append(running)
    rebuilt = sum((c * B for c, B in zip(coords, su_basis(N))), sp.zeros(N, N))
    if (rebuilt - M).applyfunc(sp.expand) != sp.zeros(N, N):
        raise StructuralError("matrix is not in su(N)", module="lie")
    return coords


def _commutator(A: sp.Matrix, B: sp.Matrix) -> sp.Matrix:
    return (A * B - B * A).applyfunc(sp.expand)


def _algebra_from_basis(
    basis: List[sp.Matrix],
    coordinates: Callable[[sp.Matrix], List[sp.Expr]],
    kappa,
    name: str,
    kappa_note: str,
) -> LieAlgebraData:
    f = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            for c, value in enumerate(coordinates(_commutator(basis[a], basis[b])), start=1):
                if value != 0:
                    f[(a + 1, b + 1, c)] = value
                    f[(b + 1, a + 1, c)] = -value
    return make_algebra(len(basis), f, kappa, name=name, kappa_note=kappa_note)


def su_algebra(N: int) -> BuiltinAlgebra:
    basis = su_basis(N)
    n = len(basis)
    kappa = sp.Matrix(n, n, lambda a, b: sp.expand(-sp.Rational(1, 2) * (basis[a] * basis[b]).trace()))
    data = _algebra_from_basis(
        basis, su_coordinates, kappa, name=f"su{N}", kappa_note="kappa(x,y) = -1/2 tr(xy) on C^N"
    )
    return BuiltinAlgebra(data, tuple(sp.ImmutableMatrix(B) for B in basis))


def su2_epsilon() -> BuiltinAlgebra:
    """su(2) with f^{ab}_c = eps_abc and kappa = identity."""
    basis = [B / 2 for B in su_basis(2)]

    def coordinates(M: sp.Matrix) -> List[sp.Expr]:
        return [2 * c for c in su_coordinates(M)]

    data = _algebra_from_basis(basis, coordinates, sp.eye(3), name="su2-eps", kappa_note="kappa = identity")
    return BuiltinAlgebra(data, tuple(sp.ImmutableMatrix(B) for B in basis))


# ---------------------------------------------------------------------------
# Lookup
# ---------------------------------------------------------------------------

def available_algebras() -> List[str]:
    return [f"su{N}" for N in BUILTIN_SU_RANGE] + ["su2-eps"]


def normalize_algebra_name(name: str) -> str:
    return re.sub(r"[\s()]", "", name.lower())


def builtin_algebra(name: str) -> BuiltinAlgebra:
    key = normalize_algebra_name(name)
    with state.cache_lock:
        cached = state.builtin_cache.get(key)
    if cached is not None:
        return cached

    if key == "su2-eps":
        built = su2_epsilon()
    else:
        match = re.fullmatch(r"su(\d+)", key)
        if not match or int(match.group(1)) not in BUILTIN_SU_RANGE:
            raise UnknownNameError("algebra", name, find_similar_names(key, available_algebras()))
        built = su_algebra(int(match.group(1)))
    require_valid(built.data)
    logger.info("Generated built-in algebra %s (dim %d)", built.data.name, built.data.dim)

    with state.cache_lock:
        state.builtin_cache.setdefault(key, built)
        return state.builtin_cache[key]


def builtin_representation(algebra: BuiltinAlgebra, name: str) -> RepresentationData:
    L = algebra.data
    key = name.lower().strip()
    if key == "adjoint":
        rep = adjoint_representation(L)
    elif key == "fund+conj":
        # C^N (+) its conjugate, paired by mu(v, w-bar) in the complex basis
        N = algebra.basis[0].shape[0]
        matrices = [sp.diag(sp.Matrix(B), sp.Matrix(B).conjugate()) for B in algebra.basis]
        pairing = sp.Matrix.vstack(
            sp.Matrix.hstack(sp.zeros(N, N), sp.eye(N)),
            sp.Matrix.hstack(sp.eye(N), sp.zeros(N, N)),
        )
        rep = representation_from_matrices(L.dim, matrices, pairing, name="fund+conj", algebra=L.name)
    elif key == "fund-real":
        N = algebra.basis[0].shape[0]
        matrices = []
        for B in algebra.basis:
            real = sp.Matrix(B).applyfunc(sp.re)
            imag = sp.Matrix(B).applyfunc(sp.im)
            matrices.append(sp.Matrix.vstack(sp.Matrix.hstack(real, -imag), sp.Matrix.hstack(imag, real)))
        rep = representation_from_matrices(L.dim, matrices, sp.eye(2 * N), name="fund-real", algebra=L.name)
    elif key == "trivial":
        rep = make_representation(L.dim, 1, {}, [[1]], name="trivial", algebra=L.name)
    elif key == "zero":
        rep = make_representation(L.dim, 0, {}, [], name="zero", algebra=L.name)
    else:
        raise UnknownNameError("representation", name, find_similar_names(key, BUILTIN_REPS))
    require_valid(rep, L)
    return rep

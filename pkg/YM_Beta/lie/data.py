"""Lie algebra and representation containers plus invariant validation.

Indices are 1-based throughout, matching the text format and the
diagnostics reported back to users.

Conventions:
    f[(a, b, c)]      = f^{ab}_c,  [e_a, e_b] = sum_c f^{ab}_c e_c
    kappa[a-1, b-1]   = kappa(e_a, e_b), the invariant pairing on g
    alpha[(a, i, j)]  = alpha^{ai}_j, e_a . v_i = sum_j alpha^{ai}_j v_j
    mu[i-1, j-1]      = mu(v_i, v_j), the invariant pairing on V
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple, Union

import sympy as sp

from YM_Beta.errors import InvariantViolation, StructuralError
from YM_Beta.exact import is_zero, to_sympy

logger = logging.getLogger("YM_Beta")

Index3 = Tuple[int, int, int]


@dataclass(frozen=True)
class LieAlgebraData:
    dim: int
    f: Mapping[Index3, sp.Expr]
    kappa: sp.ImmutableMatrix
    kappa_inv: sp.ImmutableMatrix
    name: str = ""
    kappa_note: str = ""

    def structure(self, a: int, b: int, c: int) -> sp.Expr:
        return self.f.get((a, b, c), sp.Integer(0))

    def ad_matrix(self, a: int) -> sp.Matrix:
        """Matrix of ad(e_a): column k holds the components of [e_a, e_k]."""
        matrix = sp.zeros(self.dim, self.dim)
        for (x, k, m), value in self.f.items():
            if x == a:
                matrix[m - 1, k - 1] = value
        return matrix

    def brackets(self) -> Dict[Tuple[int, int], Dict[int, sp.Expr]]:
        """Sparse view (a, b) -> {c: f^{ab}_c}."""
        table: Dict[Tuple[int, int], Dict[int, sp.Expr]] = {}
        for (a, b, c), value in self.f.items():
            table.setdefault((a, b), {})[c] = value
        return table


@dataclass(frozen=True)
class RepresentationData:
    dim_algebra: int
    dimV: int
    alpha: Mapping[Index3, sp.Expr]
    mu: sp.ImmutableMatrix
    mu_inv: sp.ImmutableMatrix
    name: str = ""
    algebra: str = ""

    def matrix(self, a: int) -> sp.Matrix:
        """Action matrix A^a with A^a[j, i] = alpha^{ai}_j (column convention)."""
        matrix = sp.zeros(self.dimV, self.dimV)
        for (x, i, j), value in self.alpha.items():
            if x == a:
                matrix[j - 1, i - 1] = value
        return matrix

    def matrices(self) -> List[sp.Matrix]:
        return [self.matrix(a) for a in range(1, self.dim_algebra + 1)]


@dataclass(frozen=True)
class ValidationIssue:
    invariant: str
    indices: Tuple[int, ...] = ()
    detail: str = field(default="", compare=False)

    def __str__(self) -> str:
        where = f" at {self.indices}" if self.indices else ""
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.invariant}{where}{extra}"


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _sparse(entries: Mapping[Index3, object]) -> Dict[Index3, sp.Expr]:
    cleaned = {}
    for key in sorted(entries):
        value = to_sympy(entries[key])
        if not is_zero(value):
            cleaned[tuple(key)] = value
    return cleaned


def _square(matrix, size: int, name: str) -> sp.ImmutableMatrix:
    if not isinstance(matrix, sp.MatrixBase):
        rows = [list(row) for row in matrix]
        if any(len(row) != len(rows) for row in rows):
            raise StructuralError(f"{name} must be a square matrix", module="lie")
        matrix = sp.Matrix(len(rows), len(rows), [to_sympy(v) for row in rows for v in row])
    if matrix.shape != (size, size):
        raise StructuralError(f"{name} must be {size}x{size}, got {matrix.shape[0]}x{matrix.shape[1]}", module="lie")
    return sp.ImmutableMatrix(matrix.applyfunc(sp.expand))


def _inverse(matrix: sp.ImmutableMatrix) -> sp.ImmutableMatrix:
    if matrix.shape == (0, 0):
        return matrix
    if matrix.det() == 0:
        # Degenerate pairings are reported by validate(); keep a zero placeholder.
        return sp.ImmutableMatrix(sp.zeros(*matrix.shape))
    return sp.ImmutableMatrix(matrix.inv().applyfunc(sp.expand))


def make_algebra(
    dim: int,
    f: Mapping[Index3, object],
    kappa,
    name: str = "",
    kappa_note: str = "",
) -> LieAlgebraData:
    if not isinstance(dim, int) or dim <= 0:
        raise StructuralError(f"dim must be a positive integer, got {dim}", module="lie")
    for key in f:
        if len(key) != 3 or any(not 1 <= index <= dim for index in key):
            raise StructuralError(f"structure constant index {tuple(key)} out of range 1..{dim}", module="lie")
    kappa = _square(kappa, dim, "kappa")
    return LieAlgebraData(
        dim=dim,
        f=_sparse(f),
        kappa=kappa,
        kappa_inv=_inverse(kappa),
        name=name,
        kappa_note=kappa_note,
    )


def make_representation(
    dim_algebra: int,
    dimV: int,
    alpha: Mapping[Index3, object],
    mu,
    name: str = "",
    algebra: str = "",
) -> RepresentationData:
    if not isinstance(dimV, int) or dimV < 0:
        raise StructuralError(f"dimV must be a non-negative integer, got {dimV}", module="lie")
    for key in alpha:
        a, i, j = key
        if not 1 <= a <= dim_algebra or not 1 <= i <= dimV or not 1 <= j <= dimV:
            raise StructuralError(
                f"alpha index {tuple(key)} out of range (a<={dim_algebra}, i,j<={dimV})", module="lie"
            )
    mu = _square(mu, dimV, "mu")
    return RepresentationData(
        dim_algebra=dim_algebra,
        dimV=dimV,
        alpha=_sparse(alpha),
        mu=mu,
        mu_inv=_inverse(mu),
        name=name,
        algebra=algebra,
    )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _matrix_nonzero(matrix: sp.Matrix):
    rows, cols = matrix.shape
    for r in range(rows):
        for c in range(cols):
            if not is_zero(matrix[r, c]):
                yield r + 1, c + 1


def _check_pairing(matrix, inverse, label: str) -> List[ValidationIssue]:
    issues = []
    size = matrix.shape[0]
    for a in range(size):
        for b in range(a + 1, size):
            if not is_zero(matrix[a, b] - matrix[b, a]):
                issues.append(ValidationIssue(f"{label} symmetric", (a + 1, b + 1)))
    if size and matrix.det() == 0:
        issues.append(ValidationIssue(f"{label} nondegenerate", (), "determinant is zero"))
        return issues
    product = (inverse * matrix).applyfunc(sp.expand) - sp.eye(size)
    for a, b in _matrix_nonzero(product):
        issues.append(ValidationIssue(f"{label}_inv inverse", (a, b)))
    return issues


def _validate_algebra(L: LieAlgebraData) -> List[ValidationIssue]:
    issues: List[ValidationIssue] = []
    n = L.dim

    for (a, b, c), value in L.f.items():
        if a == b:
            issues.append(ValidationIssue("antisymmetry", (a, b, c), "f^{aa}_c must vanish"))
        elif a < b and not is_zero(value + L.structure(b, a, c)):
            issues.append(ValidationIssue("antisymmetry", (a, b, c)))
        elif a > b and (b, a, c) not in L.f:
            issues.append(ValidationIssue("antisymmetry", (b, a, c)))

    table = L.brackets()
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b + 1, n + 1):
                total: Dict[int, sp.Expr] = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    for e, fxy in table.get((x, y), {}).items():
                        for d, fez in table.get((e, z), {}).items():
                            total[d] = total.get(d, 0) + fxy * fez
                for d in sorted(total):
                    if not is_zero(total[d]):
                        issues.append(ValidationIssue("jacobi", (a, b, c, d)))

    issues.extend(_check_pairing(L.kappa, L.kappa_inv, "kappa"))

    # kappa([e_a, e_b], e_c) + kappa(e_b, [e_a, e_c]) = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(b, n + 1):
                total = 0
                for e, value in table.get((a, b), {}).items():
                    total += value * L.kappa[e - 1, c - 1]
                for e, value in table.get((a, c), {}).items():
                    total += value * L.kappa[b - 1, e - 1]
                if not is_zero(total):
                    issues.append(ValidationIssue("kappa invariance", (a, b, c)))
    return issues


def _validate_representation(R: RepresentationData, L: Optional[LieAlgebraData]) -> List[ValidationIssue]:
    issues: List[ValidationIssue] = []
    if R.dimV == 0:
        return issues
    issues.extend(_check_pairing(R.mu, R.mu_inv, "mu"))

    matrices = R.matrices()
    mu = sp.Matrix(R.mu)
    for a, A in enumerate(matrices, start=1):
        defect = (A.T * mu + mu * A).applyfunc(sp.expand)
        for i, j in _matrix_nonzero(defect):
            issues.append(ValidationIssue("mu invariance", (a, i, j)))

    if L is None:
        return issues
    table = L.brackets()
    for a in range(1, L.dim + 1):
        for b in range(a + 1, L.dim + 1):
            expected = sp.zeros(R.dimV, R.dimV)
            for c, value in table.get((a, b), {}).items():
                expected += value * matrices[c - 1]
            defect = (matrices[a - 1] * matrices[b - 1] - matrices[b - 1] * matrices[a - 1] - expected)
            defect = defect.applyfunc(sp.expand)
            for i, j in _matrix_nonzero(defect):
                issues.append(ValidationIssue("representation property", (a, b, i, j)))
    return issues


def validate(
    data: Union[LieAlgebraData, RepresentationData],
    algebra: Optional[LieAlgebraData] = None,
) -> List[ValidationIssue]:
    """Return every violated invariant (empty list on success).

    For a representation, pass ``algebra`` to also check the representation
    property; a dimension mismatch between the two raises StructuralError.
    """
    if isinstance(data, LieAlgebraData):
        issues = _validate_algebra(data)
    elif isinstance(data, RepresentationData):
        if algebra is not None and algebra.dim != data.dim_algebra:
            raise StructuralError(
                f"representation is for a {data.dim_algebra}-dimensional algebra, got dim={algebra.dim}",
                module="lie",
            )
        issues = _validate_representation(data, algebra)
    else:
        raise StructuralError(f"cannot validate {type(data).__name__}", module="lie")
    if issues:
        logger.debug("validate(%s): %d issue(s)", getattr(data, "name", ""), len(issues))
    return issues


def require_valid(
    data: Union[LieAlgebraData, RepresentationData],
    algebra: Optional[LieAlgebraData] = None,
) -> None:
    issues = validate(data, algebra)
    if issues:
        raise InvariantViolation(data.name or type(data).__name__, issues)

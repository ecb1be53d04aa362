"""Logarithmic singular parts of iterated heat-time integrals.

The exact path: a term t1^p t2^q (t1+t2)^{-r} integrated over [eps, L]^2 is
homogeneous of degree h + 2 with h = p + q - r.  In polar coordinates
t1 = s u, t2 = s (1 - u) the s-integral is int ds s^{h+1}, so a log eps
appears only when h = -2, with coefficient -B(p + 1, q + 1).  Corner
corrections stay finite as eps -> 0.

The numeric oracles (fits on an eps grid) back this rule up in the tests and
in the golden suite; they are never used to produce counterterms.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

import YM_Beta.state as state
from YM_Beta.constants import (
    DEFAULT_EPS_GRID,
    MAX_CONDITION_NUMBER,
    MAX_WHEEL_VERTICES,
    WHEEL_EPS_GRID,
    WHEEL_TOLERANCE,
)
from YM_Beta.errors import FitError, UnsupportedExponentError
from YM_Beta.validation import _validate_eps_grid, _validate_index, _validate_positive

logger = logging.getLogger("YM_Beta")


@dataclass(frozen=True)
class TRationalTerm:
    """coeff * t1^p * t2^q * (t1 + t2)^{-r}"""

    coeff: Fraction
    p: int
    q: int
    r: int

    @property
    def exponents(self) -> Tuple[int, int, int]:
        return self.p, self.q, self.r

    @property
    def homogeneity(self) -> int:
        return self.p + self.q - self.r


def merge_terms(terms: Iterable[TRationalTerm]) -> List[TRationalTerm]:
    """Canonical form: equal exponents merged, zeros dropped, sorted by exponents."""
    merged: Dict[Tuple[int, int, int], Fraction] = {}
    for term in terms:
        merged[term.exponents] = merged.get(term.exponents, Fraction(0)) + Fraction(term.coeff)
    return [TRationalTerm(c, *key) for key, c in sorted(merged.items()) if c != 0]


def clear_tau(coeff, a: int, b: int, k: int) -> TRationalTerm:
    """coeff t1^-a t2^-b tau^-k with tau = (t1 + t2) / (t1 t2)."""
    return TRationalTerm(Fraction(coeff), k - a, k - b, k)


def absorb_tau(term: TRationalTerm, k: int) -> TRationalTerm:
    """Multiply a term by tau^-k."""
    return TRationalTerm(term.coeff, term.p + k, term.q + k, term.r + k)


# ---------------------------------------------------------------------------
# Exact log coefficient
# ---------------------------------------------------------------------------

def log_coefficient(term: TRationalTerm) -> Fraction:
    """Coefficient of log eps in int int_{[eps, L]^2} term dt1 dt2 as eps -> 0.

    Raises UnsupportedExponentError outside r >= 0, p, q >= 0: a negative
    power of t1 or t2 alone produces edge logarithms whose coefficient
    depends on L.
    """
    p, q, r = term.exponents
    if r < 0 or p < -2 or q < -2:
        raise UnsupportedExponentError(f"exponents (p, q, r) = {(p, q, r)} outside r >= 0, p, q >= -2")
    if p < 0 or q < 0:
        raise UnsupportedExponentError(
            f"exponents (p, q, r) = {(p, q, r)}: negative single-variable power gives an L-dependent log"
        )
    if term.homogeneity != -2:
        return Fraction(0)
    beta = Fraction(math.factorial(p) * math.factorial(q), math.factorial(p + q + 1))
    return -Fraction(term.coeff) * beta


def log_coefficient_sum(terms: Iterable[TRationalTerm]) -> Fraction:
    return sum((log_coefficient(term) for term in merge_terms(terms)), Fraction(0))


# ---------------------------------------------------------------------------
# Numeric oracles
# ---------------------------------------------------------------------------

def _resolve_grid(eps_grid: Optional[Sequence[float]], default: Sequence[float]) -> Tuple[float, ...]:
    if eps_grid is not None:
        return tuple(float(e) for e in eps_grid)
    return tuple(state.EPS_GRID) or tuple(default)


def _least_squares(columns: List[np.ndarray], values: np.ndarray, what: str) -> np.ndarray:
    design = np.column_stack(columns)
    norms = np.linalg.norm(design, axis=0)
    design = design / norms
    condition = float(np.linalg.cond(design))
    if not np.isfinite(condition) or condition > MAX_CONDITION_NUMBER:
        raise FitError(f"{what}: ill-conditioned least-squares fit", condition)
    solution, *_ = np.linalg.lstsq(design, values, rcond=None)
    return solution / norms


def t_integral(term: TRationalTerm, eps: float, L: float) -> float:
    """int int_{[eps, L]^2} t1^p t2^q (t1+t2)^-r, integrated in log variables."""
    p, q, r = term.exponents

    def integrand(u1: float, u2: float) -> float:
        t1, t2 = math.exp(u1), math.exp(u2)
        return t1 ** (p + 1) * t2 ** (q + 1) * (t1 + t2) ** (-r)

    bounds = [math.log(eps), math.log(L)]
    value, _ = integrate.nquad(integrand, [bounds, bounds], opts={"epsabs": 1e-12, "epsrel": 1e-11, "limit": 200})
    return float(term.coeff) * value


def numeric_singular_fit(
    term: TRationalTerm,
    L: float = 1.0,
    eps_grid: Optional[Sequence[float]] = None,
) -> float:
    """Fitted log eps coefficient of the integral over an eps grid.

    Basis: log eps, 1, eps, plus eps^{h+2} when h = p + q - r < -2.
    """
    _validate_positive(L, "L")
    grid = _resolve_grid(eps_grid, DEFAULT_EPS_GRID)
    _validate_eps_grid(grid, L)
    eps = np.array(grid)
    values = np.array([t_integral(term, e, L) for e in grid])

    columns = [np.log(eps), np.ones_like(eps)]
    h = term.homogeneity
    if h < -2:
        columns.append(eps ** (h + 2))
    if len(columns) < len(grid):
        columns.append(eps)
    coefficients = _least_squares(columns, values, f"fit of {term.exponents}")
    logger.debug("numeric_singular_fit%s: log coefficient %.6g", term.exponents, coefficients[0])
    return float(coefficients[0])


@dataclass(frozen=True)
class WheelReport:
    n_vertices: int
    log_coefficient: float
    power_coefficient: float
    constant: float
    bounded: bool
    eps_grid: Tuple[float, ...]


def irwin_hall_density(x: float, n: int) -> float:
    """Density of a sum of n independent uniform [0, 1] variables."""
    if x < 0 or x > n:
        return 0.0
    total = sum((-1) ** k * math.comb(n, k) * (x - k) ** (n - 1) for k in range(int(math.floor(x)) + 1))
    return total / math.factorial(n - 1)


def wheel_integral(n: int, eps: float, L: float = 1.0) -> float:
    """int_{[eps, L]^n} (t1 + ... + tn)^-2, reduced to one dimension.

    With t_i = eps + (L - eps) u_i the sum is n eps + (L - eps) x, x Irwin-Hall.
    """
    width = L - eps
    offset = n * eps

    def integrand(x: float) -> float:
        return irwin_hall_density(x, n) * (offset + width * x) ** -2

    scale = offset / width
    near_zero = [s for s in (scale, 10 * scale, 100 * scale) if s < 1]
    value, _ = integrate.quad(integrand, 0, 1, points=near_zero or None, limit=500, epsabs=1e-13, epsrel=1e-12)
    for k in range(1, n):
        piece, _ = integrate.quad(integrand, k, k + 1, limit=200, epsabs=1e-13, epsrel=1e-12)
        value += piece
    return width ** n * value


def wheel_convergence_check(
    n_vertices: int,
    L: float = 1.0,
    eps_grid: Optional[Sequence[float]] = None,
) -> WheelReport:
    """Fit the n-fold t-integral of a wheel on {log eps, eps^-1, 1}; bounded iff both singular fits vanish."""
    _validate_index(n_vertices, "n_vertices", MAX_WHEEL_VERTICES, lower=2)
    _validate_positive(L, "L")
    grid = tuple(float(e) for e in eps_grid) if eps_grid is not None else WHEEL_EPS_GRID
    _validate_eps_grid(grid, L)
    eps = np.array(grid)
    values = np.array([wheel_integral(n_vertices, e, L) for e in grid])
    log_c, power_c, constant = _least_squares(
        [np.log(eps), 1 / eps, np.ones_like(eps)], values, f"wheel fit n={n_vertices}"
    )
    bounded = abs(log_c) < WHEEL_TOLERANCE and abs(power_c) < WHEEL_TOLERANCE
    logger.info("Wheel with %d vertices: log coefficient %.3g, bounded=%s", n_vertices, log_c, bounded)
    return WheelReport(n_vertices, float(log_c), float(power_c), float(constant), bounded, grid)

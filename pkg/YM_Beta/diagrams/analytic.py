"""Analytic weights: log eps singular parts of two-kernel heat-time integrals.

Each weight integrates (t1^a d k_{t1}) (t2^b d k_{t2}) against a test function
phi over z = x - y and over (t1, t2) in [eps, L]^2, and returns the log eps
coefficient as a map from derivative markers beta to rationals:

    weight = sum_beta c_beta (d^beta phi)(0),   in units of 1/(16 pi^2).

Pipeline: kernel_derivative -> kernel_product -> wick_expand -> absorb_tau
-> log_coefficient.  Nothing here is tabulated.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from YM_Beta.constants import DEFAULT_WICK_ORDER, SPACETIME_INDICES
from YM_Beta.gaussian import MultiIndex, kernel_derivative, kernel_product, wick_expand
from YM_Beta.tintegrals import TRationalTerm, absorb_tau, log_coefficient
from YM_Beta.validation import _validate_index

logger = logging.getLogger("YM_Beta")

MarkerMap = Dict[MultiIndex, Fraction]


@dataclass(frozen=True)
class KernelFactor:
    """t^t_power * d_t^time d_spatial k_t."""

    spatial: Tuple[int, ...] = ()
    time: int = 0
    t_power: int = 0


@lru_cache(maxsize=None)
def analytic_weight(first: KernelFactor, second: KernelFactor, max_order: int = DEFAULT_WICK_ORDER) -> MarkerMap:
    integrand = kernel_product(
        kernel_derivative(first.spatial, first.time),
        kernel_derivative(second.spatial, second.time),
        first.t_power,
        second.t_power,
    )
    markers: MarkerMap = {}
    for term in wick_expand(integrand, max_order):
        p, q, r = term.prefactor
        value = log_coefficient(absorb_tau(TRationalTerm(term.coefficient, p, q, r), term.tau_power))
        if value:
            markers[term.beta] = markers.get(term.beta, Fraction(0)) + value
    markers = {beta: value for beta, value in sorted(markers.items()) if value != 0}
    logger.debug("analytic_weight(%s, %s): %d markers", first, second, len(markers))
    return markers


def _indices(*pairs: Tuple[int, str]) -> None:
    for value, name in pairs:
        _validate_index(value, name, len(SPACETIME_INDICES))


def analytic_weight_I1(i: int, j: int) -> MarkerMap:
    """d_i k_{t1} d_j k_{t2}."""
    _indices((i, "i"), (j, "j"))
    return analytic_weight(KernelFactor((i,)), KernelFactor((j,)))


def analytic_weight_xt(i: int) -> MarkerMap:
    """d_i k_{t1} t2 d_t k_{t2}."""
    _indices((i, "i"))
    return analytic_weight(KernelFactor((i,)), KernelFactor((), 1, 1))


def analytic_weight_xxx(i: int, j: int, k: int) -> MarkerMap:
    """d_i k_{t1} t2 d_j d_k k_{t2}."""
    _indices((i, "i"), (j, "j"), (k, "k"))
    return analytic_weight(KernelFactor((i,)), KernelFactor((j, k), 0, 1))


def analytic_weight_tt() -> MarkerMap:
    """t1 d_t k_{t1} t2 d_t k_{t2}."""
    return analytic_weight(KernelFactor((), 1, 1), KernelFactor((), 1, 1))


def analytic_weight_xxt(i: int, j: int) -> MarkerMap:
    """t1 d_i d_t k_{t1} t2 d_j k_{t2}."""
    _indices((i, "i"), (j, "j"))
    return analytic_weight(KernelFactor((i,), 1, 1), KernelFactor((j,), 0, 1))


def analytic_weight_xxx2(i: int, j: int, m: int) -> MarkerMap:
    """t1 d_m d_i k_{t1} t2 d_j k_{t2}."""
    _indices((i, "i"), (j, "j"), (m, "m"))
    return analytic_weight(KernelFactor((m, i), 0, 1), KernelFactor((j,), 0, 1))

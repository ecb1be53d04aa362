"""Finite-dimensional fiber of the first-order field bundle on R^4."""

from YM_Beta.spacetime.fiber import (
    FIBER_BASIS,
    CombinatorialTensor,
    FiberElement,
    dump_tensor,
    element,
    form_of,
    koszul_sign,
    pairing_matrix,
    symplectic_pairing,
)
from YM_Beta.spacetime.forms import hodge_star, sigma, star, volume_coefficient, wedge, wedge_forms
from YM_Beta.spacetime.gamma import GammaAlgebra, gamma_algebra
from YM_Beta.spacetime.kernels import heat_kernel_summands, propagator_summands, vertex_tensors

__all__ = [
    "FIBER_BASIS",
    "CombinatorialTensor",
    "FiberElement",
    "GammaAlgebra",
    "dump_tensor",
    "element",
    "form_of",
    "gamma_algebra",
    "heat_kernel_summands",
    "hodge_star",
    "koszul_sign",
    "pairing_matrix",
    "propagator_summands",
    "sigma",
    "star",
    "symplectic_pairing",
    "vertex_tensors",
    "volume_coefficient",
    "wedge",
    "wedge_forms",
]

"""Combinatorial factors of heat kernels, propagators and interaction vertices.

Each summand is the fiber part of a tensor whose analytic part (a derivative
of the scalar heat kernel) is attached in ``YM_Beta.diagrams``.  Slot order
is (x, y): the first slot sits at the first point, the second at the other.
Propagator families are indexed by the spatial derivative(s) they carry.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from YM_Beta.constants import AA_PARTS, SELF_DUAL_INDICES, SPACETIME_INDICES, SPINOR_INDICES
from YM_Beta.spacetime.fiber import CombinatorialTensor
from YM_Beta.spacetime.forms import (
    dx,
    one_form_coordinates,
    self_dual_coordinates,
    sigma,
    star,
    volume_coefficient,
    wedge_forms,
)
from YM_Beta.spacetime.gamma import gamma_algebra

HALF = Fraction(1, 2)


def _accumulate(entries: dict, key: Tuple[str, ...], value) -> None:
    entries[key] = entries.get(key, 0) + value


# ---------------------------------------------------------------------------
# Heat kernel
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def heat_kernel_summands() -> Dict[str, CombinatorialTensor]:
    """K_AA^v, K_BB^v and K_cc^v.

        K_AA^v = dx^j (x) *dy^j + *dx^j (x) dy^j
        K_BB^v = -1/2 (sigma^I (x) sigma'^I + sigma'^I (x) sigma^I)
        K_cc^v = -(dvol (x) 1 + 1 (x) dvol)
    """
    k_aa = {}
    for j in SPACETIME_INDICES:
        k_aa[(f"A{j}", f"Av{j}")] = 1
        k_aa[(f"Av{j}", f"A{j}")] = 1
    k_bb = {}
    for j in SELF_DUAL_INDICES:
        k_bb[(f"B{j}", f"Bv{j}")] = -HALF
        k_bb[(f"Bv{j}", f"B{j}")] = -HALF
    k_cc = {("cv", "c"): -1, ("c", "cv"): -1}
    return {
        "K_AAv": CombinatorialTensor("K_AAv", 2, k_aa),
        "K_BBv": CombinatorialTensor("K_BBv", 2, k_bb),
        "K_ccv": CombinatorialTensor("K_ccv", 2, k_cc),
    }


# ---------------------------------------------------------------------------
# Propagator
# ---------------------------------------------------------------------------

def propagator_AB(i: int) -> CombinatorialTensor:
    """P^i_AB = sigma^{ij}_x (x) dy^j + *(dx^i sigma^{1j}) (x) sigma^{1j}_y."""
    entries: dict = {}
    for n in SPACETIME_INDICES:
        for k, value in self_dual_coordinates(sigma(i, n)).items():
            _accumulate(entries, (f"B{k}", f"A{n}"), value)
    for m in SELF_DUAL_INDICES:
        one_form = star(wedge_forms(dx(i), sigma(1, m)))
        for l, value in one_form_coordinates(one_form).items():
            _accumulate(entries, (f"A{l}", f"B{m}"), value)
    return CombinatorialTensor(f"P_AB^{i}", 2, entries)


def propagator_Avc(i: int) -> CombinatorialTensor:
    """P^i_A^vc = 1 (x) *dy^i + *dx^i (x) 1."""
    return CombinatorialTensor(f"P_Avc^{i}", 2, {("c", f"Av{i}"): 1, (f"Av{i}", "c"): 1})


def propagator_AA(i: int, j: int, part: str = "full") -> CombinatorialTensor:
    """P^{ij}_AA = 4 (delta^{ij} dx^l - delta^{il} dx^j) (x) dy^l.

    ``part`` "laplacian" keeps the delta^{ij} summand, which meets d_i d_j k
    as the Laplacian; "exact" keeps the other one.
    """
    if part not in AA_PARTS:
        raise ValueError(f"part must be one of {', '.join(AA_PARTS)}, got {part!r}")
    entries: dict = {}
    for l in SPACETIME_INDICES:
        if i == j and part != "exact":
            _accumulate(entries, (f"A{l}", f"A{l}"), 4)
        if i == l and part != "laplacian":
            _accumulate(entries, (f"A{j}", f"A{l}"), -4)
    suffix = "" if part == "full" else f"[{part}]"
    return CombinatorialTensor(f"P_AA^{i}{j}{suffix}", 2, entries)


def propagator_Bvc(i: int, j: int) -> CombinatorialTensor:
    # the B^v c summand of the vertical propagator vanishes identically
    return CombinatorialTensor(f"P_Bvc^{i}{j}", 2, {})


def propagator_psi(i: int) -> CombinatorialTensor:
    """P^i_psi = (Gamma^i psi^q) (x) psi'^q + psi'^q (x) (Gamma^i psi^q)."""
    gamma = gamma_algebra()
    entries: dict = {}
    for p in SPINOR_INDICES:
        for q in SPINOR_INDICES:
            value = gamma.entry(i, p, q)
            _accumulate(entries, (f"psi{p}", f"psiv{q}"), value)
            _accumulate(entries, (f"psiv{q}", f"psi{p}"), value)
    return CombinatorialTensor(f"P_psi^{i}", 2, entries)


@lru_cache(maxsize=1)
def propagator_summands() -> Dict[str, dict]:
    """All propagator families keyed by family name, then by derivative index."""
    pairs = [(i, j) for i in SPACETIME_INDICES for j in SPACETIME_INDICES]
    return {
        "P_AB": {i: propagator_AB(i) for i in SPACETIME_INDICES},
        "P_Avc": {i: propagator_Avc(i) for i in SPACETIME_INDICES},
        "P_AA": {(i, j): propagator_AA(i, j) for i, j in pairs},
        "P_Bvc": {(i, j): propagator_Bvc(i, j) for i, j in pairs},
        "P_psi": {i: propagator_psi(i) for i in SPACETIME_INDICES},
    }


# ---------------------------------------------------------------------------
# Vertices
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4)
def vertex_tensors(coupling: str = "g") -> Dict[str, CombinatorialTensor]:
    """Cubic vertices with Lie indices left symbolic; each carries one power of the coupling.

    AAB pairs dx^a ^ dx^n with sigma^{1m} against dvol; the A psi psi vertex
    is Clifford multiplication by dx^a.
    """
    gamma = gamma_algebra()
    aab: dict = {}
    for a in SPACETIME_INDICES:
        for n in SPACETIME_INDICES:
            for m in SELF_DUAL_INDICES:
                value = volume_coefficient(wedge_forms(wedge_forms(dx(a), dx(n)), sigma(1, m)))
                if value:
                    aab[(f"A{a}", f"A{n}", f"B{m}")] = value
    aavc = {(f"A{a}", f"Av{a}", "c"): 1 for a in SPACETIME_INDICES}
    apsipsi: dict = {}
    for a in SPACETIME_INDICES:
        for p in SPINOR_INDICES:
            for q in SPINOR_INDICES:
                apsipsi[(f"A{a}", f"psi{p}", f"psiv{q}")] = gamma.entry(a, p, q)
    return {
        "AAB": CombinatorialTensor("AAB", 3, aab, coupling_power=1, coupling=coupling),
        "AAvc": CombinatorialTensor("AAvc", 3, aavc, coupling_power=1, coupling=coupling),
        "Apsipsi": CombinatorialTensor("Apsipsi", 3, apsipsi, coupling_power=1, coupling=coupling),
    }

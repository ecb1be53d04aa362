"""Combinatorial weights: fiber contractions of propagators with vertices.

Wiring convention: the vertex carrying the first external leg (x) takes
the second slot of every propagator, the other vertex (y) the first slot.
All internal sums run over the full fiber, with no symmetry shortcuts.
A-A lines contract P_AA scaled by AA_LINE_FACTOR; their analytic factor
is the unsplit t d_p d_q k.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Sequence, Tuple

import sympy as sp

from YM_Beta.constants import AA_LINE_FACTOR
from YM_Beta.diagrams.specs import DiagramSpec
from YM_Beta.errors import StructuralError
from YM_Beta.exact import to_fraction
from YM_Beta.spacetime import CombinatorialTensor, propagator_summands, vertex_tensors
from YM_Beta.spacetime.fiber import element
from YM_Beta.spacetime.kernels import propagator_AA
from YM_Beta.validation import _validate_index

logger = logging.getLogger("YM_Beta")


def _entries(tensor: CombinatorialTensor, *species: str):
    return [(key, value) for key, value in tensor.entries.items()
            if all(element(name).species == s for name, s in zip(key, species))]


def _weight_I(a: int, b: int, i: int, j: int) -> sp.Expr:
    # (i, j) = (a, b) gives 2 and distinct a, b, i, j give +-2; see docs/CONVENTIONS.md
    props = propagator_summands()["P_AB"]
    aab = vertex_tensors()["AAB"]
    total = sp.Integer(0)
    for (b_k, a_n), first in _entries(props[j], "B", "A"):
        for (a_l, b_m), second in _entries(props[i], "A", "B"):
            total += first * second * aab(f"A{a}", a_n, b_m) * aab(f"A{b}", a_l, b_k)
    return total


def _weight_II(a: int, b: int, i: int, j: int) -> sp.Expr:
    props = propagator_summands()["P_Avc"]
    aavc = vertex_tensors()["AAvc"]
    total = sp.Integer(0)
    for (av_k, c_x), first in _entries(props[i], "Av", "c"):
        for (c_y, av_l), second in _entries(props[j], "c", "Av"):
            total += first * second * aavc(f"A{a}", av_k, c_x) * aavc(f"A{b}", av_l, c_y)
    return total


@lru_cache(maxsize=None)
def _aa_line(p: int, q: int, part: str) -> Tuple[Tuple[Tuple[str, str], sp.Expr], ...]:
    """Fiber entries of one A-A line with derivative indices (p, q)."""
    factor = sp.Rational(AA_LINE_FACTOR.numerator, AA_LINE_FACTOR.denominator)
    return tuple((key, factor * value) for key, value in _entries(propagator_AA(p, q, part), "A", "A"))


def _weight_III(a: int, b: int, i: int, p: int, q: int, part: str = "full") -> sp.Expr:
    props = propagator_summands()["P_AB"]
    aab = vertex_tensors()["AAB"]
    total = sp.Integer(0)
    for (b_k, a_m), first in _entries(props[i], "B", "A"):
        for (a_u, a_v), second in _aa_line(p, q, part):
            total += first * second * aab(f"A{a}", a_v, b_k) * aab(a_m, a_u, f"B{b}")
    return total


def _weight_IV(a: int, b: int, p: int, q: int, r: int, s: int,
               first_part: str = "full", second_part: str = "full") -> sp.Expr:
    # each line joins equal A slots of the two vertices
    aab = vertex_tensors()["AAB"]
    total = sp.Integer(0)
    for (u1, v1), first in _aa_line(p, q, first_part):
        for (u2, v2), second in _aa_line(r, s, second_part):
            total += first * second * aab(v1, v2, f"B{a}") * aab(u1, u2, f"B{b}")
    return total


def _weight_V(a: int, b: int, i: int, j: int) -> sp.Expr:
    props = propagator_summands()["P_psi"]
    vertex = vertex_tensors()["Apsipsi"]
    total = sp.Integer(0)
    for (psi_s, psiv_p), first in _entries(props[i], "psi", "psiv"):
        p = element(psiv_p).index
        for (psi_q, psiv_r), second in _entries(props[j], "psi", "psiv"):
            q, r = element(psi_q).index, element(psiv_r).index
            s = element(psi_s).index
            total += (
                first
                * vertex(f"A{a}", f"psi{p}", f"psiv{q}")
                * second
                * vertex(f"A{b}", f"psi{r}", f"psiv{s}")
            )
    return total


_CONTRACTIONS: Dict[str, Callable[..., sp.Expr]] = {
    "I": _weight_I,
    "II": _weight_II,
    "III": _weight_III,
    "IV": _weight_IV,
    "V": _weight_V,
}


def combinatorial_weight(spec: DiagramSpec, indices: Sequence[int]) -> Fraction:
    """Exact fiber contraction of diagram ``spec`` at the given external and internal indices."""
    indices = tuple(indices)
    if len(indices) != len(spec.signature):
        raise StructuralError(
            f"diagram {spec.label} takes {len(spec.signature)} indices, got {len(indices)}", module="diagrams"
        )
    for position, (value, allowed) in enumerate(zip(indices, spec.signature)):
        _validate_index(value, f"index {position + 1}", max(allowed), lower=min(allowed))
    value = spec.loop_sign * _CONTRACTIONS[spec.label](*indices, *spec.aa_parts)
    return to_fraction(value, f"combinatorial weight of diagram {spec.label}")


@lru_cache(maxsize=None)
def weight_table(spec: DiagramSpec) -> Dict[Tuple[int, ...], Fraction]:
    """Every nonzero combinatorial weight of ``spec``, in index order."""
    table = {}
    for indices in itertools.product(*spec.signature):
        value = combinatorial_weight(spec, indices)
        if value:
            table[indices] = value
    logger.debug("diagram %s: %d nonzero combinatorial weights", spec.label, len(table))
    return table

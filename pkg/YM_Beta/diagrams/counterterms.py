"""Diagram counterterms, their reduction to the geometric basis, and tadpoles.

A counterterm is sum over internal indices of (analytic weight) x
(combinatorial weight); the analytic weight's derivative markers beta turn
into raw J / K / M markers on the external fields.
"""

import itertools
import logging
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

import sympy as sp

import YM_Beta.state as state
from YM_Beta.constants import (
    AA_PARTS,
    BB,
    DADA,
    DADA_TO_FF,
    DIAGRAM_LABELS,
    FB,
    FF,
    LIE_SLOT_ADJOINT,
    LIE_SLOT_MATTER,
    RAW_J,
    RAW_K,
    RAW_M,
    SELF_DUAL_INDICES,
    SPACETIME_INDICES,
)
from YM_Beta.diagrams.analytic import KernelFactor, MarkerMap, analytic_weight, analytic_weight_I1
from YM_Beta.diagrams.combinatorial import weight_table
from YM_Beta.diagrams.functional import BasisKey, LocalFunctional
from YM_Beta.diagrams.specs import DiagramSpec, diagram_spec
from YM_Beta.errors import ReductionError, StructuralError
from YM_Beta.exact import to_fraction
from YM_Beta.gaussian import ZERO_INDEX, kernel_derivative
from YM_Beta.lie.data import LieAlgebraData, RepresentationData
from YM_Beta.lie.factors import loop_tensor_adjoint, loop_tensor_matter
from YM_Beta.spacetime import propagator_summands, vertex_tensors
from YM_Beta.spacetime.forms import dx, sigma, volume_coefficient, wedge_forms
from YM_Beta.validation import _validate_positive_int

logger = logging.getLogger("YM_Beta")


# ---------------------------------------------------------------------------
# Markers
# ---------------------------------------------------------------------------

def _derivative_indices(beta) -> Tuple[int, ...]:
    return tuple(m for m, power in zip(SPACETIME_INDICES, beta) for _ in range(power))


def _marker_key(spec: DiagramSpec, a: int, b: int, beta) -> BasisKey:
    derivatives = _derivative_indices(beta)
    kind = {("A", "A"): RAW_J, ("A", "B"): RAW_K, ("B", "B"): RAW_M}[spec.external]
    expected = {RAW_J: 2, RAW_K: 1, RAW_M: 0}[kind]
    if len(derivatives) != expected:
        raise StructuralError(
            f"diagram {spec.label}: marker with {len(derivatives)} derivatives has no {kind} basis element",
            module="diagrams",
        )
    return (kind, a, b) + derivatives


class _Accumulator:
    def __init__(self, spec: DiagramSpec):
        self.spec = spec
        self.terms: Dict[BasisKey, Fraction] = {}

    def add(self, a: int, b: int, markers: MarkerMap, factor: Fraction) -> None:
        for beta, value in markers.items():
            key = _marker_key(self.spec, a, b, beta)
            self.terms[key] = self.terms.get(key, Fraction(0)) + factor * value

    def functional(self) -> LocalFunctional:
        scaled = {key: self.spec.overall_factor * value for key, value in self.terms.items()}
        return LocalFunctional(scaled, self.spec.lie_slot)


# ---------------------------------------------------------------------------
# Per-piece contractions
# ---------------------------------------------------------------------------

def _piece_I1(acc: _Accumulator, table, weight: Fraction) -> None:
    for (a, b, i, j), c in table.items():
        acc.add(a, b, analytic_weight_I1(i, j), weight * c)


def _line_factor(part: str, p: int, q: int) -> Tuple[KernelFactor, Fraction]:
    """Analytic factor of an A-A line and the weight it enters with."""
    if part == "laplacian":
        # delta^{pq} gives the same fiber entry for every p, and sum_p d_p d_p k = d_t k
        return KernelFactor((), 1, 1), Fraction(1, len(SPACETIME_INDICES))
    return KernelFactor((p, q), 0, 1), Fraction(1)


def _piece_aa_line(acc: _Accumulator, table, weight: Fraction) -> None:
    (part,) = acc.spec.aa_parts
    for (a, b, i, p, q), c in table.items():
        factor, scale = _line_factor(part, p, q)
        acc.add(a, b, analytic_weight(KernelFactor((i,)), factor), weight * scale * c)


def _piece_aa_lines(acc: _Accumulator, table, weight: Fraction) -> None:
    first_part, second_part = acc.spec.aa_parts
    for (a, b, p, q, r, s), c in table.items():
        first, first_scale = _line_factor(first_part, p, q)
        second, second_scale = _line_factor(second_part, r, s)
        acc.add(a, b, analytic_weight(first, second), weight * first_scale * second_scale * c)


_PIECES = {
    "I1": _piece_I1,
    "aa_line": _piece_aa_line,
    "aa_lines": _piece_aa_lines,
}


def diagram_counterterm(spec: DiagramSpec) -> LocalFunctional:
    """Raw log eps counterterm of one diagram, in units of g^2 / (16 pi^2)."""
    table = weight_table(spec)
    acc = _Accumulator(spec)
    for piece in spec.pieces:
        _PIECES[piece.name](acc, table, piece.weight)
    result = acc.functional()
    logger.debug("diagram %s: %d raw markers", spec.label, len(result.terms))
    return result


def aa_split_counterterm(spec: DiagramSpec) -> LocalFunctional:
    """Counterterm of ``spec`` summed over the laplacian and exact summands of each A-A line."""
    total = LocalFunctional({}, spec.lie_slot)
    for parts in itertools.product(AA_PARTS[1:], repeat=len(spec.aa_parts)):
        total = total.plus(diagram_counterterm(spec.with_aa_parts(*parts)))
    return total


def evaluate_diagrams(workers: Optional[int] = None) -> "OrderedDict[str, LocalFunctional]":
    """All five raw counterterms; the result order is DIAGRAM_LABELS whatever the worker count."""
    workers = state.WORKERS if workers is None else workers
    _validate_positive_int(workers, "workers")
    specs = [diagram_spec(label) for label in DIAGRAM_LABELS]
    if workers == 1:
        results = [diagram_counterterm(spec) for spec in specs]
    else:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="ym-diagram") as pool:
            results = list(pool.map(diagram_counterterm, specs))
    logger.info("Evaluated %d diagrams with %d worker(s)", len(results), workers)
    return OrderedDict(zip(DIAGRAM_LABELS, results))


# ---------------------------------------------------------------------------
# Reduction to the geometric basis
# ---------------------------------------------------------------------------

def _canonical_raw(functional: LocalFunctional) -> Dict[BasisKey, Fraction]:
    # integration by parts moves both derivatives between the two A's freely
    canonical: Dict[BasisKey, Fraction] = {}
    for key, value in functional.terms.items():
        if key[0] == RAW_J:
            _, a, b, i, j = key
            key = (RAW_J, min(a, b), max(a, b), min(i, j), max(i, j))
        elif key[0] == RAW_M:
            _, a, b = key
            key = (RAW_M, min(a, b), max(a, b))
        else:
            continue
        canonical[key] = canonical.get(key, Fraction(0)) + value
    return {key: value for key, value in canonical.items() if value != 0}


def dada_template() -> Dict[BasisKey, Fraction]:
    """int dA ^ *dA in canonical J markers."""
    template: Dict[BasisKey, Fraction] = {}
    for a in SPACETIME_INDICES:
        for m in SPACETIME_INDICES:
            if a == m:
                continue
            template[(RAW_J, a, a, m, m)] = Fraction(-1)
            if a < m:
                template[(RAW_J, a, m, a, m)] = Fraction(2)
    return template


def fb_template() -> Dict[BasisKey, Fraction]:
    """int F ^ B in K markers: dx^i ^ dx^a ^ sigma^{1b} against dvol."""
    template = {}
    for a in SPACETIME_INDICES:
        for b in SELF_DUAL_INDICES:
            for i in SPACETIME_INDICES:
                value = volume_coefficient(wedge_forms(wedge_forms(dx(i), dx(a)), sigma(1, b)))
                if value:
                    template[(RAW_K, a, b, i)] = Fraction(value)
    return template


def bb_template() -> Dict[BasisKey, Fraction]:
    """int B ^ B in canonical M markers."""
    template = {}
    for a in SELF_DUAL_INDICES:
        for b in SELF_DUAL_INDICES:
            if a <= b:
                value = volume_coefficient(wedge_forms(sigma(1, a), sigma(1, b)))
                value *= 1 if a == b else 2
                if value:
                    template[(RAW_M, a, b)] = Fraction(value)
    return template


def _match(part: Mapping[BasisKey, Fraction], template: Mapping[BasisKey, Fraction], what: str) -> Fraction:
    if not part:
        return Fraction(0)
    pivot = next(iter(sorted(template)))
    c = part.get(pivot, Fraction(0)) / template[pivot]
    residue = {}
    for key in sorted(set(part) | set(template)):
        defect = part.get(key, Fraction(0)) - c * template.get(key, Fraction(0))
        if defect != 0:
            residue[key] = defect
    if residue:
        raise ReductionError(f"{what} markers are not a multiple of the {what} template", residue)
    return c


def j_basis_reduce(functional: LocalFunctional) -> LocalFunctional:
    """Rewrite raw markers as FF / FB / BB; int dA ^ *dA = 2 int F+ ^ F+ is applied."""
    canonical = _canonical_raw(functional)
    j_part = {key: value for key, value in canonical.items() if key[0] == RAW_J}
    m_part = {key: value for key, value in canonical.items() if key[0] == RAW_M}
    k_part = functional.raw_part(RAW_K)

    dada = _match(j_part, dada_template(), "J")
    fb = _match(k_part, fb_template(), "K")
    bb = _match(m_part, bb_template(), "M")

    geometric = functional.geometric_part()
    ff = geometric.get(FF, Fraction(0)) + DADA_TO_FF * (dada + geometric.get(DADA, Fraction(0)))
    terms = {FF: ff, FB: geometric.get(FB, Fraction(0)) + fb, BB: geometric.get(BB, Fraction(0)) + bb}
    reduced = LocalFunctional(terms, functional.lie_slot, functional.coupling_power)
    logger.debug("j_basis_reduce: %s", reduced.to_dict())
    return reduced


@dataclass(frozen=True)
class DiagramReport:
    label: str
    raw: LocalFunctional
    reduced: Optional[LocalFunctional]
    lie_slot: str


def reduced_counterterms(raw: Mapping[str, LocalFunctional]) -> "OrderedDict[str, LocalFunctional]":
    """I and II reduce only together; III, IV and V reduce on their own."""
    reduced = OrderedDict()
    reduced["I+II"] = j_basis_reduce(raw["I"].plus(raw["II"]))
    for label in ("III", "IV", "V"):
        reduced[label] = j_basis_reduce(raw[label])
    return reduced


def diagram_reports(workers: Optional[int] = None) -> List[DiagramReport]:
    raw = evaluate_diagrams(workers)
    reduced = reduced_counterterms(raw)
    reports = [DiagramReport(label, raw[label], reduced.get(label), raw[label].lie_slot) for label in raw]
    reports.append(DiagramReport("I+II", raw["I"].plus(raw["II"]), reduced["I+II"], LIE_SLOT_ADJOINT))
    return reports


# ---------------------------------------------------------------------------
# Lie factors attached from the start
# ---------------------------------------------------------------------------

def lie_loop_tensor(spec: DiagramSpec, L: LieAlgebraData, R: Optional[RepresentationData] = None) -> sp.Matrix:
    if spec.lie_slot == LIE_SLOT_ADJOINT:
        return loop_tensor_adjoint(L)
    if spec.lie_slot == LIE_SLOT_MATTER:
        if R is None:
            raise StructuralError(f"diagram {spec.label} needs a matter representation", module="diagrams")
        return loop_tensor_matter(R)
    raise StructuralError(f"diagram {spec.label} carries no Lie factor", module="diagrams")


def diagram_counterterm_full(
    spec: DiagramSpec,
    L: LieAlgebraData,
    R: Optional[RepresentationData] = None,
) -> Dict[Tuple[int, int], LocalFunctional]:
    """Counterterm per pair of external Lie indices (e, f), 1-based; zero pairs omitted."""
    tensor = lie_loop_tensor(spec, L, R)
    abelian = diagram_counterterm(spec)
    full = {}
    for e, f in itertools.product(range(tensor.shape[0]), repeat=2):
        value = to_fraction(tensor[e, f], f"loop tensor entry ({e + 1}, {f + 1})")
        if value:
            full[(e + 1, f + 1)] = abelian.scaled(value)
    return full


# ---------------------------------------------------------------------------
# Tadpoles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TadpoleWeight:
    family: str
    value: Fraction
    reason: str


def _coincident_value(spatial: Tuple[int, ...]) -> Fraction:
    """Heat-kernel derivative at z = 0, up to its common power of t."""
    return sum(
        (c for (alpha, _), c in kernel_derivative(spatial).items() if alpha == ZERO_INDEX), Fraction(0)
    )


def _close_loop(propagator, vertex) -> Dict[str, Fraction]:
    # both propagator ends on one vertex, in either pair of slots
    closed: Dict[str, Fraction] = {}
    for key, value in vertex.entries.items():
        for p1, p2 in itertools.permutations(range(3), 2):
            weight = propagator(key[p1], key[p2])
            if weight != 0:
                external = key[3 - p1 - p2]
                closed[external] = closed.get(external, Fraction(0)) + to_fraction(value * weight)
    return {name: value for name, value in closed.items() if value != 0}


def tadpole_weights() -> Dict[str, TadpoleWeight]:
    """One-vertex wheel of each propagator family: the value (largest |entry|) and why it vanishes."""
    vertices = vertex_tensors()
    weights = {}
    for family, members in propagator_summands().items():
        totals: Dict[str, Fraction] = {}
        all_zero_tensor = all(tensor.is_zero for tensor in members.values())
        all_zero_analytic = True
        for derivative, tensor in members.items():
            spatial = derivative if isinstance(derivative, tuple) else (derivative,)
            analytic = _coincident_value(spatial)
            if analytic == 0:
                continue
            all_zero_analytic = False
            for vertex in vertices.values():
                for external, value in _close_loop(tensor, vertex).items():
                    totals[external] = totals.get(external, Fraction(0)) + analytic * value
        value = max((abs(v) for v in totals.values()), default=Fraction(0))
        if all_zero_tensor:
            reason = "propagator summand vanishes identically"
        elif all_zero_analytic:
            reason = "odd heat-kernel derivative vanishes at coincident points"
        elif value == 0:
            reason = "vertex contraction is antisymmetric in the looped slots"
        else:
            reason = "nonvanishing"
        weights[family] = TadpoleWeight(family, value, reason)
        logger.debug("tadpole %s: %s (%s)", family, value, reason)
    return weights

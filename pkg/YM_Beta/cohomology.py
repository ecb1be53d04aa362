"""Local-functional cohomology in ghost number zero, and the one-loop beta coefficient.

The target is one-dimensional, spanned by [int F+ ^ F+].  Two explicit
coboundaries identify the rest of the geometric basis with it:

    d(int F+ ^ B^v) = 2 (int F+ ^ F+ - int F+ ^ B)
    d(int B ^ B^v)  = 2 (int B ^ F+ - int B ^ B)

so [FF] = [FB] = [BB], and [dA ^ *dA] = 2 [FF].
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

import YM_Beta.state as state
from YM_Beta.constants import BB, DADA, DADA_TO_FF, FB, FF, LIE_SLOT_ADJOINT, LIE_SLOT_MATTER, LIE_SLOT_PURE
from YM_Beta.diagrams import LocalFunctional, evaluate_diagrams, reduced_counterterms
from YM_Beta.errors import LandauPoleError, ProportionalityError, ReductionError
from YM_Beta.lie import (
    LieAlgebraData,
    RepresentationData,
    casimir_adjoint,
    casimir_per_factor,
    lie_factor_matter,
    lie_factor_matter_per_factor,
    require_valid,
)
from YM_Beta.validation import (
    MAX_COUPLING_SAMPLES,
    _validate_framing,
    _validate_multiplicity,
    _validate_positive,
    _validate_positive_int,
)

logger = logging.getLogger("YM_Beta")

# class of each geometric basis element in units of [FF]
_CLASS_OF = {FF: Fraction(1), FB: Fraction(1), BB: Fraction(1), DADA: DADA_TO_FF}


@dataclass(frozen=True)
class CohomologyClass:
    """coefficient * [int F+ ^ F+], times g^coupling_power / (16 pi^2) and the Lie slot."""

    coefficient: Fraction
    lie_slot: str = LIE_SLOT_PURE
    coupling_power: int = 2

    def plus(self, other: "CohomologyClass") -> "CohomologyClass":
        slot = self.lie_slot if other.lie_slot == LIE_SLOT_PURE else other.lie_slot
        return CohomologyClass(self.coefficient + other.coefficient, slot, self.coupling_power)


def reduce_to_class(functional: LocalFunctional) -> CohomologyClass:
    if functional.has_raw_terms:
        raw = {key: value for key, value in functional.terms.items() if key not in _CLASS_OF}
        raise ReductionError("reduce_to_class needs a functional in the geometric basis", raw, module="cohomology")
    coefficient = sum((_CLASS_OF[key] * value for key, value in functional.terms.items()), Fraction(0))
    return CohomologyClass(coefficient, functional.lie_slot, functional.coupling_power)


def coboundary_F_Bdual() -> LocalFunctional:
    return LocalFunctional({FF: 2, FB: -2})


def coboundary_B_Bdual() -> LocalFunctional:
    return LocalFunctional({FB: 2, BB: -2})


def first_order_action() -> LocalFunctional:
    """int B ^ F+ - 1/2 int B ^ B."""
    return LocalFunctional({FB: 1, BB: Fraction(-1, 2)})


def framing_factor(framing: str) -> Fraction:
    """Number the class [FF] is multiplied by to read off b.

    "action" normalizes by the class of the first-order action, "ff" by [FF].
    """
    _validate_framing(framing)
    if framing == "action":
        return reduce_to_class(first_order_action()).coefficient
    return Fraction(1)


# ---------------------------------------------------------------------------
# Beta coefficient
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorBeta:
    """b restricted to one simple ideal (1-based basis indices)."""

    indices: Tuple[int, ...]
    casimir: Fraction
    matter: Fraction
    b: Fraction


@dataclass(frozen=True)
class BetaResult:
    """beta(g) = b g^3 / (16 pi^2), b in the normalization of kappa_note and framing."""

    b: Optional[Fraction]
    casimir: Optional[Fraction]
    matter: Optional[Fraction]
    adjoint_class: Fraction
    matter_class: Fraction
    framing: str
    framing_factor: Fraction
    algebra: str
    kappa_note: str
    classes: Dict[str, CohomologyClass] = field(default_factory=dict)
    per_factor: Tuple[FactorBeta, ...] = ()

    @property
    def asymptotically_free(self) -> bool:
        if self.b is not None:
            return self.b < 0
        return all(factor.b < 0 for factor in self.per_factor)


def diagram_classes(workers: Optional[int] = None) -> Dict[str, CohomologyClass]:
    reduced = reduced_counterterms(evaluate_diagrams(workers))
    return {label: reduce_to_class(functional) for label, functional in reduced.items()}


def _slot_total(classes: Dict[str, CohomologyClass], slot: str) -> Fraction:
    return sum((cls.coefficient for cls in classes.values() if cls.lie_slot == slot), Fraction(0))


def _matter_total(L: LieAlgebraData, reps: Sequence[Tuple[RepresentationData, int]]) -> Fraction:
    return sum((multiplicity * lie_factor_matter(L, R) for R, multiplicity in reps), Fraction(0))


def _per_factor(
    L: LieAlgebraData,
    reps: Sequence[Tuple[RepresentationData, int]],
    adjoint_class: Fraction,
    matter_class: Fraction,
    factor: Fraction,
) -> Tuple[FactorBeta, ...]:
    casimirs = casimir_per_factor(L)
    matter = [Fraction(0)] * len(casimirs)
    for R, multiplicity in reps:
        if R.dimV == 0:
            continue
        for position, constant in enumerate(lie_factor_matter_per_factor(L, R)):
            matter[position] += multiplicity * constant.value
    return tuple(
        FactorBeta(c.indices, c.value, m, factor * (adjoint_class * c.value + matter_class * m))
        for c, m in zip(casimirs, matter)
    )


def beta_one_loop(
    L: LieAlgebraData,
    reps: Sequence[Tuple[RepresentationData, int]] = (),
    framing: Optional[str] = None,
    workers: Optional[int] = None,
) -> BetaResult:
    """Assemble b from the reduced diagram classes and the Lie factors.

    Falls back to one b per simple ideal when the loop tensors are not
    globally proportional to kappa.
    """
    framing = framing or state.DEFAULT_FRAMING
    _validate_framing(framing)
    require_valid(L)
    for R, multiplicity in reps:
        _validate_multiplicity(multiplicity)
        require_valid(R, L)

    classes = diagram_classes(workers)
    adjoint_class = _slot_total(classes, LIE_SLOT_ADJOINT)
    matter_class = _slot_total(classes, LIE_SLOT_MATTER)
    factor = framing_factor(framing)

    common = dict(
        adjoint_class=adjoint_class,
        matter_class=matter_class,
        framing=framing,
        framing_factor=factor,
        algebra=L.name,
        kappa_note=L.kappa_note,
        classes=classes,
    )
    try:
        casimir = casimir_adjoint(L)
        matter = _matter_total(L, reps)
    except ProportionalityError as exc:
        per_factor = _per_factor(L, reps, adjoint_class, matter_class, factor)
        if len(per_factor) < 2:
            raise
        logger.warning("%s; reporting b per simple factor (%d factors)", exc, len(per_factor))
        return BetaResult(b=None, casimir=None, matter=None, per_factor=per_factor, **common)

    b = factor * (adjoint_class * casimir + matter_class * matter)
    logger.info("b = %s for %s (C_adj=%s, C_matter=%s, framing=%s)", b, L.name, casimir, matter, framing)
    return BetaResult(b=b, casimir=casimir, matter=matter, **common)


# ---------------------------------------------------------------------------
# Running coupling
# ---------------------------------------------------------------------------

def _reduced_b(b) -> float:
    return float(b) / (16 * math.pi ** 2)


def critical_lambda(b, g0: float) -> Optional[float]:
    """Scale where 1 + 2 b' g0^2 log(lambda) vanishes; None when b = 0."""
    slope = 2 * _reduced_b(b) * g0 ** 2
    if slope == 0:
        return None
    return math.exp(-1 / slope)


def running_coupling(b, g0: float, lam: float) -> float:
    """One-loop g(lambda) with g(1) = g0; lambda < 1 zooms in, so b < 0 drives g to 0 there."""
    _validate_positive(g0, "g0")
    _validate_positive(lam, "lambda")
    denominator = 1 + 2 * _reduced_b(b) * g0 ** 2 * math.log(lam)
    if denominator <= 0:
        raise LandauPoleError(lam, critical_lambda(b, g0))
    return g0 / math.sqrt(denominator)


@dataclass(frozen=True)
class CouplingRow:
    lam: float
    g: Optional[float]
    pole: bool = False


def coupling_table(b, g0: float, lam_min: float, lam_max: float, n: int) -> List[CouplingRow]:
    """g on n log-spaced scales; rows past a Landau pole carry g=None."""
    _validate_positive(g0, "g0")
    _validate_positive(lam_min, "lambda_min")
    _validate_positive(lam_max, "lambda_max")
    _validate_positive_int(n, "n")
    if n > MAX_COUPLING_SAMPLES:
        raise ValueError(f"n must be at most {MAX_COUPLING_SAMPLES}, got {n}.")
    if lam_min > lam_max or (lam_min == lam_max and n > 1):
        raise ValueError(f"lambda_min must be below lambda_max, got {lam_min} and {lam_max}.")
    rows = []
    for lam in np.geomspace(lam_min, lam_max, n):
        lam = float(lam)
        try:
            rows.append(CouplingRow(lam, running_coupling(b, g0, lam)))
        except LandauPoleError:
            rows.append(CouplingRow(lam, None, pole=True))
    poles = sum(row.pole for row in rows)
    if poles:
        logger.warning(
            "%d of %d scales lie beyond the Landau pole at lambda*=%.6g", poles, n, critical_lambda(b, g0)
        )
    return rows

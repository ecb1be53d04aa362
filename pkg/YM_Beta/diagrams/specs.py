"""The five labelings of the two-vertex wheel."""

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from YM_Beta.constants import (
    AA_PARTS,
    DIAGRAM_LABELS,
    LIE_SLOT_ADJOINT,
    LIE_SLOT_MATTER,
    SELF_DUAL_INDICES,
    SPACETIME_INDICES,
)
from YM_Beta.errors import StructuralError
from YM_Beta.validation import find_similar_names


@dataclass(frozen=True)
class DiagramPiece:
    """One analytic contraction of a diagram and the weight it enters with."""

    name: str
    weight: Fraction


@dataclass(frozen=True)
class DiagramSpec:
    label: str
    external: Tuple[str, str]
    propagators: Tuple[str, str]
    lie_slot: str
    symmetry_factor: Fraction
    loop_sign: int
    pieces: Tuple[DiagramPiece, ...]
    # index range of each slot of combinatorial_weight
    signature: Tuple[Tuple[int, ...], ...]
    # which summand of P_AA each A-A line carries
    aa_parts: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        labeling = (self.external, self.propagators)
        if labeling == _EXCLUDED:
            raise StructuralError(
                "psi-external / A-internal labeling is exact in cohomology and is not evaluated",
                module="diagrams",
            )
        expected = _LABELINGS.get(self.label)
        if expected is None or expected != labeling:
            raise StructuralError(
                f"diagram {self.label}: no wheel labeling with external {self.external} "
                f"and propagators {self.propagators}",
                module="diagrams",
            )
        lines = self.propagators.count("P_AA")
        if len(self.aa_parts) != lines or any(part not in AA_PARTS for part in self.aa_parts):
            raise StructuralError(
                f"diagram {self.label}: needs one of {AA_PARTS} per A-A line, got {self.aa_parts}",
                module="diagrams",
            )

    @property
    def overall_factor(self) -> Fraction:
        return Fraction(self.symmetry_factor)

    def with_aa_parts(self, *parts: str) -> "DiagramSpec":
        """The same diagram with its A-A lines restricted to the given P_AA summands."""
        return replace(self, aa_parts=tuple(parts))


_S = SPACETIME_INDICES
_SD = SELF_DUAL_INDICES

_LABELINGS = {
    "I": (("A", "A"), ("P_AB", "P_AB")),
    "II": (("A", "A"), ("P_Avc", "P_Avc")),
    "III": (("A", "B"), ("P_AB", "P_AA")),
    "IV": (("B", "B"), ("P_AA", "P_AA")),
    "V": (("A", "A"), ("P_psi", "P_psi")),
}
_EXCLUDED = (("psi", "psi"), ("P_AA", "P_AA"))


def _pieces(*pairs) -> Tuple[DiagramPiece, ...]:
    return tuple(DiagramPiece(name, Fraction(weight)) for name, weight in pairs)


_SPECS = {
    "I": dict(lie_slot=LIE_SLOT_ADJOINT, symmetry_factor=1, loop_sign=1,
              pieces=_pieces(("I1", 1)), signature=(_S, _S, _S, _S)),
    "II": dict(lie_slot=LIE_SLOT_ADJOINT, symmetry_factor=1, loop_sign=-1,
               pieces=_pieces(("I1", 1)), signature=(_S, _S, _S, _S)),
    # two slot assignments of the propagators
    "III": dict(lie_slot=LIE_SLOT_ADJOINT, symmetry_factor=2, loop_sign=1,
                pieces=_pieces(("aa_line", 1)), signature=(_S, _SD, _S, _S, _S), aa_parts=("full",)),
    "IV": dict(lie_slot=LIE_SLOT_ADJOINT, symmetry_factor=1, loop_sign=1,
               pieces=_pieces(("aa_lines", 1)), signature=(_SD, _SD, _S, _S, _S, _S),
               aa_parts=("full", "full")),
    "V": dict(lie_slot=LIE_SLOT_MATTER, symmetry_factor=1, loop_sign=-1,
              pieces=_pieces(("I1", 1)), signature=(_S, _S, _S, _S)),
}


@lru_cache(maxsize=None)
def diagram_spec(label: str) -> DiagramSpec:
    if label not in _SPECS:
        suggestions = find_similar_names(label, DIAGRAM_LABELS)
        hint = f" Did you mean: {', '.join(suggestions)}?" if suggestions else ""
        raise StructuralError(f"Unknown diagram '{label}'.{hint}", module="diagrams")
    external, propagators = _LABELINGS[label]
    fields = dict(_SPECS[label])
    fields["symmetry_factor"] = Fraction(fields["symmetry_factor"])
    return DiagramSpec(label=label, external=external, propagators=propagators, **fields)


def all_diagram_specs() -> Tuple[DiagramSpec, ...]:
    return tuple(diagram_spec(label) for label in DIAGRAM_LABELS)

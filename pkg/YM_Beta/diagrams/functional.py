"""Translation-invariant local functionals in a fixed raw + geometric basis.

Raw markers (the external-field derivative sits on the first field):

    ("J", a, b, i, j)   int d_i d_j A_a  A_b      i <= j
    ("K", a, b, i)      int d_i A_a  B_b          b in 2..4
    ("M", a, b)         int B_a B_b               a, b in 2..4

Geometric keys: ("FF",), ("FB",), ("BB",), ("dAdA",).  Every coefficient
carries the implicit prefactor g^coupling_power / (16 pi^2).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from YM_Beta.constants import GEOMETRIC_KEYS, LIE_SLOT_PURE, LIE_SLOTS, RAW_J, RAW_K, RAW_M
from YM_Beta.errors import StructuralError
from YM_Beta.exact import format_rational

BasisKey = Tuple


def _key_text(key: BasisKey) -> str:
    return key[0] + "".join(f"[{index}]" for index in key[1:])


@dataclass(frozen=True)
class LocalFunctional:
    terms: Mapping[BasisKey, Fraction] = field(default_factory=dict)
    lie_slot: str = LIE_SLOT_PURE
    coupling_power: int = 2

    def __post_init__(self) -> None:
        if self.lie_slot not in LIE_SLOTS:
            raise StructuralError(f"unknown Lie slot '{self.lie_slot}'", module="diagrams")
        cleaned: Dict[BasisKey, Fraction] = {}
        for key in sorted(self.terms, key=_sort_key):
            if key not in GEOMETRIC_KEYS and key[0] not in (RAW_J, RAW_K, RAW_M):
                raise StructuralError(f"unknown basis key {key}", module="diagrams")
            value = Fraction(self.terms[key])
            if value != 0:
                cleaned[tuple(key)] = value
        object.__setattr__(self, "terms", cleaned)

    def coefficient(self, key: BasisKey) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def raw_part(self, kind: str) -> Dict[BasisKey, Fraction]:
        return {key: value for key, value in self.terms.items() if key[0] == kind and key not in GEOMETRIC_KEYS}

    def geometric_part(self) -> Dict[BasisKey, Fraction]:
        return {key: value for key, value in self.terms.items() if key in GEOMETRIC_KEYS}

    @property
    def has_raw_terms(self) -> bool:
        return any(key not in GEOMETRIC_KEYS for key in self.terms)

    def plus(self, other: "LocalFunctional") -> "LocalFunctional":
        if self.coupling_power != other.coupling_power:
            raise StructuralError("cannot add functionals of different coupling order", module="diagrams")
        if LIE_SLOT_PURE in (self.lie_slot, other.lie_slot):
            slot = other.lie_slot if self.lie_slot == LIE_SLOT_PURE else self.lie_slot
        elif self.lie_slot == other.lie_slot:
            slot = self.lie_slot
        else:
            raise StructuralError(
                f"cannot add functionals with Lie slots {self.lie_slot} and {other.lie_slot}", module="diagrams"
            )
        total = dict(self.terms)
        for key, value in other.terms.items():
            total[key] = total.get(key, Fraction(0)) + value
        return LocalFunctional(total, slot, self.coupling_power)

    __add__ = plus

    def scaled(self, factor) -> "LocalFunctional":
        factor = Fraction(factor)
        return LocalFunctional(
            {key: factor * value for key, value in self.terms.items()}, self.lie_slot, self.coupling_power
        )

    def with_slot(self, lie_slot: str) -> "LocalFunctional":
        return LocalFunctional(self.terms, lie_slot, self.coupling_power)

    def to_dict(self) -> Dict[str, str]:
        return {_key_text(key): format_rational(value) for key, value in self.terms.items()}

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{name} = {value}" for name, value in self.to_dict().items())


def _sort_key(key: BasisKey):
    # geometric keys first, then raw markers by family and indices
    if key in GEOMETRIC_KEYS:
        return (0, GEOMETRIC_KEYS.index(key), ())
    return (1, key[0], tuple(key[1:]))

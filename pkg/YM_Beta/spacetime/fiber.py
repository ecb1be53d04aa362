"""The graded fiber of the field bundle and sparse multilinear tensors over it.

Basis (24 elements), each with (cohomological degree, fermionic degree):

    c            (-1, 0)   constant 1, ghost
    cv           ( 2, 0)   dvol, antighost
    A1..A4       ( 0, 0)   dx^a
    Av1..Av4     ( 1, 0)   *dx^a
    B2..B4       ( 0, 0)   sigma^{1j}
    Bv2..Bv4     ( 1, 0)   sigma^{1j}, shifted copy
    psi1..psi4   ( 0, 1)   spinor components
    psiv1..psiv4 ( 1, 1)   shifted spinor components

The symplectic pairing has degree -1: omega(x, y) vanishes unless
deg x + deg y = 1.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import sympy as sp

from YM_Beta.constants import SELF_DUAL_INDICES, SPACETIME_INDICES, SPINOR_INDICES
from YM_Beta.errors import StructuralError
from YM_Beta.exact import format_gaussian, is_zero, to_sympy
from YM_Beta.spacetime.forms import Form, dx, sigma, star, volume_coefficient, wedge_forms

logger = logging.getLogger("YM_Beta")


@dataclass(frozen=True)
class FiberElement:
    name: str
    species: str
    index: Optional[int]
    degree: int
    fermionic: int

    @property
    def parity(self) -> int:
        return (self.degree + self.fermionic) % 2


def _build_basis() -> Tuple[FiberElement, ...]:
    elements = [FiberElement("c", "c", None, -1, 0), FiberElement("cv", "cv", None, 2, 0)]
    for species, indices, deg, ferm in (
        ("A", SPACETIME_INDICES, 0, 0),
        ("Av", SPACETIME_INDICES, 1, 0),
        ("B", SELF_DUAL_INDICES, 0, 0),
        ("Bv", SELF_DUAL_INDICES, 1, 0),
        ("psi", SPINOR_INDICES, 0, 1),
        ("psiv", SPINOR_INDICES, 1, 1),
    ):
        elements.extend(FiberElement(f"{species}{i}", species, i, deg, ferm) for i in indices)
    return tuple(elements)


FIBER_BASIS: Tuple[FiberElement, ...] = _build_basis()
_BY_NAME: Dict[str, FiberElement] = {element.name: element for element in FIBER_BASIS}

# species -> its symplectic partner
DUAL_SPECIES = {"c": "cv", "A": "Av", "B": "Bv", "psi": "psiv"}


def element(name: str) -> FiberElement:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise StructuralError(f"unknown fiber element '{name}'", module="spacetime") from None


def elements_of(species: str) -> List[FiberElement]:
    return [item for item in FIBER_BASIS if item.species == species]


def form_of(item: FiberElement) -> Optional[Form]:
    """Differential form carried by a bosonic element; None for spinors."""
    if item.species == "c":
        return {(): Fraction(1)}
    if item.species == "cv":
        return dx(1, 2, 3, 4)
    if item.species == "A":
        return dx(item.index)
    if item.species == "Av":
        return star(dx(item.index))
    if item.species in ("B", "Bv"):
        return sigma(1, item.index)
    return None


def koszul_sign(first: FiberElement, second: FiberElement) -> int:
    return -1 if first.parity and second.parity else 1


# ---------------------------------------------------------------------------
# Symplectic pairing
# ---------------------------------------------------------------------------

def _lower_pairing(x: FiberElement, y: FiberElement) -> Fraction:
    # x is a field, y is in its dual species
    if x.species == "psi":
        return Fraction(1 if x.index == y.index else 0)
    return volume_coefficient(wedge_forms(form_of(x), form_of(y)))


def symplectic_pairing(x: FiberElement, y: FiberElement) -> Fraction:
    """omega(x, y), graded antisymmetric: omega(y, x) = -(-1)^{|x||y|} omega(x, y)."""
    if DUAL_SPECIES.get(x.species) == y.species:
        return _lower_pairing(x, y)
    if DUAL_SPECIES.get(y.species) == x.species:
        return -koszul_sign(x, y) * _lower_pairing(y, x)
    return Fraction(0)


def pairing_matrix() -> sp.ImmutableMatrix:
    size = len(FIBER_BASIS)
    return sp.ImmutableMatrix(
        size,
        size,
        [to_sympy(symplectic_pairing(x, y)) for x in FIBER_BASIS for y in FIBER_BASIS],
    )


# ---------------------------------------------------------------------------
# Combinatorial tensors
# ---------------------------------------------------------------------------

Key = Tuple[str, ...]


@dataclass(frozen=True)
class CombinatorialTensor:
    """Sparse multilinear form on the fiber, keyed by basis element names."""

    name: str
    arity: int
    entries: Mapping[Key, sp.Expr] = field(default_factory=dict)
    coupling_power: int = 0
    coupling: str = "g"

    def __post_init__(self) -> None:
        cleaned = {}
        for key in sorted(self.entries):
            if len(key) != self.arity:
                raise StructuralError(
                    f"{self.name}: key {key} has {len(key)} slots, expected {self.arity}", module="spacetime"
                )
            for slot in key:
                element(slot)
            value = to_sympy(self.entries[key])
            if not is_zero(value):
                cleaned[tuple(key)] = value
        object.__setattr__(self, "entries", cleaned)

    def __call__(self, *slots) -> sp.Expr:
        names = tuple(slot.name if isinstance(slot, FiberElement) else slot for slot in slots)
        if len(names) != self.arity:
            raise StructuralError(
                f"{self.name} takes {self.arity} slots, got {len(names)}", module="spacetime"
            )
        return self.entries.get(names, sp.Integer(0))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def keys_matching(self, *species: Optional[str]) -> Iterable[Key]:
        """Keys whose slots have the given species (None matches any)."""
        for key in self.entries:
            if all(s is None or element(name).species == s for name, s in zip(key, species)):
                yield key

    def swapped(self, slot: int) -> "CombinatorialTensor":
        """Exchange slots ``slot`` and ``slot + 1`` (0-based) with the Koszul sign."""
        if not 0 <= slot < self.arity - 1:
            raise StructuralError(f"{self.name}: cannot swap slot {slot}", module="spacetime")
        swapped = {}
        for key, value in self.entries.items():
            first, second = element(key[slot]), element(key[slot + 1])
            new_key = key[:slot] + (key[slot + 1], key[slot]) + key[slot + 2:]
            swapped[new_key] = koszul_sign(first, second) * value
        return CombinatorialTensor(f"{self.name}~", self.arity, swapped, self.coupling_power, self.coupling)

    def plus(self, other: "CombinatorialTensor", name: str = "") -> "CombinatorialTensor":
        if other.arity != self.arity:
            raise StructuralError(
                f"cannot add {self.name} (arity {self.arity}) and {other.name} (arity {other.arity})",
                module="spacetime",
            )
        total = dict(self.entries)
        for key, value in other.entries.items():
            total[key] = sp.expand(total.get(key, 0) + value)
        return CombinatorialTensor(
            name or f"{self.name}+{other.name}", self.arity, total, self.coupling_power, self.coupling
        )


def dump_tensor(tensor: CombinatorialTensor) -> str:
    """Debug dump: one ``slot,slot,... = value`` line per nonzero entry."""
    lines = [f"# {tensor.name} arity={tensor.arity} {tensor.coupling}^{tensor.coupling_power}"]
    for key, value in tensor.entries.items():
        lines.append(f"{','.join(key)} = {format_gaussian(value)}")
    return "\n".join(lines) + "\n"

"""Constant-coefficient differential forms on Euclidean R^4.

A monomial is a strictly increasing tuple of generator indices, ``(1, 2)``
for dx^1 ^ dx^2, ``()`` for the constant 1.  A form is a sparse dict from
monomials to Fractions.  Orientation: dx^1 ^ dx^2 ^ dx^3 ^ dx^4 = dvol.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from YM_Beta.constants import SELF_DUAL_INDICES, SPACETIME_DIM, SPACETIME_INDICES, VOLUME
from YM_Beta.errors import StructuralError

logger = logging.getLogger("YM_Beta")

Monomial = Tuple[int, ...]
Form = Dict[Monomial, Fraction]


def permutation_sign(sequence: Sequence[int]) -> int:
    """Sign of the permutation sorting ``sequence``; 0 when an entry repeats."""
    if len(set(sequence)) != len(sequence):
        return 0
    sign = 1
    items = list(sequence)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def all_monomials() -> Tuple[Monomial, ...]:
    """The 16 basis monomials, ordered by degree then lexicographically."""
    return tuple(
        combo
        for k in range(SPACETIME_DIM + 1)
        for combo in itertools.combinations(SPACETIME_INDICES, k)
    )


def _check_monomial(monomial: Sequence[int]) -> None:
    if any(index not in SPACETIME_INDICES for index in monomial):
        raise StructuralError(f"monomial {tuple(monomial)} uses an index outside 1..4", module="spacetime")


# ---------------------------------------------------------------------------
# Monomials
# ---------------------------------------------------------------------------

def wedge(first: Sequence[int], second: Sequence[int]) -> Tuple[Optional[Monomial], int]:
    _check_monomial(first)
    _check_monomial(second)
    joined = tuple(first) + tuple(second)
    sign = permutation_sign(joined)
    if sign == 0:
        return None, 0
    return tuple(sorted(joined)), sign


def hodge_star(monomial: Sequence[int]) -> Tuple[Optional[Monomial], int]:
    """Euclidean star of a wedge monomial: *dx^I = sign(I, J) dx^J.

    A monomial with a repeated generator is the zero form; it is returned as
    ``(None, 0)`` rather than raising.
    """
    _check_monomial(monomial)
    sign = permutation_sign(monomial)
    if sign == 0:
        logger.debug("hodge_star: degenerate monomial %s", tuple(monomial))
        return None, 0
    ordered = tuple(sorted(monomial))
    complement = tuple(i for i in SPACETIME_INDICES if i not in ordered)
    return complement, sign * permutation_sign(ordered + complement)


# ---------------------------------------------------------------------------
# Forms
# ---------------------------------------------------------------------------

def form(*terms: Tuple[Sequence[int], object]) -> Form:
    """Build a form from ``(monomial, coefficient)`` pairs, sorting monomials."""
    result: Form = {}
    for monomial, coefficient in terms:
        _check_monomial(monomial)
        sign = permutation_sign(monomial)
        if sign == 0:
            continue
        key = tuple(sorted(monomial))
        result[key] = result.get(key, Fraction(0)) + sign * Fraction(coefficient)
    return {key: value for key, value in result.items() if value != 0}


def dx(*indices: int) -> Form:
    return form((indices, 1))


def add(*forms: Form) -> Form:
    result: Form = {}
    for item in forms:
        for monomial, value in item.items():
            result[monomial] = result.get(monomial, Fraction(0)) + value
    return {key: value for key, value in sorted(result.items()) if value != 0}


def scale(item: Form, factor) -> Form:
    factor = Fraction(factor)
    return {key: factor * value for key, value in item.items() if factor * value != 0}


def wedge_forms(first: Form, second: Form) -> Form:
    result: Form = {}
    for m1, c1 in first.items():
        for m2, c2 in second.items():
            monomial, sign = wedge(m1, m2)
            if monomial is not None:
                result[monomial] = result.get(monomial, Fraction(0)) + sign * c1 * c2
    return {key: value for key, value in sorted(result.items()) if value != 0}


def star(item: Form) -> Form:
    result: Form = {}
    for monomial, value in item.items():
        image, sign = hodge_star(monomial)
        if image is not None:
            result[image] = result.get(image, Fraction(0)) + sign * value
    return {key: value for key, value in sorted(result.items()) if value != 0}


def degree(item: Form) -> Optional[int]:
    """Homogeneous degree, or None for the zero form; mixed degrees raise."""
    degrees = {len(monomial) for monomial in item}
    if not degrees:
        return None
    if len(degrees) > 1:
        raise StructuralError(f"form mixes degrees {sorted(degrees)}", module="spacetime")
    return degrees.pop()


def double_star_sign(k: int) -> int:
    # ** = (-1)^{k(4-k)} in Euclidean signature
    return -1 if (k * (SPACETIME_DIM - k)) % 2 else 1


def volume_coefficient(item: Form) -> Fraction:
    return item.get(VOLUME, Fraction(0))


# ---------------------------------------------------------------------------
# Self-dual two-forms
# ---------------------------------------------------------------------------

def sigma(i: int, j: int) -> Form:
    """sigma^{ij} = dx^i ^ dx^j + *(dx^i ^ dx^j); zero when i == j."""
    two = dx(i, j)
    return add(two, star(two))


def self_dual_basis() -> Dict[int, Form]:
    """sigma^{1j} for j in 2..4."""
    return {j: sigma(1, j) for j in SELF_DUAL_INDICES}


def self_dual_coordinates(item: Form) -> Dict[int, Fraction]:
    """Coordinates of a self-dual 2-form on the sigma^{1j} basis."""
    coordinates = {j: item.get((1, j), Fraction(0)) for j in SELF_DUAL_INDICES}
    rebuilt = add(*(scale(sigma(1, j), c) for j, c in coordinates.items()))
    if rebuilt != {key: value for key, value in sorted(item.items()) if value != 0}:
        raise StructuralError("form is not a self-dual 2-form", module="spacetime")
    return {j: c for j, c in coordinates.items() if c != 0}


def one_form_coordinates(item: Form) -> Dict[int, Fraction]:
    if degree(item) not in (None, 1):
        raise StructuralError("expected a 1-form", module="spacetime")
    return {monomial[0]: value for monomial, value in sorted(item.items())}


def is_self_dual(item: Form) -> bool:
    return star(item) == add(item)

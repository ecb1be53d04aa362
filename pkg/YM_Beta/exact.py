"""Exact scalars: rationals as ``Fraction``, Gaussian rationals as sympy numbers.

Text form is always ``num/den``; a Gaussian rational is written as its real
part optionally followed by ``, imag``.
"""

import re
from fractions import Fraction
from typing import Union

import sympy as sp

from YM_Beta.errors import ParseError, StructuralError

Rational = Fraction
Exact = Union[Fraction, int, sp.Expr]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"expected a rational 'num/den', got '{text.strip()}'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in '{text.strip()}'")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: Exact) -> sp.Expr:
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return sp.Integer(value)
    return sp.expand(value)


def to_fraction(value: Exact, what: str = "value") -> Fraction:
    """Convert an exact scalar to ``Fraction``; complex input must be real."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    value = sp.expand(sp.sympify(value))
    real, imag = value.as_real_imag()
    if imag != 0:
        raise StructuralError(f"{what} has nonzero imaginary part {imag}")
    real = sp.Rational(real)
    return Fraction(int(real.p), int(real.q))


def parse_gaussian(text: str) -> sp.Expr:
    parts = text.split(",")
    if len(parts) > 2:
        raise ParseError(f"expected 're' or 're, im', got '{text.strip()}'")
    real = to_sympy(parse_rational(parts[0]))
    if len(parts) == 1:
        return real
    return sp.expand(real + sp.I * to_sympy(parse_rational(parts[1])))


def format_gaussian(value: Exact) -> str:
    value = sp.expand(sp.sympify(value))
    real, imag = value.as_real_imag()
    text = format_rational(to_fraction(real))
    if imag != 0:
        text += ", " + format_rational(to_fraction(imag))
    return text


def is_zero(value: Exact) -> bool:
    if isinstance(value, (Fraction, int)):
        return value == 0
    return sp.expand(value) == 0

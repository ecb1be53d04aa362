"""spin(4) = su(2) x su(2) representations as multisets of (j1, j2) labels.

Used to check that the matter part of the complex cannot enlarge the
ghost-number-zero cohomology: K(1) (x) K(2) must have no trivial summand.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple

from YM_Beta.errors import StructuralError

logger = logging.getLogger("YM_Beta")

Label = Tuple[Fraction, Fraction]


def _spin(value) -> Fraction:
    spin = Fraction(value)
    if spin < 0 or (2 * spin).denominator != 1:
        raise StructuralError(f"spin label must be a non-negative half-integer, got {value}", module="repcheck")
    return spin


def su2_clebsch_gordan(j1: Fraction, j2: Fraction) -> Iterator[Fraction]:
    """|j1 - j2|, ..., j1 + j2."""
    spin = abs(j1 - j2)
    while spin <= j1 + j2:
        yield spin
        spin += 1


@dataclass(frozen=True)
class Spin4Rep:
    summands: Tuple[Tuple[Label, int], ...]

    @classmethod
    def of(cls, labels: Iterable[Tuple[object, object]] = ()) -> "Spin4Rep":
        return cls.from_counts(Counter((_spin(j1), _spin(j2)) for j1, j2 in labels))

    @classmethod
    def from_counts(cls, counts: Mapping[Label, int]) -> "Spin4Rep":
        return cls(tuple(sorted((label, n) for label, n in counts.items() if n > 0)))

    def counts(self) -> Counter:
        return Counter(dict(self.summands))

    @property
    def dimension(self) -> int:
        return sum(int((2 * j1 + 1) * (2 * j2 + 1)) * n for (j1, j2), n in self.summands)

    def multiplicity(self, j1, j2) -> int:
        return self.counts()[(_spin(j1), _spin(j2))]

    def __add__(self, other: "Spin4Rep") -> "Spin4Rep":
        return Spin4Rep.from_counts(self.counts() + other.counts())

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for (j1, j2), n in self.summands:
            label = f"({j1},{j2})"
            parts.append(label if n == 1 else f"{n}{label}")
        return " + ".join(parts)


def tensor_decompose(a: Spin4Rep, b: Spin4Rep) -> Spin4Rep:
    out: Counter = Counter()
    for (a1, a2), m in a.summands:
        for (b1, b2), n in b.summands:
            for j1 in su2_clebsch_gordan(a1, b1):
                for j2 in su2_clebsch_gordan(a2, b2):
                    out[(j1, j2)] += m * n
    result = Spin4Rep.from_counts(out)
    if result.dimension != a.dimension * b.dimension:
        raise StructuralError(
            f"dimension mismatch: {a.dimension} x {b.dimension} != {result.dimension}", module="repcheck"
        )
    return result


def has_trivial_summand(rep: Spin4Rep) -> bool:
    return rep.multiplicity(0, 0) > 0


def sym_power(n: int, chirality: str = "+") -> Spin4Rep:
    """Sym^n S+ = (n/2, 0) or Sym^n S- = (0, n/2)."""
    if chirality not in ("+", "-"):
        raise ValueError(f"chirality must be '+' or '-', got '{chirality}'.")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}.")
    spin = Fraction(n, 2)
    return Spin4Rep.of([(spin, 0) if chirality == "+" else (0, spin)])


TRIVIAL = Spin4Rep.of([(0, 0)])
S_PLUS = sym_power(1, "+")
S_MINUS = sym_power(1, "-")
# scaling dimension 3/2 and 5/2 parts of the matter complex
K1 = S_PLUS + S_MINUS
K2 = tensor_decompose(S_PLUS, sym_power(2, "-")) + tensor_decompose(S_MINUS, sym_power(2, "+"))


def matter_obstruction_check() -> Tuple[Spin4Rep, bool]:
    """K(1) (x) K(2) and whether it contains (0, 0)."""
    product = tensor_decompose(K1, K2)
    trivial = has_trivial_summand(product)
    logger.info("K(1) x K(2) = %s (dim %d), trivial summand: %s", product, product.dimension, trivial)
    return product, trivial

"""Gaussian moment expansion on R^4 with isotropic covariance.

For a polynomial p(z) and test function phi,

    int z^alpha phi(z) exp(-tau |z|^2 / 4) dvol
        = (4 pi)^2 sum_n tau^{-(n+2)} / n! (Delta^n (z^alpha phi))(0),

and expanding Delta^n multinomially gives, for |gamma| = n with 2 gamma >= alpha,

    coefficient  prod_m (2 gamma_m)! / (gamma_m! (2 gamma_m - alpha_m)!)
    on           tau^{-(2 + n)} (d^{2 gamma - alpha} phi)(0).

The (4 pi)^2 is factored out everywhere.  The heat kernel is written as
k_t(z) = t^{-2} exp(-|z|^2 / 4t), again without its (4 pi)^{-2}, so that a
product of two kernels combined with one expansion carries 1/(16 pi^2).
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from scipy import integrate

from YM_Beta.constants import DEFAULT_WICK_ORDER, SPACETIME_DIM

logger = logging.getLogger("YM_Beta")

MultiIndex = Tuple[int, ...]
# (alpha, p, q, r): z^alpha t1^p t2^q (t1 + t2)^{-r}
IntegrandKey = Tuple[MultiIndex, int, int, int]
# (alpha, e): z^alpha t^e, times exp(-|z|^2 / 4t)
KernelKey = Tuple[MultiIndex, int]

ZERO_INDEX: MultiIndex = (0,) * SPACETIME_DIM


def unit(i: int, times: int = 1) -> MultiIndex:
    """Multi-index times * e_i (i is 1-based)."""
    return tuple(times if m == i - 1 else 0 for m in range(SPACETIME_DIM))


def add_index(first: Sequence[int], second: Sequence[int]) -> MultiIndex:
    return tuple(a + b for a, b in zip(first, second))


def _clean(terms: Mapping) -> Dict:
    return {key: value for key, value in sorted(terms.items()) if value != 0}


# ---------------------------------------------------------------------------
# Integrands
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaussianIntegrand:
    """Sum of c z^alpha t1^p t2^q (t1+t2)^{-r} against exp(-tau |z|^2 / 4)."""

    terms: Mapping[IntegrandKey, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _clean({key: Fraction(v) for key, v in self.terms.items()}))

    @classmethod
    def monomial(cls, alpha: Sequence[int], coefficient=1, p: int = 0, q: int = 0, r: int = 0) -> "GaussianIntegrand":
        return cls({(tuple(alpha), p, q, r): Fraction(coefficient)})

    def __add__(self, other: "GaussianIntegrand") -> "GaussianIntegrand":
        total = dict(self.terms)
        for key, value in other.terms.items():
            total[key] = total.get(key, Fraction(0)) + value
        return GaussianIntegrand(total)

    def scaled(self, factor) -> "GaussianIntegrand":
        factor = Fraction(factor)
        return GaussianIntegrand({key: factor * value for key, value in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms


@dataclass(frozen=True)
class WickTerm:
    """coefficient * tau^{-tau_power} * t1^p t2^q (t1+t2)^{-r} * (d^beta phi)(0), times (4 pi)^2."""

    beta: MultiIndex
    coefficient: Fraction
    tau_power: int
    prefactor: Tuple[int, int, int] = (0, 0, 0)


def _compositions(total: int, parts: int) -> Iterator[MultiIndex]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        gamma = []
        for bar in bars + (total + parts - 1,):
            gamma.append(bar - previous - 1)
            previous = bar
        yield tuple(gamma)


def _moment_factor(gamma: MultiIndex, alpha: MultiIndex) -> Fraction:
    value = Fraction(1)
    for g, a in zip(gamma, alpha):
        value *= Fraction(math.factorial(2 * g), math.factorial(g) * math.factorial(2 * g - a))
    return value


def wick_expand(integrand: GaussianIntegrand, max_order: int = DEFAULT_WICK_ORDER) -> List[WickTerm]:
    """Expand through ``max_order`` orders of tau^{-1} beyond each monomial's leading term."""
    if max_order < 0:
        raise ValueError(f"max_order must be >= 0, got {max_order}")
    collected: Dict[Tuple[MultiIndex, int, Tuple[int, int, int]], Fraction] = {}
    for (alpha, p, q, r), c in integrand.terms.items():
        n_min = sum((a + 1) // 2 for a in alpha)
        for n in range(n_min, n_min + max_order + 1):
            for gamma in _compositions(n, SPACETIME_DIM):
                if any(2 * g < a for g, a in zip(gamma, alpha)):
                    continue
                beta = tuple(2 * g - a for g, a in zip(gamma, alpha))
                key = (beta, 2 + n, (p, q, r))
                collected[key] = collected.get(key, Fraction(0)) + c * _moment_factor(gamma, alpha)
    terms = [
        WickTerm(beta, value, tau_power, prefactor)
        for (beta, tau_power, prefactor), value in sorted(collected.items())
        if value != 0
    ]
    logger.debug("wick_expand: %d integrand terms -> %d Wick terms", len(integrand.terms), len(terms))
    return terms


def wick_moment(alpha: Sequence[int], tau: float) -> float:
    """int z^alpha exp(-tau |z|^2 / 4) from the expansion with phi = 1."""
    integrand = GaussianIntegrand.monomial(alpha)
    total = 0.0
    for term in wick_expand(integrand, max_order=0):
        if term.beta == ZERO_INDEX:
            total += float(term.coefficient) * tau ** (-term.tau_power)
    return (4 * math.pi) ** 2 * total


def moment_oracle(alpha: Sequence[int], tau: float) -> float:
    """Product quadrature of int z^alpha exp(-tau |z|^2 / 4) over R^4."""
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    value = 1.0
    for a in alpha:
        result, _ = integrate.quad(lambda x, a=a: x ** a * math.exp(-tau * x * x / 4), -math.inf, math.inf,
                                   epsabs=1e-13, epsrel=1e-12)
        value *= result
    return value


# ---------------------------------------------------------------------------
# Heat-kernel derivatives
# ---------------------------------------------------------------------------

def _derive_time(poly: Mapping[KernelKey, Fraction]) -> Dict[KernelKey, Fraction]:
    out: Dict[KernelKey, Fraction] = {}
    for (alpha, e), c in poly.items():
        if e:
            out[(alpha, e - 1)] = out.get((alpha, e - 1), Fraction(0)) + c * e
        for m in range(1, SPACETIME_DIM + 1):
            key = (add_index(alpha, unit(m, 2)), e - 2)
            out[key] = out.get(key, Fraction(0)) + c / 4
    return _clean(out)


def _derive_space(poly: Mapping[KernelKey, Fraction], i: int) -> Dict[KernelKey, Fraction]:
    out: Dict[KernelKey, Fraction] = {}
    for (alpha, e), c in poly.items():
        if alpha[i - 1]:
            lowered = tuple(a - 1 if m == i - 1 else a for m, a in enumerate(alpha))
            out[(lowered, e)] = out.get((lowered, e), Fraction(0)) + c * alpha[i - 1]
        key = (add_index(alpha, unit(i)), e - 1)
        out[key] = out.get(key, Fraction(0)) - c / 2
    return _clean(out)


def kernel_derivative(spatial: Sequence[int] = (), time: int = 0) -> Dict[KernelKey, Fraction]:
    """d_t^time d_{spatial} of k_t(z) = t^{-2} exp(-|z|^2 / 4t) as a z, t polynomial."""
    poly: Dict[KernelKey, Fraction] = {(ZERO_INDEX, -2): Fraction(1)}
    for _ in range(time):
        poly = _derive_time(poly)
    for i in spatial:
        if not 1 <= i <= SPACETIME_DIM:
            raise ValueError(f"derivative index must be in 1..{SPACETIME_DIM}, got {i}")
        poly = _derive_space(poly, i)
    return poly


def kernel_product(
    first: Mapping[KernelKey, Fraction],
    second: Mapping[KernelKey, Fraction],
    first_power: int = 0,
    second_power: int = 0,
) -> GaussianIntegrand:
    """t1^first_power first(z, t1) * t2^second_power second(z, t2) as one integrand."""
    terms: Dict[IntegrandKey, Fraction] = {}
    for (a1, e1), c1 in first.items():
        for (a2, e2), c2 in second.items():
            key = (add_index(a1, a2), e1 + first_power, e2 + second_power, 0)
            terms[key] = terms.get(key, Fraction(0)) + c1 * c2
    return GaussianIntegrand(terms)

"""t-integral, running-coupling and spin(4) tool handlers."""
from typing import List

from mcp.server.fastmcp import Context

from YM_Beta.cohomology import coupling_table, critical_lambda
from YM_Beta.exact import format_rational, parse_rational
from YM_Beta.repcheck import Spin4Rep, has_trivial_summand, tensor_decompose
from YM_Beta.tintegrals import TRationalTerm, log_coefficient as exact_log_coefficient
from YM_Beta.tools._base import _tool_handler, tool_success


def _spin4(labels: List[List[str]]) -> Spin4Rep:
    pairs = []
    for label in labels:
        if len(label) != 2:
            raise ValueError(f"each label needs two spins (j1, j2), got {label}")
        pairs.append((parse_rational(str(label[0])), parse_rational(str(label[1]))))
    return Spin4Rep.of(pairs)


def register_tools(mcp):
    @mcp.tool()
    @_tool_handler("computing log coefficient")
    def log_coefficient(ctx: Context, p: int, q: int, r: int, coeff: str = "1") -> str:
        """log eps coefficient of coeff * t1^p t2^q (t1+t2)^-r over [eps, L]^2.

        Parameters:
        - p, q, r: Exponents (p, q >= 0, r >= 0)
        - coeff: Rational coefficient as "num/den"
        """
        term = TRationalTerm(parse_rational(coeff), p, q, r)
        value = exact_log_coefficient(term)
        return tool_success(f"log coefficient {format_rational(value)}", {"value": format_rational(value)})

    @mcp.tool()
    @_tool_handler("running coupling")
    def running_coupling(ctx: Context, b: str, g0: float, lam_min: float, lam_max: float, n: int = 10) -> str:
        """Tabulate one-loop g(lambda) with g(1) = g0 on n log-spaced scales.

        Parameters:
        - b: Beta coefficient as "num/den" (beta = b g^3 / 16 pi^2)
        - g0: Coupling at lambda = 1
        - lam_min, lam_max: Scale range
        - n: Number of samples
        """
        value = parse_rational(b)
        rows = coupling_table(value, g0, lam_min, lam_max, n)
        pole = critical_lambda(value, g0)
        return tool_success(
            f"{n} scales, {sum(row.pole for row in rows)} beyond the Landau pole",
            {"critical_lambda": pole, "rows": [{"lambda": row.lam, "g": row.g, "pole": row.pole} for row in rows]},
        )

    @mcp.tool()
    @_tool_handler("decomposing spin(4) product")
    def decompose_spin4(ctx: Context, first: List[List[str]], second: List[List[str]]) -> str:
        """Clebsch-Gordan decomposition of a tensor product of spin(4) representations.

        Parameters:
        - first, second: Lists of (j1, j2) labels, e.g. [["1/2", "0"], ["0", "1/2"]]
        """
        product = tensor_decompose(_spin4(first), _spin4(second))
        return tool_success(
            str(product),
            {"dimension": product.dimension, "trivial_summand": has_trivial_summand(product)},
        )

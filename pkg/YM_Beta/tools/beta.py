"""Beta-function and diagram tool handlers."""
from typing import List, Optional

from mcp.server.fastmcp import Context

import YM_Beta.state as state
from YM_Beta.cohomology import reduce_to_class
from YM_Beta.diagrams import diagram_counterterm as compute_counterterm
from YM_Beta.diagrams import diagram_spec, j_basis_reduce
from YM_Beta.exact import format_rational
from YM_Beta.lie import casimir_per_factor, lie_factor_matter
from YM_Beta.models import RepRequest, RunConfig
from YM_Beta.report import build_report, render_doc, resolve_algebra, resolve_rep
from YM_Beta.tools._base import _tool_handler, tool_success
from YM_Beta.validation import _validate_framing


def register_tools(mcp):
    @mcp.tool()
    @_tool_handler("computing beta")
    def compute_beta(
        ctx: Context,
        algebra: str = "su3",
        reps: Optional[List[str]] = None,
        framing: Optional[str] = None,
    ) -> str:
        """Run the full pipeline and return the structured report.

        Parameters:
        - algebra: Built-in algebra name (su2..su5, su2-eps)
        - reps: Matter as NAME or NAME:MULT, e.g. ["fund+conj:6"]
        - framing: "action" or "ff" (default from YM_BETA_FRAMING)
        """
        framing = framing or state.DEFAULT_FRAMING
        _validate_framing(framing)
        config = RunConfig(
            algebra=algebra,
            reps=[RepRequest.parse(text) for text in reps or []],
            framing=framing,
            output_format="doc",
        )
        return render_doc(build_report(config))

    @mcp.tool()
    @_tool_handler("computing Lie factors")
    def lie_factors(ctx: Context, algebra: str = "su3", rep: str = "adjoint") -> str:
        """Casimir C(g) per simple factor and the matter factor C(V) of one representation.

        Parameters:
        - algebra: Built-in algebra name
        - rep: Built-in representation name
        """
        config = RunConfig(algebra=algebra)
        L, built = resolve_algebra(config)
        R = resolve_rep(RepRequest(name=rep), L, built)
        factors = [
            {"indices": list(c.indices), "casimir": format_rational(c.value)} for c in casimir_per_factor(L)
        ]
        matter = format_rational(lie_factor_matter(L, R))
        return tool_success(
            f"{L.name}: C(V) = {matter} for {R.name}",
            {"algebra": L.name, "kappa": L.kappa_note, "factors": factors, "rep": R.name, "matter": matter},
        )

    @mcp.tool()
    @_tool_handler("computing diagram counterterm")
    def diagram_counterterm(ctx: Context, label: str) -> str:
        """Raw and (where it reduces alone) geometric counterterm of one diagram.

        Parameters:
        - label: I, II, III, IV or V
        """
        spec = diagram_spec(label)
        raw = compute_counterterm(spec)
        data = {"label": spec.label, "lie_slot": spec.lie_slot, "raw": raw.to_dict()}
        if spec.label in ("III", "IV", "V"):
            reduced = j_basis_reduce(raw)
            data["reduced"] = reduced.to_dict()
            data["class"] = format_rational(reduce_to_class(reduced).coefficient)
        return tool_success(f"diagram {spec.label}: {len(raw.terms)} raw markers", data)

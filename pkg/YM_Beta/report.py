"""Run the pipeline for a RunConfig and render the report."""

import logging
from typing import List, Optional, Tuple

from YM_Beta.cohomology import BetaResult, beta_one_loop, coupling_table, critical_lambda, reduce_to_class
from YM_Beta.diagrams import diagram_reports
from YM_Beta.errors import StructuralError
from YM_Beta.exact import format_rational
from YM_Beta.lie import (
    LieAlgebraData,
    RepresentationData,
    adjoint_representation,
    builtin_algebra,
    builtin_representation,
    lie_factor_matter,
    load_algebra,
    load_representation,
    make_representation,
    simple_factors,
)
from YM_Beta.lie.builtin import BuiltinAlgebra
from YM_Beta.models import (
    AlgebraSummary,
    BetaReport,
    CouplingEntry,
    DiagramEntry,
    FactorEntry,
    RepRequest,
    RepSummary,
    RunConfig,
)

logger = logging.getLogger("YM_Beta")


def resolve_algebra(config: RunConfig) -> Tuple[LieAlgebraData, Optional[BuiltinAlgebra]]:
    if config.algebra_file:
        return load_algebra(config.algebra_file), None
    built = builtin_algebra(config.algebra)
    return built.data, built


def resolve_rep(request: RepRequest, L: LieAlgebraData, built: Optional[BuiltinAlgebra]) -> RepresentationData:
    if request.path:
        return load_representation(request.path)
    if built is not None:
        return builtin_representation(built, request.name)
    # file-defined algebra: only representations built from the algebra itself
    key = request.name.lower()
    if key == "adjoint":
        return adjoint_representation(L)
    if key == "trivial":
        return make_representation(L.dim, 1, {}, [[1]], name="trivial", algebra=L.name)
    if key == "zero":
        return make_representation(L.dim, 0, {}, [], name="zero", algebra=L.name)
    raise StructuralError(
        f"representation '{request.name}' needs a built-in algebra; use --rep-file for file algebras", module="cli"
    )


def _diagram_entries(workers: int) -> List[DiagramEntry]:
    entries = []
    for report in diagram_reports(workers):
        reduced = report.reduced
        entries.append(
            DiagramEntry(
                label=report.label,
                lie_slot=report.lie_slot,
                raw=report.raw.to_dict(),
                reduced=reduced.to_dict() if reduced is not None else None,
                cohomology_class=(
                    format_rational(reduce_to_class(reduced).coefficient) if reduced is not None else None
                ),
            )
        )
    return entries


def _verdict(result: BetaResult) -> str:
    if result.b is not None and result.b == 0:
        return "conformal at one loop"
    return "asymptotically free" if result.asymptotically_free else "not asymptotically free"


def build_report(config: RunConfig) -> BetaReport:
    L, built = resolve_algebra(config)
    reps = [(resolve_rep(request, L, built), request.multiplicity) for request in config.reps]
    result = beta_one_loop(L, reps, framing=config.framing, workers=config.workers)

    rep_summaries = []
    for (R, multiplicity) in reps:
        factor = None
        if result.b is not None:
            factor = format_rational(lie_factor_matter(L, R))
        rep_summaries.append(RepSummary(name=R.name, dimV=R.dimV, multiplicity=multiplicity, lie_factor=factor))

    coupling: List[CouplingEntry] = []
    pole = None
    if config.coupling is not None and result.b is not None:
        request = config.coupling
        pole = critical_lambda(result.b, request.g0)
        rows = coupling_table(result.b, request.g0, request.lam_min, request.lam_max, request.n)
        coupling = [CouplingEntry(lam=row.lam, g=row.g, pole=row.pole) for row in rows]
    elif config.coupling is not None:
        logger.warning("Running coupling needs a single b; skipped for a multi-factor result")

    return BetaReport(
        algebra=AlgebraSummary(
            name=L.name, dim=L.dim, kappa_note=L.kappa_note, simple_factors=len(simple_factors(L))
        ),
        reps=rep_summaries,
        casimir=format_rational(result.casimir) if result.casimir is not None else None,
        matter=format_rational(result.matter) if result.matter is not None else None,
        diagrams=_diagram_entries(config.workers),
        adjoint_class=format_rational(result.adjoint_class),
        matter_class=format_rational(result.matter_class),
        framing=result.framing,
        framing_factor=format_rational(result.framing_factor),
        b=format_rational(result.b) if result.b is not None else None,
        per_factor=[
            FactorEntry(
                indices=list(factor.indices),
                casimir=format_rational(factor.casimir),
                matter=format_rational(factor.matter),
                b=format_rational(factor.b),
            )
            for factor in result.per_factor
        ],
        asymptotically_free=result.asymptotically_free,
        verdict=_verdict(result),
        critical_lambda=pole,
        coupling=coupling,
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def render_doc(report: BetaReport) -> str:
    return report.model_dump_json(indent=2) + "\n"


def render_table(report: BetaReport) -> str:
    algebra = report.algebra
    lines = [
        f"algebra      {algebra.name} (dim {algebra.dim}, {algebra.simple_factors} simple factor(s))",
        f"kappa        {algebra.kappa_note or '-'}",
    ]
    for rep in report.reps:
        lines.append(f"matter       {rep.name} x{rep.multiplicity} (dimV {rep.dimV}, C = {rep.lie_factor or '-'})")
    lines.append(f"C_adj        {report.casimir or '-'}")
    lines.append(f"C_matter     {report.matter or '-'}")
    lines.append("")
    lines.append(f"{'diagram':<8} {'slot':<9} reduced")
    for entry in report.diagrams:
        reduced = ", ".join(f"{key} = {value}" for key, value in (entry.reduced or {}).items()) or "(raw only)"
        lines.append(f"{entry.label:<8} {entry.lie_slot:<9} {reduced}")
    lines.append("")
    lines.append(f"class        {report.adjoint_class} C_adj + {report.matter_class} C_matter  [FF]")
    lines.append(f"framing      {report.framing} (factor {report.framing_factor})")
    if report.b is not None:
        lines.append(f"b            {report.b}")
    for factor in report.per_factor:
        lines.append(f"b{factor.indices}  {factor.b} (C_adj {factor.casimir}, C_matter {factor.matter})")
    lines.append(f"verdict      {report.verdict}")
    if report.coupling:
        lines.append("")
        if report.critical_lambda is not None:
            lines.append(f"Landau pole  lambda* = {report.critical_lambda:.6g}")
        lines.append(f"{'lambda':>14} {'g':>14}")
        for row in report.coupling:
            value = "pole" if row.pole else f"{row.g:.8g}"
            lines.append(f"{row.lam:>14.6g} {value:>14}")
    return "\n".join(lines) + "\n"

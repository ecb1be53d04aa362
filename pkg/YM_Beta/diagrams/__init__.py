"""The two-vertex wheel diagrams and their logarithmic counterterms."""

from YM_Beta.diagrams.analytic import (
    KernelFactor,
    analytic_weight,
    analytic_weight_I1,
    analytic_weight_tt,
    analytic_weight_xt,
    analytic_weight_xxt,
    analytic_weight_xxx,
    analytic_weight_xxx2,
)
from YM_Beta.diagrams.combinatorial import combinatorial_weight, weight_table
from YM_Beta.diagrams.counterterms import (
    DiagramReport,
    TadpoleWeight,
    aa_split_counterterm,
    bb_template,
    dada_template,
    diagram_counterterm,
    diagram_counterterm_full,
    diagram_reports,
    evaluate_diagrams,
    fb_template,
    j_basis_reduce,
    lie_loop_tensor,
    reduced_counterterms,
    tadpole_weights,
)
from YM_Beta.diagrams.functional import LocalFunctional
from YM_Beta.diagrams.specs import DiagramPiece, DiagramSpec, all_diagram_specs, diagram_spec

__all__ = [
    "DiagramPiece",
    "DiagramReport",
    "DiagramSpec",
    "KernelFactor",
    "LocalFunctional",
    "TadpoleWeight",
    "aa_split_counterterm",
    "all_diagram_specs",
    "analytic_weight",
    "analytic_weight_I1",
    "analytic_weight_tt",
    "analytic_weight_xt",
    "analytic_weight_xxt",
    "analytic_weight_xxx",
    "analytic_weight_xxx2",
    "bb_template",
    "combinatorial_weight",
    "dada_template",
    "diagram_counterterm",
    "diagram_counterterm_full",
    "diagram_reports",
    "diagram_spec",
    "evaluate_diagrams",
    "fb_template",
    "j_basis_reduce",
    "lie_loop_tensor",
    "reduced_counterterms",
    "tadpole_weights",
    "weight_table",
]

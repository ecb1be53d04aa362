"""Lie algebra and matter representation data, and the Lie-theoretic loop factors."""

from YM_Beta.lie.data import (
    LieAlgebraData,
    RepresentationData,
    ValidationIssue,
    make_algebra,
    make_representation,
    require_valid,
    validate,
)
from YM_Beta.lie.factors import (
    FactorConstant,
    adjoint_representation,
    casimir_adjoint,
    casimir_per_factor,
    change_of_basis,
    direct_sum,
    lie_factor_matter,
    lie_factor_matter_per_factor,
    representation_from_matrices,
    simple_factors,
)
from YM_Beta.lie.builtin import (
    BuiltinAlgebra,
    available_algebras,
    builtin_algebra,
    builtin_representation,
)
from YM_Beta.lie.fileformat import (
    load_algebra,
    load_document,
    load_representation,
    parse_document,
    save_document,
    serialize,
)

__all__ = [
    "BuiltinAlgebra",
    "available_algebras",
    "builtin_algebra",
    "builtin_representation",
    "load_algebra",
    "load_document",
    "load_representation",
    "parse_document",
    "save_document",
    "serialize",
    "FactorConstant",
    "LieAlgebraData",
    "RepresentationData",
    "ValidationIssue",
    "adjoint_representation",
    "casimir_adjoint",
    "casimir_per_factor",
    "change_of_basis",
    "direct_sum",
    "lie_factor_matter",
    "lie_factor_matter_per_factor",
    "make_algebra",
    "make_representation",
    "representation_from_matrices",
    "require_valid",
    "simple_factors",
    "validate",
]

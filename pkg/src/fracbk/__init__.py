"""Fractional generalized Bernstein-Kantorovich operators.

A numpy/scipy library for a family of positive linear approximation
operators built from a blended Bernstein basis and a fractional-kernel
Kantorovich integral, together with their closed-form moments, error
bounds, a bivariate tensor extension, and preset experiment datasets.
"""

from .basis import BasisRow, OperatorParams, basis_row, basis_weight, bernstein_row
from .corpus import BIVARIATE, BUILTINS, UNIVARIATE, get_function, is_bivariate
from .errors import (
    DomainError,
    EvaluationError,
    FracbkError,
    ParseError,
    QuadratureError,
    UnsupportedOrderError,
)
from .error_analysis import (
    ErrorTable,
    ModulusEstimate,
    bound_kfunctional,
    bound_lipschitz,
    bound_t2,
    error_table,
    max_error,
    modulus_continuity,
    second_modulus,
)
from .experiments import Dataset, compare_rows, figure_dataset, table_dataset, to_csv
from .exprlib import (
    FunctionExpr,
    evaluate,
    free_variables,
    parse,
    parse_source,
    to_source,
    tokenize,
)
from .operator_biv import (
    BivariateParams,
    BivKernelIntegrals,
    BivMoments,
    apply_biv,
    apply_biv_kernel,
    biv_kernel_integrals,
    biv_moments,
    bound_complete,
    bound_partial,
    complete_modulus,
    partial_moduli,
    surface_rows,
    surface_values,
)
from .operator_uni import (
    DEFAULT_ORDER,
    CentralMoments,
    KernelIntegrals,
    MomentSet,
    apply,
    apply_grid,
    apply_kernel,
    central_moments,
    kernel_integrals,
    l_moments,
    moment_recurrence,
    raw_moments,
    special_case,
)
from .quadrature import QuadratureRule, adaptive_reference, gauss_jacobi_rule, integrate
from .specfun import beta, binomial, log_binomial, log_gamma, moment_coeff

__version__ = "0.1.0"

__all__ = [
    "BIVARIATE",
    "BUILTINS",
    "BasisRow",
    "BivKernelIntegrals",
    "BivMoments",
    "BivariateParams",
    "CentralMoments",
    "Dataset",
    "DEFAULT_ORDER",
    "DomainError",
    "ErrorTable",
    "EvaluationError",
    "FracbkError",
    "FunctionExpr",
    "KernelIntegrals",
    "ModulusEstimate",
    "MomentSet",
    "OperatorParams",
    "ParseError",
    "QuadratureError",
    "QuadratureRule",
    "UNIVARIATE",
    "UnsupportedOrderError",
    "adaptive_reference",
    "apply",
    "apply_biv",
    "apply_biv_kernel",
    "apply_grid",
    "apply_kernel",
    "basis_row",
    "basis_weight",
    "bernstein_row",
    "beta",
    "binomial",
    "biv_kernel_integrals",
    "biv_moments",
    "bound_complete",
    "bound_kfunctional",
    "bound_lipschitz",
    "bound_partial",
    "bound_t2",
    "central_moments",
    "compare_rows",
    "complete_modulus",
    "error_table",
    "evaluate",
    "figure_dataset",
    "free_variables",
    "gauss_jacobi_rule",
    "get_function",
    "integrate",
    "is_bivariate",
    "kernel_integrals",
    "l_moments",
    "log_binomial",
    "log_gamma",
    "max_error",
    "modulus_continuity",
    "moment_coeff",
    "moment_recurrence",
    "parse",
    "parse_source",
    "partial_moduli",
    "raw_moments",
    "second_modulus",
    "special_case",
    "surface_rows",
    "surface_values",
    "table_dataset",
    "to_csv",
    "to_source",
    "tokenize",
]

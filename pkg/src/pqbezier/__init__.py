"""Two-parameter Bernstein bases, Bezier curves, and blossoms.

Exact rational arithmetic by default (fractions.Fraction), with an explicit
float mode for sampling-heavy work.  The identities module audits published
closed forms whose normalization factors are misprinted and exposes the
corrected versions.
"""
from .basis import (
    BasisValueVector,
    bernstein_basis,
    bernstein_basis_all,
    bernstein_operator,
    operator_nodes,
    pq_binomial,
    pq_expansion_coefficients,
    pq_factorial,
    pq_integer,
    pq_one_minus_pow,
)
from .blossom import (
    BlossomForm,
    BlossomUndefinedError,
    ParameterValidity,
    Polynomial,
    blossom_evaluate,
    blossom_from_polynomial,
    diagonal_points,
    dual_control_points,
    elementary_symmetric,
    elementary_symmetric_all,
    recursive_blossom_evaluate,
    validate_params,
)
from .curve import (
    ALGORITHMS,
    EvaluationTriangle,
    PqBezierCurve,
    SubdivisionResult,
    adaptive_polyline,
    blossom_form_from_curve,
    curve_from_polynomial,
    degree_elevate,
    evaluate,
    evaluate_permuted,
    flatten,
    intermediate_points,
    polynomial_from_curve,
    subdivide,
    subdivide_left,
)
from .identities import (
    AuditEntry,
    AuditReport,
    CORRECTED,
    DEFAULT_AUDIT_PARAMS,
    FAIL,
    PASS,
    audit_all,
    marsden_residual,
    monomial_coefficients,
    reparametrization_coefficients,
)
from .scalars import ModeError, PqParams, format_scalar, parse_scalar

__version__ = "1.0.0"

__all__ = [
    "ALGORITHMS",
    "AuditEntry",
    "AuditReport",
    "BasisValueVector",
    "BlossomForm",
    "BlossomUndefinedError",
    "CORRECTED",
    "DEFAULT_AUDIT_PARAMS",
    "EvaluationTriangle",
    "FAIL",
    "ModeError",
    "PASS",
    "ParameterValidity",
    "Polynomial",
    "PqBezierCurve",
    "PqParams",
    "SubdivisionResult",
    "adaptive_polyline",
    "audit_all",
    "bernstein_basis",
    "bernstein_basis_all",
    "bernstein_operator",
    "blossom_evaluate",
    "blossom_form_from_curve",
    "blossom_from_polynomial",
    "curve_from_polynomial",
    "degree_elevate",
    "diagonal_points",
    "dual_control_points",
    "elementary_symmetric",
    "elementary_symmetric_all",
    "evaluate",
    "evaluate_permuted",
    "flatten",
    "format_scalar",
    "intermediate_points",
    "marsden_residual",
    "monomial_coefficients",
    "operator_nodes",
    "parse_scalar",
    "polynomial_from_curve",
    "pq_binomial",
    "pq_expansion_coefficients",
    "pq_factorial",
    "pq_integer",
    "pq_one_minus_pow",
    "recursive_blossom_evaluate",
    "reparametrization_coefficients",
    "subdivide",
    "subdivide_left",
    "validate_params",
]

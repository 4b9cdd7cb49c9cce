"""Exact arithmetic over Q and Q[i], small dense linear algebra and an exact LP."""

from fractions import Fraction

from .gaussian import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    Rational,
    complexify,
    format_rational,
    gr,
    parse_rational,
    realify,
)
from .matrix import (
    CMatrix,
    DimensionError,
    SingularMatrixError,
    bilinear,
    det,
    determinant,
    inverse,
    rank,
    real_determinant,
    solve,
)
from .simplex import (
    CertificateError,
    LinearFeasibilityProblem,
    LPOutcome,
    LPStatus,
    solve_max_slack,
)

__all__ = [
    "Fraction",
    "Rational",
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "gr",
    "parse_rational",
    "format_rational",
    "realify",
    "complexify",
    "CMatrix",
    "DimensionError",
    "SingularMatrixError",
    "det",
    "determinant",
    "inverse",
    "rank",
    "real_determinant",
    "solve",
    "bilinear",
    "LinearFeasibilityProblem",
    "LPOutcome",
    "LPStatus",
    "CertificateError",
    "solve_max_slack",
]

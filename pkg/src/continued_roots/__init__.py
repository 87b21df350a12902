"""Extrapolation of small-argument expansions with continued-root forms.

The package fits nested-root approximants with a single repeated power to
a truncated Taylor series, reads off their large-argument power law, and
diagnoses convergence of the resulting amplitude sequence.  See the
``corpus`` module for ready-made benchmark problems and ``cli`` for the
command-line entry point.
"""

from ._backend import backend_name
from .approximant import (
    AmplitudeResult,
    ContinuedRootApproximant,
    ExponentTarget,
    best_real_order,
    exponent_to_power,
    finite_order_exponent,
    fit,
    fit_sequence,
    power_to_exponent,
)
from .corpus import (
    BenchmarkProblem,
    problem,
    problem_names,
    string_coefficients,
    string_coefficients_exact,
    string_exact_f,
)
from .diagnostics import (
    ConvergenceDiagnostics,
    ExtrapolationReport,
    ReportRow,
    herschfeld_terms,
    nested_radical_exponent,
    sequence_report,
)
from .errors import (
    ComplexBreakdownError,
    ContinuedRootError,
    DegenerateSeriesError,
    NoRealApproximantError,
    RealnessError,
    UnknownProblemError,
    VanishingSensitivityError,
)
from .series import TruncatedSeries

__version__ = "1.0.0"

__all__ = [
    "AmplitudeResult",
    "BenchmarkProblem",
    "ComplexBreakdownError",
    "ContinuedRootApproximant",
    "ContinuedRootError",
    "ConvergenceDiagnostics",
    "DegenerateSeriesError",
    "ExponentTarget",
    "ExtrapolationReport",
    "NoRealApproximantError",
    "RealnessError",
    "ReportRow",
    "TruncatedSeries",
    "UnknownProblemError",
    "VanishingSensitivityError",
    "backend_name",
    "best_real_order",
    "exponent_to_power",
    "finite_order_exponent",
    "fit",
    "fit_sequence",
    "herschfeld_terms",
    "nested_radical_exponent",
    "power_to_exponent",
    "problem",
    "problem_names",
    "sequence_report",
    "string_coefficients",
    "string_coefficients_exact",
    "string_exact_f",
]

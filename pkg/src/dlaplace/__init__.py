"""Exact discrete Laplace transform calculus for sequences on n >= 1.

The transform F(s) = sum_{n>=1} f(n) e^{-sn} turns linear constant
coefficient difference equations into rational-function algebra in
t = e^s.  This package does that algebra exactly (rationals and one real
quadratic extension), inverts the results back into verified closed forms,
and cross-checks transforms numerically against their defining series.
"""

from .errors import (CapabilityError, CheckFailed, DegreeLimitExceeded,
                     DivergenceGuard, DlaplaceError, ImproperRational,
                     ImproperResult, ParseError, PoleEvaluation,
                     RadicandMismatch, ResonantForcing, SemanticError,
                     SeriesCapExceeded, UnsupportedFactorization,
                     UnsupportedForcing, VerificationFailed)
from .exact import PHI, PSI, QuadExt, SQRT5
from .polys import (PFTerm, Poly, RatFunc, T, factor_roots, partial_fractions,
                    poly_gcd, squarefree_decomposition)
from .transforms import (MAX_N_POWER, TransformExpr, convolve as
                         transform_convolve, difference as
                         transform_difference, geometric, n_power,
                         partial_sum, shift, times_n)
from .sequences import (ClosedFormSequence, Term, convolve, delta,
                        equal_prefix, fibonacci_normal, inverse_transform,
                        partial_sums)
from .solver import (ForcingTerm, GeometricTerm, PowerTerm, RecurrenceSpec,
                     RecursiveSequence, SolutionReport, VerificationReport,
                     check_inverse_square_ivp, fibonacci_coefficients,
                     integer_valued_prefix, inverse_square_partial,
                     solve_affine, solve_ivp, transform_of, verify_solution)
from .numeric import (DEFAULT_S_GRID, DEFAULT_TOLERANCE, CheckReport,
                      SeriesCheckConfig, check_closed_form_pair, check_pair,
                      growth_bound, harmonic_transform_check, ratio_limit,
                      series_eval, tail_bound, terms_needed)
from .dsl import DslProgram, parse_program

__version__ = "0.1.0"

__all__ = [
    "CapabilityError", "CheckFailed", "DegreeLimitExceeded",
    "DivergenceGuard", "DlaplaceError", "ImproperRational", "ImproperResult",
    "ParseError", "PoleEvaluation", "RadicandMismatch", "ResonantForcing",
    "SemanticError", "SeriesCapExceeded", "UnsupportedFactorization",
    "UnsupportedForcing", "VerificationFailed",
    "PHI", "PSI", "QuadExt", "SQRT5",
    "PFTerm", "Poly", "RatFunc", "T", "factor_roots", "partial_fractions",
    "poly_gcd", "squarefree_decomposition",
    "MAX_N_POWER", "TransformExpr", "transform_convolve",
    "transform_difference", "geometric", "n_power", "partial_sum", "shift",
    "times_n",
    "ClosedFormSequence", "Term", "convolve", "delta", "equal_prefix",
    "fibonacci_normal", "inverse_transform", "partial_sums",
    "ForcingTerm", "GeometricTerm", "PowerTerm", "RecurrenceSpec",
    "RecursiveSequence", "SolutionReport", "VerificationReport",
    "check_inverse_square_ivp", "fibonacci_coefficients",
    "integer_valued_prefix", "inverse_square_partial", "solve_affine",
    "solve_ivp", "transform_of", "verify_solution",
    "DEFAULT_S_GRID", "DEFAULT_TOLERANCE", "CheckReport",
    "SeriesCheckConfig", "check_closed_form_pair", "check_pair",
    "growth_bound", "harmonic_transform_check", "ratio_limit", "series_eval",
    "tail_bound", "terms_needed",
    "DslProgram", "parse_program",
    "__version__",
]

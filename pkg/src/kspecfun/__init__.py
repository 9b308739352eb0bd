"""k-deformed special functions and a verified Euler-type integral harness.

The library evaluates the k-gamma/k-beta/k-Pochhammer family, the
six-parameter k-Mittag-Leffler function and its named reductions, the
k-Fox-Wright series, and extended beta integrals with essential-singularity
cutoffs.  On top of those it cross-checks a family of Euler-type integral
identities by comparing adaptive tanh-sinh quadrature of each left side
against controlled truncated summation of each right side.
"""

from .core import GammaValue, k_beta, k_gamma, k_pochhammer, log_k_gamma, log_k_pochhammer
from .errors import (
    DomainError,
    FixtureMismatch,
    FixtureMissing,
    MissingParameter,
    NoConvergence,
    NonFiniteSample,
    PoleError,
    UnknownFunction,
    UnknownIdentity,
)
from .extbeta import ExtBetaParams, chaudhry_beta, ext_k_beta, lee_beta
from .identities import (
    ASYMPTOTIC_ONLY,
    FAILED,
    FLAGGED_FACTOR_K,
    VERIFIED,
    IdentityReport,
    SeriesAggregate,
    Theorem1Params,
    Theorem2Params,
    Theorem3Params,
    adjudicate_t22_exponent,
    verify_corollary_2_1,
    verify_corollary_2_2,
    verify_corollary_2_3,
    verify_corollary_2_4,
    verify_remark_reductions,
    verify_special_case,
    verify_theorem_2_1,
    verify_theorem_2_2,
    verify_theorem_2_3,
)
from .mittag import (
    MLParams,
    SeriesResult,
    ml_classic,
    ml_k,
    ml_k_on_array,
    ml_prabhakar,
    ml_salim,
    ml_salim_faraj,
    ml_series_coefficients,
    ml_shukla,
    ml_wiman,
)
from .quadrature import QuadratureConfig, QuadratureResult, integrate_interval, integrate_unit
from .wright import WrightParams, wright_k

__version__ = "0.1.0"

__all__ = [
    "GammaValue", "k_gamma", "log_k_gamma", "k_beta", "k_pochhammer", "log_k_pochhammer",
    "QuadratureConfig", "QuadratureResult", "integrate_unit", "integrate_interval",
    "ExtBetaParams", "ext_k_beta", "chaudhry_beta", "lee_beta",
    "MLParams", "SeriesResult", "ml_k", "ml_classic", "ml_wiman", "ml_prabhakar",
    "ml_shukla", "ml_salim", "ml_salim_faraj", "ml_series_coefficients", "ml_k_on_array",
    "WrightParams", "wright_k",
    "Theorem1Params", "Theorem2Params", "Theorem3Params",
    "SeriesAggregate", "IdentityReport",
    "VERIFIED", "FLAGGED_FACTOR_K", "ASYMPTOTIC_ONLY", "FAILED",
    "verify_theorem_2_1", "verify_corollary_2_1", "verify_theorem_2_2",
    "verify_corollary_2_2", "verify_theorem_2_3", "verify_corollary_2_3",
    "verify_corollary_2_4", "verify_special_case", "verify_remark_reductions",
    "adjudicate_t22_exponent",
    "DomainError", "PoleError", "NoConvergence", "NonFiniteSample",
    "UnknownFunction", "UnknownIdentity", "MissingParameter",
    "FixtureMissing", "FixtureMismatch",
    "__version__",
]

"""The Mittag-Leffler hierarchy up to the six-parameter k-deformed form.

Everything reduces to the single engine behind

    E(z) = sum_n  (gamma)_{q n, k} / Gamma_k(alpha n + beta) * z**n / (delta)_{p n, k},

with real strides q, p > 0 and convergence condition q < alpha + p.  The
named special cases (classical, two-parameter, Prabhakar-type, integer/real
stride and bounded-denominator variants) are parameter collapses of the same
code path, so they agree with the general form bit for bit.

Each term is assembled fully in log space from the deformed log-gamma; the
three gamma ratios a term carries individually overflow near n ~ 170 while
the term itself stays tiny.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import log_k_gamma, log_k_pochhammer
from .errors import DomainError, NoConvergence

__all__ = [
    "MLParams",
    "SeriesResult",
    "ml_k",
    "ml_classic",
    "ml_wiman",
    "ml_prabhakar",
    "ml_shukla",
    "ml_salim",
    "ml_salim_faraj",
    "ml_series_coefficients",
    "ml_k_on_array",
    "DEFAULT_TOL",
    "DEFAULT_N_MAX",
]

DEFAULT_TOL = 1e-14
DEFAULT_N_MAX = 600


@dataclass(frozen=True)
class MLParams:
    """Six positive parameters plus the deformation k; requires q < alpha + p."""

    k: float
    alpha: float
    beta: float
    gamma: float
    delta: float
    p: float
    q: float

    def __post_init__(self):
        for name in ("k", "alpha", "beta", "gamma", "delta", "p", "q"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise DomainError(f"{name} must be positive finite, got {v!r}")
        if not self.q < self.alpha + self.p:
            raise DomainError(
                f"series diverges: need q < alpha + p, got q={self.q!r}, "
                f"alpha={self.alpha!r}, p={self.p!r}"
            )


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum plus truncation diagnostics.

    tail_decreasing records whether term magnitudes were monotone after their
    global peak (when False, the last-term bound for alternating input is not
    trustworthy).  final_term_ratio is |t_n / t_{n-1}| at the stopping index.
    """

    value: float
    terms_used: int
    last_term_abs: float
    converged: bool
    tail_decreasing: bool = True
    final_term_ratio: float = 0.0


def _check_series_args(tol: float, n_max: int) -> None:
    if not (0.0 < tol <= 1e-4):
        raise DomainError(f"tol must lie in (0, 1e-4], got {tol!r}")
    if n_max < 8:
        raise DomainError(f"n_max must be at least 8, got {n_max!r}")


def _log_coefficient(p: MLParams, n: int) -> float:
    """log of the (positive) coefficient of z**n."""
    return (
        log_k_pochhammer(p.k, p.gamma, p.q * n)
        - log_k_gamma(p.k, p.alpha * n + p.beta).log_abs
        - log_k_pochhammer(p.k, p.delta, p.p * n)
    )


def ml_k(
    params: MLParams, z: float, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> SeriesResult:
    """Sum the six-parameter series at real z.

    Stops once two consecutive terms satisfy |term| <= tol*max(1, |sum|);
    hits n_max with converged=False otherwise.
    """
    _check_series_args(tol, n_max)
    if z == 0.0:
        value = math.exp(-log_k_gamma(params.k, params.beta).log_abs)
        return SeriesResult(value, 1, 0.0, True)
    log_az = math.log(abs(z))
    negative = z < 0.0
    total = 0.0
    small_streak = 0
    prev_mag = math.inf
    falling = False
    tail_ok = True
    mag = 0.0
    ratio = 0.0
    n = 0
    converged = False
    for n in range(n_max):
        mag = math.exp(_log_coefficient(params, n) + n * log_az)
        term = -mag if (negative and n % 2 == 1) else mag
        total += term
        if n > 0:
            ratio = mag / prev_mag if prev_mag > 0.0 else 0.0
            if mag < prev_mag:
                falling = True
            elif falling and mag > prev_mag:
                tail_ok = False
        prev_mag = mag
        if mag <= tol * max(1.0, abs(total)):
            small_streak += 1
            if small_streak >= 2:
                converged = True
                break
        else:
            small_streak = 0
    return SeriesResult(total, n + 1, mag, converged, tail_ok, ratio)


def ml_classic(
    alpha: float, z: float, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> SeriesResult:
    """One-parameter form: sum z**n / Gamma(alpha*n + 1)."""
    return ml_k(MLParams(1.0, alpha, 1.0, 1.0, 1.0, 1.0, 1.0), z, tol, n_max)


def ml_wiman(
    alpha: float, beta: float, z: float, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> SeriesResult:
    """Two-parameter form: sum z**n / Gamma(alpha*n + beta)."""
    return ml_k(MLParams(1.0, alpha, beta, 1.0, 1.0, 1.0, 1.0), z, tol, n_max)


def ml_prabhakar(
    alpha: float,
    beta: float,
    gamma: float,
    z: float,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_N_MAX,
) -> SeriesResult:
    """Three-parameter form: sum (gamma)_n z**n / (Gamma(alpha*n + beta) n!)."""
    return ml_k(MLParams(1.0, alpha, beta, gamma, 1.0, 1.0, 1.0), z, tol, n_max)


def ml_shukla(
    alpha: float,
    beta: float,
    gamma: float,
    q: float,
    z: float,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_N_MAX,
) -> SeriesResult:
    """Real numerator stride: sum (gamma)_{qn} z**n / (Gamma(alpha*n + beta) n!)."""
    return ml_k(MLParams(1.0, alpha, beta, gamma, 1.0, 1.0, q), z, tol, n_max)


def ml_salim(
    alpha: float,
    beta: float,
    gamma: float,
    delta: float,
    z: float,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_N_MAX,
) -> SeriesResult:
    """Pochhammer denominator: sum (gamma)_n z**n / (Gamma(alpha*n + beta) (delta)_n)."""
    return ml_k(MLParams(1.0, alpha, beta, gamma, delta, 1.0, 1.0), z, tol, n_max)


def ml_salim_faraj(
    alpha: float,
    beta: float,
    gamma: float,
    delta: float,
    p: float,
    q: float,
    z: float,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_N_MAX,
) -> SeriesResult:
    """Both strides real: sum (gamma)_{qn} z**n / (Gamma(alpha*n + beta) (delta)_{pn})."""
    return ml_k(MLParams(1.0, alpha, beta, gamma, delta, p, q), z, tol, n_max)


def ml_series_coefficients(
    params: MLParams, w_max: float, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> np.ndarray:
    """Coefficient array c with E(w) = sum_n c[n] w**n truncated for |w| <= w_max.

    The cut is chosen so the all-positive majorant at |w| = w_max satisfies
    the two-consecutive-small-terms rule; raises NoConvergence if n_max is
    not enough.
    """
    _check_series_args(tol, n_max)
    if w_max < 0.0:
        raise DomainError(f"w_max must be non-negative, got {w_max!r}")
    coefs = []
    if w_max == 0.0:
        coefs.append(math.exp(_log_coefficient(params, 0)))
        return np.asarray(coefs)
    log_w = math.log(w_max)
    total = 0.0
    small_streak = 0
    for n in range(n_max):
        lc = _log_coefficient(params, n)
        coefs.append(math.exp(lc))
        mag = math.exp(lc + n * log_w)
        total += mag
        if mag <= tol * max(1.0, total):
            small_streak += 1
            if small_streak >= 2:
                return np.asarray(coefs)
        else:
            small_streak = 0
    raise NoConvergence(
        f"series coefficients not converged for |w| <= {w_max!r} within n_max={n_max}"
    )


def ml_k_on_array(
    params: MLParams, w, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> np.ndarray:
    """Vectorized E(w) over an array of arguments (Horner on the truncated series)."""
    w = np.asarray(w, dtype=float)
    coefs = ml_series_coefficients(params, float(np.max(np.abs(w))) if w.size else 0.0, tol, n_max)
    return np.polynomial.polynomial.polyval(w, coefs)

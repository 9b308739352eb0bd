"""Series evaluation of the k-deformed Fox-Wright function.

    Psi(z) = sum_n  prod_j Gamma_k(a_j + n A_j) / prod_j Gamma_k(b_j + n B_j)
             * z**n / n!

Upper and lower parameter lists are independent (each up to four (value,
weight) pairs, possibly empty).  The function is entire when the growth
index (sum B_j - sum A_j)/k + 1 is positive, which is required here.  Terms
are assembled in log space with the same stopping rule as the
Mittag-Leffler engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import log_k_gamma
from .errors import DomainError
from .mittag import DEFAULT_N_MAX, DEFAULT_TOL, SeriesResult, _check_series_args

__all__ = ["WrightParams", "wright_k"]

_MAX_PAIRS = 4


@dataclass(frozen=True)
class WrightParams:
    """Deformation k plus upper/lower (value, weight) parameter pairs."""

    k: float
    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        if not (self.k > 0.0 and math.isfinite(self.k)):
            raise DomainError(f"k must be positive finite, got {self.k!r}")
        for name in ("upper", "lower"):
            pairs = tuple((float(a), float(w)) for a, w in getattr(self, name))
            object.__setattr__(self, name, pairs)
            if len(pairs) > _MAX_PAIRS:
                raise DomainError(f"{name} accepts at most {_MAX_PAIRS} pairs")
            for a, w in pairs:
                if not (a > 0.0 and w > 0.0 and math.isfinite(a) and math.isfinite(w)):
                    raise DomainError(f"{name} entries must be positive finite, got {(a, w)!r}")
        if self.growth_index <= 0.0:
            raise DomainError(
                f"growth index must be positive, got {self.growth_index!r}"
            )

    @property
    def growth_index(self) -> float:
        """(sum of lower weights - sum of upper weights)/k + 1."""
        return (
            sum(w for _, w in self.lower) - sum(w for _, w in self.upper)
        ) / self.k + 1.0


def _log_term_ratio(params: WrightParams, n: int) -> float:
    """log of the positive gamma-product factor of term n."""
    num = sum(log_k_gamma(params.k, a + n * w).log_abs for a, w in params.upper)
    den = sum(log_k_gamma(params.k, b + n * w).log_abs for b, w in params.lower)
    return num - den


def wright_k(
    params: WrightParams, z: float, tol: float = DEFAULT_TOL, n_max: int = DEFAULT_N_MAX
) -> SeriesResult:
    """Sum the series at real z with the two-consecutive-small-terms rule."""
    _check_series_args(tol, n_max)
    if z == 0.0:
        return SeriesResult(math.exp(_log_term_ratio(params, 0)), 1, 0.0, True)
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
        log_mag = (
            _log_term_ratio(params, n)
            + n * log_az
            - log_k_gamma(1.0, n + 1.0).log_abs
        )
        mag = math.exp(log_mag)
        total += -mag if (negative and n % 2 == 1) else mag
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

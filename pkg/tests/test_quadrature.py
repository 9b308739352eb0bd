import math

import numpy as np
import pytest

from kspecfun import (
    DomainError,
    NonFiniteSample,
    QuadratureConfig,
    integrate_interval,
    integrate_unit,
)
from kspecfun.extbeta import log_cutoff_exponent
from oracles import V1_CUTOFF_UNIT, beta_classical


def rel(a, b):
    return abs(a - b) / abs(b)


class TestConfig:
    def test_defaults(self):
        cfg = QuadratureConfig()
        assert cfg.abs_tol == 1e-12 and cfg.rel_tol == 1e-10 and cfg.max_levels == 12

    @pytest.mark.parametrize(
        "kw",
        [
            {"abs_tol": 0.0},
            {"abs_tol": 2.0},
            {"rel_tol": -1e-3},
            {"max_levels": 0},
            {"max_levels": 21},
        ],
    )
    def test_invalid(self, kw):
        with pytest.raises(DomainError):
            QuadratureConfig(**kw)


class TestIntegrateUnit:
    def test_constant(self):
        r = integrate_unit(lambda t: np.ones_like(t))
        assert r.converged and abs(r.value - 1.0) < 1e-12
        assert r.evaluations >= 1

    def test_inverse_sqrt_singularities(self):
        r = integrate_unit(lambda t, tc: t**-0.5 * tc**-0.5)
        assert r.converged
        assert abs(r.value - math.pi) <= 1e-10 * math.pi

    def test_cutoff_fixture(self):
        r = integrate_unit(lambda t, tc: np.exp(-1.0 / (t * tc)))
        assert r.converged
        assert rel(r.value, V1_CUTOFF_UNIT) < 1e-9

    def test_polynomial_exactness(self):
        rng = np.random.default_rng(42)
        coefs = rng.uniform(-2.0, 2.0, size=11)
        exact = sum(c / (j + 1) for j, c in enumerate(coefs))
        r = integrate_unit(lambda t: np.polynomial.polynomial.polyval(t, coefs))
        assert abs(r.value - exact) <= 1e-12
        for deg in (0, 3, 10):
            r = integrate_unit(lambda t, d=deg: t**d)
            assert abs(r.value - 1.0 / (deg + 1)) <= 1e-12

    @pytest.mark.parametrize("a", [0.05, 0.1, 0.25, 0.5, 0.75, 1.0])
    @pytest.mark.parametrize("b", [0.05, 0.35, 1.0])
    def test_singularity_grid(self, a, b):
        r = integrate_unit(lambda t, tc: t ** (a - 1.0) * tc ** (b - 1.0))
        assert r.converged
        assert rel(r.value, beta_classical(a, b)) <= 1e-8

    @pytest.mark.parametrize("A", [0.01, 0.1, 1.0, 10.0])
    @pytest.mark.parametrize("c", [0.5, 1.0, 2.0])
    def test_cutoff_robustness(self, A, c):
        # force relative-error refinement so successive levels agree to 1e-9
        # relative even when the integral itself is ~1e-70
        cfg = QuadratureConfig(abs_tol=1e-300, rel_tol=1e-10, max_levels=14)
        f = lambda t, tc: np.exp(log_cutoff_exponent(np.log(t), np.log(tc), A, c))
        r = integrate_unit(f, cfg)
        assert r.converged
        assert r.abs_error_estimate <= 1e-9 * abs(r.value)

    def test_error_estimate_monotone_on_smooth(self):
        for f in (lambda t: np.exp(t), lambda t: t**7 - 3 * t**2 + 1.0,
                  lambda t: np.sin(3.0 * t)):
            estimates = []
            for m in range(2, 11):
                cfg = QuadratureConfig(abs_tol=1e-300, rel_tol=1e-300, max_levels=m)
                estimates.append(integrate_unit(f, cfg).abs_error_estimate)
            above_floor = [e for e in estimates if e > 1e-13]
            assert all(
                later <= earlier
                for earlier, later in zip(above_floor, above_floor[1:])
            )

    def test_non_finite_sample(self):
        with pytest.raises(NonFiniteSample):
            integrate_unit(lambda t: np.where(t > 0.4, np.nan, 1.0))
        with pytest.raises(NonFiniteSample):
            integrate_unit(lambda t, tc: 1.0 / (t - t))

    def test_non_convergence_returns_best(self):
        cfg = QuadratureConfig(abs_tol=1e-14, rel_tol=1e-14, max_levels=2)
        r = integrate_unit(lambda t, tc: t**-0.5 * tc**-0.5, cfg)
        assert not r.converged
        assert r.value > 0.0

    def test_one_arg_never_sees_endpoint(self):
        seen = []

        def f(t):
            seen.append((float(np.min(t)), float(np.max(t))))
            return np.ones_like(t)

        integrate_unit(f)
        assert all(lo > 0.0 and hi < 1.0 for lo, hi in seen)


class TestIntegrateInterval:
    def test_constant(self):
        r = integrate_interval(lambda s: np.ones_like(s), 2.0, 5.0)
        assert abs(r.value - 3.0) < 1e-11

    def test_polynomial(self):
        r = integrate_interval(lambda s: s**2, 0.0, 1.0)
        assert abs(r.value - 1.0 / 3.0) < 1e-12

    def test_beta_identity_both_endpoints(self):
        r = integrate_interval(lambda s: (1.0 - s) ** -0.5 * s**-0.5, 0.0, 1.0)
        assert rel(r.value, math.pi) <= 1e-7

    def test_shifted_interval(self):
        r = integrate_interval(lambda s: np.exp(s), -1.5, 2.0)
        assert rel(r.value, math.exp(2.0) - math.exp(-1.5)) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            integrate_interval(lambda s: s, 1.0, 1.0)
        with pytest.raises(DomainError):
            integrate_interval(lambda s: s, 2.0, 1.0)
        with pytest.raises(DomainError):
            integrate_interval(lambda s: s, 0.0, math.inf)

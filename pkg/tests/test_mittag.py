import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kspecfun import (
    DomainError,
    MLParams,
    k_gamma,
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
from oracles import SHUKLA_QHALF, V4_PRABHAKAR, V5_SALIM, V6_SALIM_FARAJ, ml_direct


def rel(a, b):
    return abs(a - b) / abs(b)


ONES = MLParams(1, 1, 1, 1, 1, 1, 1)


class TestParams:
    @pytest.mark.parametrize(
        "kw",
        [
            {"k": 0.0}, {"alpha": -1.0}, {"beta": 0.0}, {"gamma": -2.0},
            {"delta": 0.0}, {"p": 0.0}, {"q": -1.0},
        ],
    )
    def test_positivity(self, kw):
        base = dict(k=1, alpha=1, beta=1, gamma=1, delta=1, p=1, q=1)
        base.update(kw)
        with pytest.raises(DomainError):
            MLParams(**base)

    def test_convergence_condition(self):
        with pytest.raises(DomainError):
            MLParams(1, 1, 1, 1, 1, 1, 2.0)  # q = alpha + p
        with pytest.raises(DomainError):
            MLParams(1, 0.5, 1, 1, 1, 0.5, 1.5)
        MLParams(1, 1, 1, 1, 1, 1, 1.99)

    def test_series_arg_validation(self):
        with pytest.raises(DomainError):
            ml_k(ONES, 1.0, tol=1e-3)
        with pytest.raises(DomainError):
            ml_k(ONES, 1.0, n_max=4)


class TestClosedForms:
    def test_exp(self):
        r = ml_k(ONES, 1.0)
        assert r.converged
        assert rel(r.value, math.e) <= 1e-12

    def test_exp_squared(self):
        assert rel(ml_classic(1.0, 2.0).value, math.e**2) <= 1e-12

    def test_cosh(self):
        assert rel(ml_k(MLParams(1, 2, 1, 1, 1, 1, 1), 1.0).value, math.cosh(1.0)) <= 1e-12
        assert rel(ml_classic(2.0, 4.0).value, math.cosh(2.0)) <= 1e-12

    def test_wiman_forms(self):
        assert rel(ml_wiman(1.0, 2.0, 1.0).value, math.e - 1.0) <= 1e-12
        assert rel(ml_wiman(1.0, 1.0, -1.0).value, 1.0 / math.e) <= 1e-12
        assert rel(ml_wiman(2.0, 2.0, 1.0).value, math.sinh(1.0)) <= 1e-12

    def test_z_zero(self):
        for params in (ONES, MLParams(2, 1.5, 2.5, 1.1, 1.2, 1.3, 0.7)):
            r = ml_k(params, 0.0)
            assert r.terms_used == 1 and r.converged
            assert rel(r.value, 1.0 / k_gamma(params.k, params.beta)) <= 1e-13

    def test_prabhakar_reduces_to_exp(self):
        assert rel(ml_prabhakar(1, 1, 1, 1.0).value, math.e) <= 1e-12

    def test_prabhakar_fixture(self):
        r = ml_prabhakar(1, 1, 2, 0.5)
        assert rel(r.value, V4_PRABHAKAR) <= 1e-12
        # closed form (gamma = 2): 1.5 * sqrt(e)
        assert rel(r.value, 1.5 * math.sqrt(math.e)) <= 1e-12

    def test_shukla_fixtures(self):
        assert rel(ml_shukla(1, 1, 1, 1, 1.0).value, math.e) <= 1e-12
        assert rel(ml_shukla(1, 1, 2, 0.5, 1.0).value, SHUKLA_QHALF) <= 1e-12
        assert rel(ml_shukla(1, 2, 1.5, 1, 0.0).value, 1.0) <= 1e-13

    def test_salim_fixtures(self):
        # gamma = delta collapses the Pochhammer ratio
        assert rel(ml_salim(1, 2, 1.4, 1.4, 1.0).value, math.e - 1.0) <= 1e-12
        assert rel(ml_salim(1, 1, 2, 3, 1.0).value, V5_SALIM) <= 1e-12

    def test_salim_faraj_fixture(self):
        assert rel(ml_salim_faraj(1, 1, 1.5, 2, 2, 1, 0.8).value, V6_SALIM_FARAJ) <= 1e-12


class TestCollapseChain:
    def test_bit_for_bit(self):
        z = 1.3
        assert ml_classic(1.7, z).value == ml_k(MLParams(1, 1.7, 1, 1, 1, 1, 1), z).value
        assert ml_wiman(1.7, 2.2, z).value == ml_k(MLParams(1, 1.7, 2.2, 1, 1, 1, 1), z).value
        assert (
            ml_prabhakar(1.7, 2.2, 1.4, z).value
            == ml_k(MLParams(1, 1.7, 2.2, 1.4, 1, 1, 1), z).value
        )
        assert (
            ml_shukla(1.7, 2.2, 1.4, 0.6, z).value
            == ml_k(MLParams(1, 1.7, 2.2, 1.4, 1, 1, 0.6), z).value
        )
        assert (
            ml_salim(1.7, 2.2, 1.4, 1.9, z).value
            == ml_k(MLParams(1, 1.7, 2.2, 1.4, 1.9, 1, 1), z).value
        )
        assert (
            ml_salim_faraj(1.7, 2.2, 1.4, 1.9, 1.2, 0.8, z).value
            == ml_k(MLParams(1, 1.7, 2.2, 1.4, 1.9, 1.2, 0.8), z).value
        )

    def test_salim_faraj_unit_strides_match_salim(self):
        assert (
            ml_salim_faraj(1.2, 1.1, 1.4, 1.9, 1.0, 1.0, 0.7).value
            == ml_salim(1.2, 1.1, 1.4, 1.9, 0.7).value
        )

    @pytest.mark.parametrize("z", [-2.0, -0.7, 0.4, 1.1, 2.0])
    @pytest.mark.parametrize(
        "params",
        [
            ONES,
            MLParams(1, 1.7, 2.2, 1.4, 1.9, 1.2, 0.8),
            MLParams(1, 0.8, 1.0, 2.0, 1.5, 1.0, 1.2),
            MLParams(2, 1.5, 1.0, 1.1, 1.2, 1.0, 1.0),
            MLParams(0.5, 1.0, 0.7, 0.9, 1.3, 0.8, 1.1),
        ],
    )
    def test_direct_summation_oracle(self, params, z):
        got = ml_k(params, z).value
        want = ml_direct(
            params.k, params.alpha, params.beta, params.gamma,
            params.delta, params.p, params.q, z, terms=80,
        )
        assert rel(got, want) <= 1e-12


class TestDiagnostics:
    def test_positivity_for_nonnegative_z(self):
        for z in (0.0, 0.3, 1.5):
            r = ml_k(MLParams(1, 1.2, 1.5, 1.1, 1.3, 1.0, 0.9), z)
            floor = 1.0 / k_gamma(1.0, 1.5)
            assert r.value >= floor - 1e-14

    def test_term_ratio_small_at_stop(self):
        for params, z in (
            (ONES, 1.0),
            (MLParams(2, 1.5, 1, 1.1, 1.2, 1, 1), 0.5),
            (MLParams(1, 1, 1.5, 1.3, 1.2, 1.3, 1.1), -0.5),
        ):
            r = ml_k(params, z)
            assert r.converged
            assert r.final_term_ratio < 0.5

    def test_alternating_bound(self):
        for z in (-0.5, -1.0, -2.0):
            r = ml_k(ONES, z)
            dense = ml_direct(1, 1, 1, 1, 1, 1, 1, z, terms=300)
            assert r.tail_decreasing
            # truncation bound plus the partial-sum rounding budget
            # (cancellation makes the absolute float noise scale with the
            # peak term, here <= e^|z|)
            noise = r.terms_used * 2.0**-52 * math.exp(abs(z))
            assert abs(r.value - dense) <= r.last_term_abs + noise

    def test_non_convergence_flag(self):
        r = ml_k(ONES, 30.0, n_max=8)
        assert not r.converged
        assert r.terms_used == 8

    def test_invariant_last_term_bound(self):
        r = ml_k(ONES, 1.0, tol=1e-10)
        assert r.last_term_abs <= 1e-10 * max(1.0, abs(r.value))


class TestVectorized:
    def test_matches_scalar(self):
        params = MLParams(2, 1.5, 1.2, 1.1, 1.3, 1.0, 0.9)
        w = np.linspace(-1.5, 1.5, 31)
        vals = ml_k_on_array(params, w)
        for wi, vi in zip(w, vals):
            assert rel(vi, ml_k(params, float(wi)).value) <= 1e-12

    def test_zero_array(self):
        vals = ml_k_on_array(ONES, np.zeros(4))
        assert np.allclose(vals, 1.0, rtol=1e-14)

    def test_coefficients_prefix_stable(self):
        params = MLParams(1, 1.1, 1.4, 1.2, 1.3, 1.0, 0.8)
        short = ml_series_coefficients(params, 0.5)
        long = ml_series_coefficients(params, 2.0)
        assert len(long) >= len(short)
        assert np.array_equal(long[: len(short)], short)


@settings(max_examples=80, deadline=None)
@given(
    z=st.floats(min_value=-2.0, max_value=2.0),
    alpha=st.floats(min_value=0.5, max_value=2.5),
    beta=st.floats(min_value=0.5, max_value=2.5),
    gamma=st.floats(min_value=0.5, max_value=2.5),
    delta=st.floats(min_value=0.5, max_value=2.5),
)
def test_property_direct_oracle(z, alpha, beta, gamma, delta):
    got = ml_salim(alpha, beta, gamma, delta, z).value
    want = ml_direct(1.0, alpha, beta, gamma, delta, 1.0, 1.0, z, terms=120)
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))

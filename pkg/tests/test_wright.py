import math

import pytest

from kspecfun import DomainError, WrightParams, k_gamma, wright_k
from oracles import V7_WRIGHT_BESSEL, WRIGHT_W1, WRIGHT_W2, WRIGHT_W3, wright_direct


def rel(a, b):
    return abs(a - b) / abs(b)


class TestParams:
    def test_growth_index(self):
        p = WrightParams(1.0, ((1.0, 1.0),), ((1.0, 1.5),))
        assert p.growth_index == pytest.approx(1.5)
        with pytest.raises(DomainError):
            WrightParams(1.0, ((1.0, 2.5),), ((1.0, 1.0),))  # index -0.5
        with pytest.raises(DomainError):
            WrightParams(1.0, ((1.0, 2.0),), ((1.0, 1.0),))  # index exactly 0

    def test_length_cap(self):
        with pytest.raises(DomainError):
            WrightParams(1.0, ((1.0, 0.1),) * 5, ())

    def test_positive_entries(self):
        with pytest.raises(DomainError):
            WrightParams(1.0, ((0.0, 1.0),), ())
        with pytest.raises(DomainError):
            WrightParams(1.0, (), ((1.0, -1.0),))

    def test_empty_lists_allowed(self):
        r = wright_k(WrightParams(1.0, (), ()), 0.7)
        assert rel(r.value, math.exp(0.7)) <= 1e-13


class TestValues:
    def test_cancellation_gives_exp(self):
        for k in (1.0, 2.5):
            p = WrightParams(k, ((1.3, 0.7),), ((1.3, 0.7),))
            r = wright_k(p, 1.0)
            assert r.converged
            assert rel(r.value, math.e) <= 1e-13

    def test_bessel_type_fixture(self):
        r = wright_k(WrightParams(1.0, (), ((1.0, 1.0),)), 1.0)
        assert rel(r.value, V7_WRIGHT_BESSEL) <= 1e-12

    def test_z_zero_product(self):
        p = WrightParams(2.0, ((2.0, 1.0),), ((1.5, 0.7), (2.5, 1.1)))
        r = wright_k(p, 0.0)
        want = k_gamma(2.0, 2.0) / (k_gamma(2.0, 1.5) * k_gamma(2.0, 2.5))
        assert r.terms_used == 1
        assert rel(r.value, want) <= 1e-13

    def test_k1_fixture_sets(self):
        r = wright_k(WrightParams(1.0, ((1.5, 0.5),), ((2.0, 1.0),)), 0.8)
        assert rel(r.value, WRIGHT_W1) <= 1e-12
        r = wright_k(
            WrightParams(1.0, ((0.9, 1.1),), ((1.3, 0.4), (1.1, 0.9))), 1.2
        )
        assert rel(r.value, WRIGHT_W3) <= 1e-12

    def test_k2_fixture(self):
        p = WrightParams(2.0, ((2.0, 1.0), (1.2, 0.3)), ((1.5, 0.7), (2.5, 1.1)))
        r = wright_k(p, -0.6)
        assert rel(r.value, WRIGHT_W2) <= 1e-12

    @pytest.mark.parametrize("z", [-1.0, -0.3, 0.2, 0.9])
    @pytest.mark.parametrize(
        "k,upper,lower",
        [
            (1.0, ((1.5, 0.5),), ((2.0, 1.0),)),
            (2.0, ((2.0, 1.0),), ((1.5, 0.7), (2.5, 1.1))),
            (0.5, ((0.8, 0.3),), ((1.2, 0.9),)),
            (1.0, (), ((1.4, 1.3),)),
        ],
    )
    def test_direct_summation_oracle(self, k, upper, lower, z):
        got = wright_k(WrightParams(k, upper, lower), z).value
        want = wright_direct(k, upper, lower, z)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))

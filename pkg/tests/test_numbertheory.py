"""Closed-form L(1, chi) values against truncated-series oracles, and log bounds."""

import math

import numpy as np
import pytest

from lfdyn import (
    ArgumentError,
    BoundInputs,
    DomainViolation,
    LFunctionInputs,
    MissingFundamentalUnit,
    dirichlet_l_at_1,
    log_lower_bound,
    log_zero_free_bound,
)

SERIES_TERMS = 10**6


def series_mod4(terms: int = SERIES_TERMS) -> float:
    """Oracle: sum (-1)^k / (2k+1) over k < terms for the odd character mod 4."""
    k = np.arange(terms)
    return float(np.sum((-1.0) ** (k % 2) / (2 * k + 1)))


def series_mod3(terms: int = SERIES_TERMS) -> float:
    """Oracle: sum chi(n)/n with chi = +1, -1, 0 for n = 1, 2, 0 mod 3."""
    n = np.arange(1, terms + 1)
    chi = np.where(n % 3 == 1, 1.0, np.where(n % 3 == 2, -1.0, 0.0))
    return float(np.sum(chi / n))


class TestClosedForms:
    def test_mod4_matches_series_oracle(self):
        value = dirichlet_l_at_1(LFunctionInputs(parity=-1, h=1, w=4, m=4))
        assert abs(value - math.pi / 4) < 1e-12
        assert abs(value - series_mod4()) < 1e-5

    def test_mod3_matches_series_oracle(self):
        value = dirichlet_l_at_1(LFunctionInputs(parity=-1, h=1, w=6, m=3))
        assert abs(value - math.pi / (3 * math.sqrt(3))) < 1e-12
        assert abs(value - series_mod3()) < 1e-5

    def test_even_case_is_the_stated_formula(self):
        # Pinned to 2*h*log(epsilon) / (w*sqrt(m)) exactly as defined, for
        # the golden-ratio unit at m=5.
        phi = (1 + math.sqrt(5)) / 2
        value = dirichlet_l_at_1(LFunctionInputs(parity=1, h=1, w=2, m=5, epsilon=phi))
        assert abs(value - math.log(phi) / math.sqrt(5)) < 1e-15
        assert abs(value - 0.21520447) < 1e-7

    def test_positive_for_valid_inputs(self):
        assert dirichlet_l_at_1(LFunctionInputs(parity=-1, h=3, w=2, m=23)) > 0
        assert dirichlet_l_at_1(LFunctionInputs(parity=1, h=2, w=2, m=40, epsilon=3.7)) > 0

    def test_decreasing_in_m_increasing_in_h(self):
        values_m = [
            dirichlet_l_at_1(LFunctionInputs(parity=-1, h=1, w=2, m=m))
            for m in (3, 4, 7, 11, 40)
        ]
        assert all(a > b for a, b in zip(values_m, values_m[1:]))
        values_h = [
            dirichlet_l_at_1(LFunctionInputs(parity=-1, h=h, w=2, m=7))
            for h in (1, 2, 3, 10)
        ]
        assert all(a < b for a, b in zip(values_h, values_h[1:]))

    def test_missing_fundamental_unit(self):
        with pytest.raises(MissingFundamentalUnit):
            LFunctionInputs(parity=1, h=1, w=2, m=5)
        with pytest.raises(MissingFundamentalUnit):
            LFunctionInputs(parity=1, h=1, w=2, m=5, epsilon=1.0)
        with pytest.raises(MissingFundamentalUnit):
            LFunctionInputs(parity=1, h=1, w=2, m=5, epsilon=0.5)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(parity=0, h=1, w=1, m=3),
            dict(parity=-1, h=0, w=1, m=3),
            dict(parity=-1, h=1, w=0, m=3),
            dict(parity=-1, h=1, w=1, m=2),
        ],
    )
    def test_invalid_inputs(self, kwargs):
        with pytest.raises(ArgumentError):
            LFunctionInputs(**kwargs)


class TestLogBounds:
    def test_lower_bound_examples(self):
        e_to_e = math.exp(math.e)
        assert abs(log_lower_bound(BoundInputs(e_to_e, 1.0, 2022.0)) + 2022.0) < 1e-9
        assert abs(log_lower_bound(BoundInputs(e_to_e, 1.0, 1.0)) + 1.0) < 1e-12
        assert abs(log_lower_bound(BoundInputs(math.e, 5.0, 7.0)) - math.log(5.0)) < 1e-12

    def test_zero_free_examples(self):
        e_to_e = math.exp(math.e)
        assert abs(log_zero_free_bound(BoundInputs(e_to_e, 1.0, 1.0)) + 3.0) < 1e-12
        assert abs(log_zero_free_bound(BoundInputs(e_to_e, 1.0, 2022.0)) + 2024.0) < 1e-9
        assert abs(log_zero_free_bound(BoundInputs(math.e, 1.0, 9.0))) < 1e-12

    def test_zero_free_equals_lower_with_exponent_plus_two(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            modulus = float(np.exp(rng.uniform(0.01, 40.0)))
            constant = float(rng.uniform(0.1, 10.0))
            exponent = float(rng.uniform(0.1, 3000.0))
            a = log_zero_free_bound(BoundInputs(modulus, constant, exponent))
            b = log_lower_bound(BoundInputs(modulus, constant, exponent + 2.0))
            assert a == b

    def test_domain_violation(self):
        with pytest.raises(DomainViolation):
            BoundInputs(1.0, 1.0, 1.0)
        with pytest.raises(DomainViolation):
            BoundInputs(0.5, 1.0, 1.0)

    def test_invalid_constant_and_exponent(self):
        with pytest.raises(ArgumentError):
            BoundInputs(10.0, 0.0, 1.0)
        with pytest.raises(ArgumentError):
            BoundInputs(10.0, 1.0, -2.0)

"""Pointwise map/derivative evaluation, escape semantics, and the signed power."""

import math

import numpy as np
import pytest

from lfdyn import (
    ArgumentError,
    Escape,
    MapFamily,
    MapSpec,
    eval_derivative,
    eval_map,
    signed_power,
)


def central_diff(spec, x, step):
    lo = eval_map(spec, x - step)
    hi = eval_map(spec, x + step)
    assert lo.ok and hi.ok
    return (hi.value - lo.value) / (2.0 * step)


class TestEvalMap:
    def test_pure_sqrt_term(self):
        spec = MapSpec(MapFamily.ODD, beta_override=1.0, c=0.0)
        assert eval_map(spec, 4.0).value == 0.5

    def test_pure_power_term(self):
        spec = MapSpec(MapFamily.ODD, beta_override=0.0, c=1.0, alpha=1.0)
        assert eval_map(spec, math.e).value == pytest.approx(1.0, abs=1e-12)

    def test_log_pole_escape(self):
        spec = MapSpec(MapFamily.ODD, c=1.0, alpha=2.0)
        assert eval_map(spec, 1.0).escape is Escape.LOG_POLE
        assert eval_derivative(spec, 1.0).escape is Escape.LOG_POLE

    def test_no_pole_when_power_term_inactive(self):
        # c = 0 drops the power term entirely; alpha = 0 makes it bounded.
        assert eval_map(MapSpec(MapFamily.ODD, c=0.0, alpha=2.0), 1.0).value == math.pi
        spec = MapSpec(MapFamily.ODD, c=1.0, alpha=0.0)
        assert eval_map(spec, 1.0).value == math.pi

    def test_domain_violation(self):
        spec = MapSpec(MapFamily.ODD)
        assert eval_map(spec, -2.0).escape is Escape.DOMAIN_VIOLATION
        assert eval_map(spec, 0.0).escape is Escape.DOMAIN_VIOLATION
        assert eval_map(spec, math.nan).escape is Escape.DOMAIN_VIOLATION
        assert eval_map(spec, math.inf).escape is Escape.DOMAIN_VIOLATION

    def test_overflow_escape(self):
        spec = MapSpec(MapFamily.ODD, escape_bound=1.0)
        assert eval_map(spec, 0.01).escape is Escape.OVERFLOW

    def test_even_family_coefficient(self):
        # beta log(eps)/pi replaces beta; with beta = pi the coefficient is log(eps).
        spec = MapSpec(MapFamily.EVEN, epsilon=math.e, c=0.0)
        assert eval_map(spec, 4.0).value == pytest.approx(0.5, rel=1e-12)

    def test_logistic(self):
        spec = MapSpec(MapFamily.LOGISTIC, r=2.5)
        assert eval_map(spec, 0.6).value == pytest.approx(0.6, rel=1e-15)
        assert eval_derivative(spec, 0.6).value == pytest.approx(-0.5, rel=1e-12)

    def test_deterministic_reevaluation(self):
        spec = MapSpec(MapFamily.ODD, c=0.7, alpha=3.3)
        first = eval_map(spec, 2.345).value
        again = eval_map(MapSpec(MapFamily.ODD, c=0.7, alpha=3.3), 2.345).value
        assert first == again


class TestEvalDerivative:
    def test_pure_sqrt_term(self):
        spec = MapSpec(MapFamily.ODD, beta_override=1.0, c=0.0)
        assert eval_derivative(spec, 4.0).value == -0.0625

    def test_pure_power_term_matches_central_difference(self):
        spec = MapSpec(MapFamily.ODD, beta_override=0.0, c=1.0, alpha=1.0)
        d = eval_derivative(spec, math.e).value
        assert d == pytest.approx(-1.0 / math.e, abs=1e-9)
        assert d == pytest.approx(central_diff(spec, math.e, 1e-6), abs=1e-6)

    def test_logistic_derivative(self):
        d = eval_derivative(MapSpec(MapFamily.LOGISTIC, r=2.5), 0.6).value
        assert d == pytest.approx(-0.5, rel=1e-12)


class TestSignedPower:
    def test_odd_extension(self):
        rng = np.random.default_rng(7)
        for alpha in (0.0, 0.5, 1.0, 2.0, 3.7):
            for _ in range(200):
                y = float(rng.uniform(1e-3, 1e3)) * (1 if rng.random() < 0.5 else -1)
                assert signed_power(-y, alpha) == -signed_power(y, alpha)

    def test_integer_alpha_agrees_with_plain_power(self):
        assert signed_power(2.0, 3.0) == 2.0**-3.0
        assert signed_power(-2.0, 3.0) == (-2.0) ** -3  # odd power: same sign
        assert signed_power(0.5, 2.0) == 4.0

    def test_zero_maps_to_zero(self):
        assert signed_power(0.0, 0.0) == 0.0
        assert signed_power(0.0, 2.0) == 0.0


class TestLogisticRange:
    def test_unit_interval_is_invariant_and_never_escapes(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            r = float(rng.uniform(1e-6, 4.0))
            x = float(rng.uniform(0.0, 1.0))
            out = eval_map(MapSpec(MapFamily.LOGISTIC, r=r), x)
            assert out.ok
            assert 0.0 <= out.value <= 1.0


class TestSpecValidation:
    def test_beta_defaults_to_pi(self):
        assert MapSpec(MapFamily.ODD).beta == math.pi

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(family=MapFamily.ODD, h=0),
            dict(family=MapFamily.ODD, w=0),
            dict(family=MapFamily.ODD, alpha=-1.0),
            dict(family=MapFamily.ODD, beta_override=-0.5),
            dict(family=MapFamily.EVEN, epsilon=1.0),
            dict(family=MapFamily.LOGISTIC),
            dict(family=MapFamily.LOGISTIC, r=4.5),
            dict(family=MapFamily.LOGISTIC, r=0.0),
            dict(family=MapFamily.ODD, escape_bound=0.0),
        ],
    )
    def test_rejects_bad_specs(self, kwargs):
        with pytest.raises(ArgumentError):
            MapSpec(**kwargs)


def _random_sqrt_family_spec(rng, family):
    # beta bounded away from 0 and c >= 0 keep |f'| resolvable by central
    # differences in float64 (no near-cancellation between the two terms).
    kwargs = dict(
        family=family,
        beta_override=float(rng.uniform(0.3, 5.0)),
        c=0.0 if rng.random() < 0.1 else float(rng.uniform(0.1, 12.0)),
        alpha=0.0 if rng.random() < 0.1 else float(rng.uniform(0.2, 10.0)),
    )
    if family is MapFamily.EVEN:
        kwargs["epsilon"] = float(rng.uniform(1.1, 20.0))
    return MapSpec(**kwargs)


def _random_valid_point(rng):
    # Log-uniform over (1e-3, 1e3), at least 2e-3 away from the pole at 1.
    while True:
        x = float(np.exp(rng.uniform(np.log(1e-3), np.log(1e3))))
        if abs(x - 1.0) >= 2e-3:
            return x


class TestDerivativeConsistency:
    """Analytic derivative vs central finite differences on random valid points."""

    N_POINTS = 1000

    @pytest.mark.parametrize("family", [MapFamily.ODD, MapFamily.EVEN])
    def test_sqrt_families(self, family):
        rng = np.random.default_rng(101 if family is MapFamily.ODD else 202)
        checked = 0
        while checked < self.N_POINTS:
            spec = _random_sqrt_family_spec(rng, family)
            x = _random_valid_point(rng)
            analytic = eval_derivative(spec, x)
            step = 1e-7 * max(1.0, abs(x))
            lo, hi = eval_map(spec, x - step), eval_map(spec, x + step)
            if not (analytic.ok and lo.ok and hi.ok):
                continue
            fd = (hi.value - lo.value) / (2.0 * step)
            rel = abs(fd - analytic.value) / max(abs(analytic.value), 1e-12)
            assert rel < 1e-5, (
                f"{family} at x={x} spec={spec}: analytic={analytic.value}, fd={fd}"
            )
            checked += 1

    def test_logistic_family(self):
        rng = np.random.default_rng(303)
        for _ in range(self.N_POINTS):
            spec = MapSpec(MapFamily.LOGISTIC, r=float(rng.uniform(0.1, 4.0)))
            x = float(rng.uniform(-2.0, 3.0))
            analytic = eval_derivative(spec, x).value
            step = 1e-7 * max(1.0, abs(x))
            fd = central_diff(spec, x, step)
            assert abs(fd - analytic) / max(abs(analytic), 1e-12) < 1e-5

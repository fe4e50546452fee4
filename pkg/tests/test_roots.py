"""Newton solving, convergence quality, stability classification, guess sweeps."""

import math

import pytest

from lfdyn import (
    ArgumentError,
    DomainViolation,
    MapFamily,
    MapSpec,
    RootFailure,
    Stability,
    classify_stability,
    eval_map,
    guess_sweep,
    newton_solve,
)

LOGISTIC_25 = MapSpec(MapFamily.LOGISTIC, r=2.5)
LOGISTIC_32 = MapSpec(MapFamily.LOGISTIC, r=3.2)


class TestNewtonSolve:
    def test_interior_fixed_point(self):
        rep = newton_solve(LOGISTIC_25, 0.55, tol=1e-10)
        assert rep.failure is None
        assert rep.root == pytest.approx(0.6, abs=1e-9)
        assert rep.iterations <= 20
        assert rep.residual <= 1e-10
        assert rep.stability is Stability.STABLE

    def test_exact_guess_converges_immediately(self):
        rep = newton_solve(LOGISTIC_25, 0.6)
        assert rep.failure is None
        assert rep.iterations <= 1
        assert rep.root == pytest.approx(0.6, abs=1e-12)

    def test_unstable_fixed_point(self):
        rep = newton_solve(LOGISTIC_32, 0.65, tol=1e-10)
        assert rep.root == pytest.approx(0.6875, abs=1e-9)
        assert rep.stability is Stability.UNSTABLE
        assert rep.derivative_at_root == pytest.approx(-1.2, abs=1e-9)

    def test_reported_residual_is_true(self):
        for guess in (0.4, 0.55, 0.7, 0.9):
            rep = newton_solve(LOGISTIC_25, guess, tol=1e-10)
            assert rep.failure is None
            assert abs(eval_map(LOGISTIC_25, rep.root).value - rep.root) <= 1e-10

    def test_quadratic_convergence_tail(self):
        rep = newton_solve(LOGISTIC_25, 0.55, tol=1e-10)
        res = rep.residual_history
        assert len(res) >= 4
        for a, b in zip(res[-4:-1], res[-3:]):
            assert b <= 2.0 * a * a + 1e-15, f"history {res}"

    def test_zero_derivative_failure(self):
        # g'(x) = 1.5 - 5x vanishes at exactly x = 0.3 for r = 2.5.
        rep = newton_solve(LOGISTIC_25, 0.3)
        assert rep.failure is RootFailure.ZERO_DERIVATIVE
        assert rep.root is None
        assert rep.stability is None

    def test_escaped_domain_failure(self):
        spec = MapSpec(MapFamily.ODD, beta_override=0.0, c=1.0, alpha=1.0)
        rep = newton_solve(spec, 0.5)
        assert rep.failure is RootFailure.ESCAPED_DOMAIN
        assert rep.root is None

    def test_max_iterations_failure(self):
        # Chaotic map, no attracting fixed point reachable in one step.
        rep = newton_solve(MapSpec(MapFamily.LOGISTIC, r=4.0), 0.2, tol=1e-300, max_iter=5)
        assert rep.failure is RootFailure.MAX_ITERATIONS
        assert rep.iterations == 5

    def test_fd_fallback_is_flagged(self):
        # At 1 + ulp the power term's value is representable but its
        # derivative overflows, forcing the finite-difference fallback.
        spec = MapSpec(MapFamily.ODD, beta_override=0.0, c=1.0, alpha=6.0)
        rep = newton_solve(spec, math.nextafter(1.0, 2.0), max_iter=1)
        assert rep.used_fd_fallback

    def test_invalid_arguments(self):
        with pytest.raises(ArgumentError):
            newton_solve(LOGISTIC_25, 0.5, tol=0.0)
        with pytest.raises(ArgumentError):
            newton_solve(LOGISTIC_25, 0.5, max_iter=0)
        with pytest.raises(ArgumentError):
            newton_solve(LOGISTIC_25, math.inf)


class TestClassifyStability:
    def test_stable(self):
        assert classify_stability(LOGISTIC_25, 0.6) is Stability.STABLE

    def test_unstable(self):
        assert classify_stability(LOGISTIC_32, 0.6875) is Stability.UNSTABLE

    def test_marginal_at_unit_derivative(self):
        # f'(0) = r, exactly 1 at r = 1.
        assert classify_stability(MapSpec(MapFamily.LOGISTIC, r=1.0), 0.0) is Stability.MARGINAL

    def test_band_controls_the_verdict(self):
        # |f'| = 1.2 at the r=3.2 fixed point: unstable for a narrow band,
        # marginal once the band swallows the excess.
        assert classify_stability(LOGISTIC_32, 0.6875, marginal_band=0.1) is Stability.UNSTABLE
        assert classify_stability(LOGISTIC_32, 0.6875, marginal_band=0.25) is Stability.MARGINAL

    def test_domain_violation(self):
        with pytest.raises(DomainViolation):
            classify_stability(MapSpec(MapFamily.ODD), -1.0)


class TestGuessSweep:
    def test_basins_for_logistic(self):
        # Fixed points are 0 and 0.6; Newton's basins split around the
        # critical point of g at x = 0.3.
        reports = guess_sweep(LOGISTIC_25, [round(0.1 * k, 1) for k in range(1, 10)])
        assert len(reports) == 9
        by_guess = {rep.guess: rep for rep in reports}
        for g in (0.4, 0.5, 0.6, 0.7, 0.8, 0.9):
            assert by_guess[g].root == pytest.approx(0.6, abs=1e-9), f"guess {g}"
        for g in (0.1, 0.2):
            assert by_guess[g].root == pytest.approx(0.0, abs=1e-9), f"guess {g}"
        assert by_guess[0.3].failure is RootFailure.ZERO_DERIVATIVE

    def test_order_preserved(self):
        guesses = [0.9, 0.4, 0.7]
        reports = guess_sweep(LOGISTIC_25, guesses)
        assert [rep.guess for rep in reports] == guesses

    def test_empty_guesses(self):
        assert guess_sweep(LOGISTIC_25, []) == []

    def test_stability_present_iff_derivative_present(self):
        reports = guess_sweep(LOGISTIC_25, [0.1, 0.2, 0.3, 0.55, 0.9])
        for rep in reports:
            assert (rep.stability is None) == (rep.derivative_at_root is None)
            assert (rep.root is None) == (rep.failure is not None)

"""Bifurcation scans: branch counting, escapes, determinism, cross-module checks."""

import numpy as np
import pytest

from lfdyn import (
    ArgumentError,
    MapFamily,
    MapSpec,
    bifurcation_diagram,
    detect_cycle,
    iterate_orbit,
)

LOGISTIC = MapSpec(MapFamily.LOGISTIC, r=3.0)


class TestBifurcationDiagram:
    def test_first_period_doubling_at_r3(self):
        data = bifurcation_diagram(LOGISTIC, "r", (2.8, 3.4, 61), x0=0.3)
        counts = data.branch_counts
        assert counts[0] == 1
        first_doubled = int(np.argmax(counts >= 2))
        assert counts[first_doubled] >= 2
        r_star = float(data.param_values[first_doubled])
        assert abs(r_star - 3.0) <= 0.01
        assert np.all(counts[:first_doubled] == 1)

    def test_period4_window(self):
        data = bifurcation_diagram(LOGISTIC, "r", (3.5, 3.5, 1), x0=0.3)
        assert data.branch_counts[0] == 4
        assert len(data.attractor_samples[0]) == 200

    def test_branch_counts_match_cycle_detection(self):
        for r, expected in ((2.9, 1), (3.2, 2), (3.5, 4)):
            data = bifurcation_diagram(
                MapSpec(MapFamily.LOGISTIC, r=r), "r", (r, r, 1), x0=0.3
            )
            rec = iterate_orbit(MapSpec(MapFamily.LOGISTIC, r=r), 0.3, 50_000, 49_900)
            report = detect_cycle(rec, max_period=16, tol=1e-6)
            assert report.period == expected
            assert data.branch_counts[0] == expected

    def test_escaped_parameters_record_empty_samples(self):
        data = bifurcation_diagram(
            LOGISTIC, "r", (0.5, 3.5, 7), x0=1.5,
            n_iter=3_000, transient=500, samples_per_param=100,
        )
        assert data.branch_counts[0] == 1  # orbit re-enters [0,1] and settles
        assert np.all(data.branch_counts[1:] == 0)
        assert all(len(s) == 0 for s in data.attractor_samples[1:])

    def test_deterministic_across_workers(self):
        seq = bifurcation_diagram(
            LOGISTIC, "r", (2.9, 3.6, 8), x0=0.3, n_iter=4_000, transient=1_000,
            samples_per_param=64, workers=1,
        )
        par = bifurcation_diagram(
            LOGISTIC, "r", (2.9, 3.6, 8), x0=0.3, n_iter=4_000, transient=1_000,
            samples_per_param=64, workers=3,
        )
        assert np.array_equal(seq.param_values, par.param_values)
        assert np.array_equal(seq.branch_counts, par.branch_counts)
        for a, b in zip(seq.attractor_samples, par.attractor_samples):
            assert np.array_equal(a, b)

    def test_sqrt_family_parameter_sweep(self):
        data = bifurcation_diagram(
            MapSpec(MapFamily.ODD, c=0.003), "alpha", (0.0, 6.0, 5),
            x0=0.4, n_iter=4_000, transient=1_000, samples_per_param=50,
        )
        assert len(data.param_values) == 5
        assert np.all(data.branch_counts >= 1)

    def test_validation(self):
        with pytest.raises(ArgumentError):
            bifurcation_diagram(LOGISTIC, "r", (2.8, 3.4, 0), x0=0.3)
        with pytest.raises(ArgumentError):
            bifurcation_diagram(LOGISTIC, "q", (0.0, 1.0, 3), x0=0.3)
        with pytest.raises(ArgumentError):
            bifurcation_diagram(MapSpec(MapFamily.ODD), "r", (2.8, 3.4, 3), x0=0.3)
        with pytest.raises(ArgumentError):
            bifurcation_diagram(
                LOGISTIC, "r", (2.8, 3.4, 3), x0=0.3,
                n_iter=1_000, transient=900, samples_per_param=200,
            )
        with pytest.raises(ArgumentError):
            bifurcation_diagram(LOGISTIC, "r", (2.8, 3.4, 3), x0=0.3, cluster_tol=0.0)

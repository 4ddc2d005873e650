import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slitkit.errors import DomainError, SingularMatrixError
from slitkit.potential import (
    DiscreteMeasure,
    PeriodMatrix,
    annulus_harmonic_measure_inner,
    annulus_period,
    annulus_period_matrix,
    competitor_boundary_dist,
    harmonic_measure_upper_bound,
    log_potential,
    radii_solve,
    shrink_mass_bound,
    squeezing_annulus,
    uniform_arc_measure,
    uniform_circle_measure,
)


class TestMeasures:
    def test_circle_measure_mass_and_support(self):
        mu = uniform_circle_measure(0.5, mass=2.0, n_nodes=256)
        assert abs(mu.total_mass - 2.0) < 1e-14
        assert np.abs(np.abs(mu.nodes) - 0.5).max() < 1e-14

    def test_arc_measure_angles(self):
        mu = uniform_arc_measure(1.5, 0.2, 0.9, n_nodes=64)
        ang = np.angle(mu.nodes)
        assert ang.min() >= 0.2 - 1e-12
        assert ang.max() <= 0.9 + 1e-12

    def test_rejects_negative_weights(self):
        with pytest.raises(DomainError):
            DiscreteMeasure(np.array([1.0 + 0j]), np.array([-1.0]))


class TestLogPotential:
    def test_constant_inside_circle(self):
        mu = uniform_circle_measure(0.7)
        expected = math.log(1.0 / 0.7)
        for w in (0.0, 0.2 + 0.1j, -0.3j):
            assert abs(log_potential(mu, w) - expected) < 1e-12

    def test_far_field_decay(self):
        mu = uniform_circle_measure(0.7, mass=3.0)
        w = 1e6 + 0j
        assert abs(log_potential(mu, w) - 3.0 * math.log(1.0 / abs(w))) < 1e-5

    def test_rejects_node_hit(self):
        mu = uniform_circle_measure(1.0, n_nodes=4)
        with pytest.raises(DomainError):
            log_potential(mu, mu.nodes[0])


class TestHarmonicMeasure:
    def test_boundary_values(self):
        r = 0.3
        assert abs(annulus_harmonic_measure_inner(r, r) - 1.0) < 1e-14
        assert abs(annulus_harmonic_measure_inner(1.0, r)) < 1e-14

    def test_monotone_in_modulus(self):
        r = 0.3
        vals = [annulus_harmonic_measure_inner(t, r) for t in (0.3, 0.5, 0.8, 1.0)]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_rejects_outside_closed_annulus(self):
        with pytest.raises(DomainError):
            annulus_harmonic_measure_inner(0.1, 0.3)


class TestPeriods:
    def test_annulus_matrix_shape_and_symmetry(self):
        pm = annulus_period_matrix(0.4)
        lam = annulus_period(0.4)
        assert pm.entries.shape == (2, 2)
        assert abs(pm.entries[0, 0] - lam) < 1e-15
        assert abs(pm.entries.sum()) < 1e-12

    def test_validation_rejects_asymmetric(self):
        bad = np.array([[1.0, -0.5], [-1.0, 1.0]])
        with pytest.raises(DomainError):
            PeriodMatrix(bad)

    def test_validation_rejects_nonzero_row_sum(self):
        bad = np.array([[1.0, -0.5], [-0.5, 1.0]])
        with pytest.raises(DomainError):
            PeriodMatrix(bad)


class TestRadiiSolve:
    def test_annulus_recovers_zero_modulus(self):
        r = 0.3
        rng = np.random.default_rng(31)
        for _ in range(10):
            z0 = rng.uniform(0.35, 0.95) * np.exp(1j * rng.uniform(0, 2 * math.pi))
            omega = annulus_harmonic_measure_inner(z0, r)
            radii = radii_solve(annulus_period_matrix(r), 0, [omega])
            assert abs(radii[0] - abs(z0)) < 1e-12

    def test_synthetic_roundtrip(self):
        rng = np.random.default_rng(32)
        for _ in range(10):
            a, b, c = rng.uniform(0.2, 2.0, 3)
            entries = np.array(
                [
                    [a + b, -a, -b],
                    [-a, a + c, -c],
                    [-b, -c, b + c],
                ]
            )
            pm = PeriodMatrix(entries)
            radii_true = rng.uniform(0.1, 0.9, 2)
            y = np.log(1.0 / radii_true)
            rhs = entries[np.ix_([0, 1], [0, 1])] @ y
            out = radii_solve(pm, 2, rhs)
            assert np.abs(out - radii_true).max() < 1e-12

    def test_singular_minor_raises(self):
        pm = PeriodMatrix(np.zeros((2, 2)))
        with pytest.raises(SingularMatrixError):
            radii_solve(pm, 0, [0.5])


class TestSqueezing:
    def test_formula(self):
        assert squeezing_annulus(0.5 + 0j, 0.25) == 0.5
        assert abs(squeezing_annulus(0.3 + 0j, 0.25) - 0.25 / 0.3) < 1e-15

    def test_rejects_boundary(self):
        with pytest.raises(DomainError):
            squeezing_annulus(1.0 + 0j, 0.25)
        with pytest.raises(DomainError):
            squeezing_annulus(0.25 + 0j, 0.25)

    @settings(max_examples=80, deadline=None)
    @given(t=st.floats(0.26, 0.99))
    def test_inversion_symmetry_to_one_ulp(self, t):
        r = 0.25
        s1 = squeezing_annulus(complex(t), r)
        s2 = squeezing_annulus(complex(r / t), r)
        assert abs(s1 - s2) <= np.spacing(max(s1, s2))

    @settings(max_examples=80, deadline=None)
    @given(mod=st.floats(0.26, 0.99), ang=st.floats(0.0, 2 * math.pi))
    def test_lower_bound_sqrt_r(self, mod, ang):
        r = 0.25
        z = mod * complex(math.cos(ang), math.sin(ang))
        assert squeezing_annulus(z, r) >= math.sqrt(r) - 1e-15


class TestBounds:
    def test_shrink_mass_bound_value(self):
        assert abs(shrink_mass_bound(math.e, 1.0) - 1.0) < 1e-15

    def test_shrink_mass_bound_increases_with_diam(self):
        b1 = shrink_mass_bound(1.0, 0.01)
        b2 = shrink_mass_bound(1.0, 0.1)
        assert 0.0 < b1 < b2

    def test_shrink_mass_bound_rejects_diam_at_least_dist(self):
        with pytest.raises(DomainError):
            shrink_mass_bound(1.0, 1.0)

    def test_harmonic_measure_bound_clamps_at_zero(self):
        assert harmonic_measure_upper_bound(2.0, 1.0, 0.5) == 0.0
        val = harmonic_measure_upper_bound(0.5, 1.0, 0.5)
        assert abs(val - 0.5 * math.log(2.0)) < 1e-15


class TestCompetitor:
    def test_never_beats_formula(self):
        r = 0.25
        rng = np.random.default_rng(33)
        for t in rng.uniform(0.3, 0.95, 3):
            s = squeezing_annulus(complex(t), r)
            for x in np.linspace(0.3, 0.95, 7):
                assert competitor_boundary_dist(r, float(x), float(t)) <= s + 1e-8

    def test_canonical_parameters_attain(self):
        r = 0.25
        for t in (0.35, 0.5, 0.8):
            s = squeezing_annulus(complex(t), r)
            d1 = competitor_boundary_dist(r, t, t)
            d2 = competitor_boundary_dist(r, r / t, t, inverted=True)
            assert abs(max(d1, d2) - s) < 1e-8

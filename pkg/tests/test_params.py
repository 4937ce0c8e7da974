"""Coupling map and parameter containers."""

from fractions import Fraction

import numpy as np
import pytest

from bhdimer import (
    DomainError,
    EffectiveCouplings,
    MicroscopicParams,
    ModelParams,
    NonpositiveTemperatureError,
    ScatteringSingularityError,
    map_couplings,
    to_model_params,
)


def exact_couplings(t, u0, u2):
    """Independent evaluation of each fraction in exact rational arithmetic."""
    t2 = Fraction(t) ** 2
    d_sum = Fraction(u0) + Fraction(u2)
    d_diff = Fraction(u0) - 2 * Fraction(u2)
    k1 = 2 * t2 / d_sum
    k2 = 2 * t2 / (3 * d_sum) + 4 * t2 / (3 * d_diff)
    k0 = 4 * t2 / (3 * d_sum) - 4 * t2 / (3 * d_diff)
    return k0, k1, k2


class TestMapCouplings:
    def test_reference_point(self):
        c = map_couplings(MicroscopicParams(t=1, u0=4, u2=1))
        assert c.k0 == pytest.approx(-2 / 5, rel=1e-15)
        assert c.k1 == pytest.approx(2 / 5, rel=1e-15)
        assert c.k2 == pytest.approx(4 / 5, rel=1e-15)

    def test_rescaled_point(self):
        # frozen from the exact-fraction oracle: (-4/9, 2/3, 10/9)
        c = map_couplings(MicroscopicParams(t=2, u0=10, u2=2))
        assert c.k1 == pytest.approx(2 / 3, rel=1e-15)
        assert c.k2 == pytest.approx(10 / 9, rel=1e-15)
        assert c.k0 == pytest.approx(-4 / 9, rel=1e-15)
        k0, k1, k2 = exact_couplings(2, 10, 2)
        assert (k0, k1, k2) == (Fraction(-4, 9), Fraction(2, 3), Fraction(10, 9))

    def test_matches_exact_fractions_randomized(self):
        rng = np.random.default_rng(101)
        checked = 0
        while checked < 300:
            t = float(rng.uniform(0.1, 5.0))
            u0, u2 = (float(v) for v in rng.uniform(-10.0, 10.0, 2))
            if abs(u0 + u2) < 1e-3 or abs(u0 - 2 * u2) < 1e-3:
                continue
            checked += 1
            c = map_couplings(MicroscopicParams(t=t, u0=u0, u2=u2))
            k0, k1, k2 = exact_couplings(t, u0, u2)
            assert c.k0 == pytest.approx(float(k0), rel=1e-13, abs=1e-300)
            assert c.k1 == pytest.approx(float(k1), rel=1e-13)
            assert c.k2 == pytest.approx(float(k2), rel=1e-13, abs=1e-300)

    def test_difference_identity_randomized(self):
        rng = np.random.default_rng(102)
        checked = 0
        while checked < 1000:
            t = float(rng.uniform(0.1, 5.0))
            u0, u2 = (float(v) for v in rng.uniform(-10.0, 10.0, 2))
            if abs(u0 + u2) < 1e-3 or abs(u0 - 2 * u2) < 1e-3:
                continue
            checked += 1
            c = map_couplings(MicroscopicParams(t=t, u0=u0, u2=u2))
            scale = max(abs(c.k0), abs(c.k1), abs(c.k2))
            assert abs(c.k0 - (c.k1 - c.k2)) <= 1e-12 * scale

    def test_scaling_leaves_dimensionless_couplings_invariant(self):
        rng = np.random.default_rng(103)
        for _ in range(100):
            t = float(rng.uniform(0.1, 2.0))
            u0, u2 = (float(v) for v in rng.uniform(-8.0, 8.0, 2))
            if abs(u0 + u2) < 1e-2 or abs(u0 - 2 * u2) < 1e-2:
                continue
            scale = float(rng.uniform(0.5, 10.0))
            base = map_couplings(MicroscopicParams(t=t, u0=u0, u2=u2))
            scaled = map_couplings(
                MicroscopicParams(t=scale * t, u0=scale * u0, u2=scale * u2)
            )
            assert scaled.k0 == pytest.approx(scale * base.k0, rel=1e-12, abs=1e-300)
            assert scaled.k1 == pytest.approx(scale * base.k1, rel=1e-12)
            assert scaled.k2 == pytest.approx(scale * base.k2, rel=1e-12, abs=1e-300)
            a = to_model_params(MicroscopicParams(t=t, u0=u0, u2=u2), temperature=1.0)
            b = to_model_params(
                MicroscopicParams(t=scale * t, u0=scale * u0, u2=scale * u2),
                temperature=1.0,
            )
            assert b.tau == pytest.approx(a.tau, rel=1e-12)
            assert b.gamma == pytest.approx(a.gamma, rel=1e-12, abs=1e-300)

    def test_rejects_sum_resonance(self):
        with pytest.raises(ScatteringSingularityError):
            MicroscopicParams(t=1, u0=1, u2=-1)

    def test_rejects_difference_resonance(self):
        with pytest.raises(ScatteringSingularityError):
            MicroscopicParams(t=1, u0=2, u2=1)

    def test_rejects_nonpositive_tunneling(self):
        with pytest.raises(DomainError):
            MicroscopicParams(t=0, u0=4, u2=1)
        with pytest.raises(DomainError):
            MicroscopicParams(t=-1, u0=4, u2=1)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            MicroscopicParams(t=float("nan"), u0=4, u2=1)


class TestToModelParams:
    def test_reference_point(self):
        p = to_model_params(MicroscopicParams(t=1, u0=4, u2=1), temperature=0.6)
        assert p.tau == pytest.approx(2 / 5, rel=1e-15)
        assert p.gamma == pytest.approx(4 / 5, rel=1e-15)
        assert p.temperature == 0.6
        assert p.omega == 0.0

    def test_rescaled_point(self):
        p = to_model_params(MicroscopicParams(t=2, u0=10, u2=2), temperature=1.0)
        assert p.tau == pytest.approx(1 / 3, rel=1e-15)
        assert p.gamma == pytest.approx(5 / 9, rel=1e-15)

    def test_omega_passthrough(self):
        p = to_model_params(MicroscopicParams(t=1, u0=4, u2=1), temperature=1.0, omega=2.5)
        assert p.omega == 2.5

    def test_singular_input_propagates(self):
        with pytest.raises(ScatteringSingularityError):
            to_model_params(MicroscopicParams(t=1, u0=1, u2=-1), temperature=1.0)


class TestEffectiveCouplings:
    def test_rejects_inconsistent_triple(self):
        with pytest.raises(ValueError):
            EffectiveCouplings(k0=1.0, k1=1.0, k2=1.0)


class TestModelParams:
    def test_identity_shift_recomputed(self):
        p = ModelParams(tau=3.0, gamma=1.25, omega=0.0)
        assert p.r == 3.0 - 1.25

    def test_beta(self):
        assert ModelParams(0, 0, 0, temperature=0.5).beta == 2.0

    def test_zero_temperature_allowed_but_not_thermal(self):
        p = ModelParams(1, 1, 1)
        with pytest.raises(NonpositiveTemperatureError):
            _ = p.beta

    def test_negative_temperature_rejected(self):
        with pytest.raises(DomainError):
            ModelParams(0, 0, 0, temperature=-0.1)

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            ModelParams(float("inf"), 0, 0)

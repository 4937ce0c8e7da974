"""Partition function, internal energy and heat capacity."""

import numpy as np
import pytest
from conftest import random_points, reference_energies

from bhdimer import (
    ModelParams,
    NonpositiveTemperatureError,
    central_diff,
    ground_state_energy,
    heat_capacity,
    internal_energy,
    level_probabilities,
    mean_excitation_energy,
    partition_function,
    thermo_point,
)


def boltzmann_sum(tau, gamma, omega, temperature):
    return float(np.sum(np.exp(-reference_energies(tau, gamma, omega) / temperature)))


def ensemble_mean(tau, gamma, omega, temperature):
    e = reference_energies(tau, gamma, omega)
    w = np.exp(-e / temperature)
    return float(np.dot(e, w) / np.sum(w))


class TestPartitionFunction:
    def test_flat_spectrum_counts_states(self):
        for temperature in (0.1, 1.0, 10.0):
            assert float(partition_function(ModelParams(0, 0, 0, temperature))) == 9.0

    def test_frozen_value_unit_couplings(self):
        # frozen from the nine-term Boltzmann sum, 40-digit arithmetic
        z = float(partition_function(ModelParams(1, 1, 1, 1.0)))
        assert z == pytest.approx(5.7928139845317533856, rel=1e-14)
        assert z == pytest.approx(boltzmann_sum(1, 1, 1, 1.0), rel=1e-12)

    def test_frozen_value_wide_plateau_parameters(self):
        z = float(partition_function(ModelParams(2, 7, 1, 0.6)))
        assert z == pytest.approx(6.5273359968614688605, rel=1e-14)
        assert z == pytest.approx(boltzmann_sum(2, 7, 1, 0.6), rel=1e-12)

    def test_matches_level_sum_randomized(self):
        rng = np.random.default_rng(40)
        for tau, gamma, omega, temperature in random_points(rng, 500):
            if np.max(np.abs(reference_energies(tau, gamma, omega))) / temperature > 500:
                continue
            z = float(partition_function(ModelParams(tau, gamma, omega, temperature)))
            assert z == pytest.approx(boltzmann_sum(tau, gamma, omega, temperature), rel=1e-12)

    def test_lower_bound_and_high_temperature_limit(self):
        rng = np.random.default_rng(41)
        for tau, gamma, omega, temperature in random_points(rng, 200):
            with np.errstate(over="ignore"):
                z = float(partition_function(ModelParams(tau, gamma, omega, temperature)))
            assert z >= 1.0
        assert float(partition_function(ModelParams(5, -3, 2, 1e9))) == pytest.approx(9.0, rel=1e-8)

    def test_rejects_nonpositive_temperature(self):
        with pytest.raises(NonpositiveTemperatureError):
            partition_function(ModelParams(1, 1, 1, 0.0))


class TestLevelProbabilities:
    def test_normalized_and_stable_at_extreme_beta(self):
        p = ModelParams(tau=10, gamma=1, omega=1, temperature=1e-6)
        probs = level_probabilities(p)
        assert np.all(probs >= 0)
        assert float(np.sum(probs)) == pytest.approx(1.0, abs=1e-15)
        assert probs[0] == pytest.approx(1.0, abs=1e-15)  # singlet saturates


class TestInternalEnergy:
    def test_flat_spectrum(self):
        assert internal_energy(ModelParams(0, 0, 0, 1.0)) == 0.0

    def test_low_temperature_limit_is_ground_energy(self):
        p = ModelParams(tau=10, gamma=1, omega=1, temperature=1e-3)
        assert internal_energy(p) == pytest.approx(-7.0, abs=1e-6)
        assert internal_energy(p) == pytest.approx(ground_state_energy(p), abs=1e-6)

    def test_frozen_value_unit_couplings(self):
        u = internal_energy(ModelParams(1, 1, 1, 1.0))
        assert u == pytest.approx(-0.21035684138400314148, rel=1e-13)
        assert u == pytest.approx(ensemble_mean(1, 1, 1, 1.0), rel=1e-12)

    def test_equals_temperature_derivative_of_log_z(self):
        # U = T^2 d(ln Z)/dT, differentiated on the closed form
        for tau, gamma, omega, temperature in [(1, 1, 1, 1.0), (2, 7, 1, 0.6), (-3, 2, 1, 2.0)]:
            fd = central_diff(
                lambda T: float(np.log(partition_function(ModelParams(tau, gamma, omega, T)))),
                temperature,
                1e-6 * temperature,
            )
            u = internal_energy(ModelParams(tau, gamma, omega, temperature))
            assert temperature * temperature * fd == pytest.approx(u, rel=1e-7, abs=1e-9)


class TestHeatCapacity:
    def test_flat_spectrum(self):
        assert heat_capacity(ModelParams(0, 0, 0, 1.0)) == 0.0

    def test_gapped_regime_is_frozen_out(self):
        assert heat_capacity(ModelParams(30, 7, 1, 0.6)) < 1e-3

    def test_frozen_value_unit_couplings(self):
        cv = heat_capacity(ModelParams(1, 1, 1, 1.0))
        assert cv == pytest.approx(0.86685414112463702244, rel=1e-12)

    def test_plateau_flat_in_coupling(self):
        slope = central_diff(
            lambda tau: heat_capacity(ModelParams(tau, 7, 1, 0.6)), 10.0, 1e-4
        )
        assert abs(slope) < 1e-3

    def test_never_negative(self):
        rng = np.random.default_rng(42)
        for tau, gamma, omega, temperature in random_points(rng, 300):
            assert heat_capacity(ModelParams(tau, gamma, omega, temperature)) >= 0.0

    def test_vanishes_in_both_temperature_limits(self):
        p_cold = ModelParams(tau=10, gamma=1, omega=1, temperature=1e-4)
        p_hot = ModelParams(tau=10, gamma=1, omega=1, temperature=1e6)
        assert heat_capacity(p_cold) < 1e-12
        assert heat_capacity(p_hot) < 1e-9

    def test_matches_finite_difference_randomized(self):
        rng = np.random.default_rng(43)
        for tau, gamma, omega, temperature in random_points(rng, 300):
            cv = heat_capacity(ModelParams(tau, gamma, omega, temperature))
            if cv <= 1e-3:
                continue
            fd = central_diff(
                lambda T: mean_excitation_energy(ModelParams(tau, gamma, omega, T)),
                temperature,
                1e-5 * temperature,
            )
            assert fd == pytest.approx(cv, rel=1e-6)


class TestThermoPoint:
    def test_bundles_consistent_values(self):
        p = ModelParams(1, 1, 1, 1.0)
        tp = thermo_point(p)
        assert tp.z == float(partition_function(p))
        assert tp.u == internal_energy(p)
        assert tp.c_v == heat_capacity(p)
        assert tp.params is p

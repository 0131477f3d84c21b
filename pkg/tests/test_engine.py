#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pytest

from core.engine import (
    EnvironmentSpec,
    TwoQubitEnvSpec,
    apply_observable,
    average_coherence_estimate,
    basis_charges,
    coherence_factor,
    coherence_series,
    count_local_increases,
    dfs_coherence,
    factor_magnitudes,
    fidelity_series,
    single_qubit_rdm,
    two_qubit_rdm,
)
from core.errors import UndefinedNormalizationError, UnsupportedBasisError, ValidationError
from core.spin import QubitState, bell_state, density_matrix, uniform_superposition_state
from core.utils_modules import RandomStream, sample_environment, time_grid


class TestCoherenceFactor:
    def test_starts_at_one(self, make_env):
        env = make_env(1, 12)
        assert coherence_factor(env, 0.0) == pytest.approx(1.0 + 0.0j)

    def test_empty_environment(self, empty_env):
        assert coherence_factor(empty_env, 3.7) == 1.0
        series = coherence_series(empty_env, [0.0, 1.0, 2.0])
        np.testing.assert_array_equal(series.values, np.ones(3))

    def test_single_balanced_spin(self):
        env = EnvironmentSpec.from_arrays([0.3], [QubitState.plus()])
        for t in np.linspace(0.0, 10.0, 21):
            assert coherence_factor(env, t) == pytest.approx(np.cos(0.6 * t), abs=1e-15)

    def test_single_spin_closed_form(self):
        state = QubitState.normalized(0.8, 0.6j)
        env = EnvironmentSpec.from_arrays([0.45], [state])
        t = 1.3
        expected = np.cos(0.9 * t) + 1j * state.polarization * np.sin(0.9 * t)
        assert coherence_factor(env, t) == pytest.approx(expected, abs=1e-15)

    def test_rotated_basis_unsupported(self):
        env = EnvironmentSpec.from_arrays([0.3], [QubitState.plus()], basis=0.5)
        with pytest.raises(UnsupportedBasisError):
            coherence_factor(env, 1.0)

    def test_bounded(self, make_env):
        env = make_env(3, 30)
        series = coherence_series(env, time_grid(10.0, 200))
        assert np.all(series.magnitude() <= 1.0 + 1e-15)

    def test_series_matches_pointwise(self, make_env):
        env = make_env(4, 8)
        times = [0.0, 0.25, 1.5, 7.0]
        series = coherence_series(env, times)
        np.testing.assert_allclose(series.values, [coherence_factor(env, t) for t in times], atol=1e-15)

    def test_integer_couplings_are_periodic(self, random_qubit):
        states = [random_qubit(s) for s in range(5)]
        env = EnvironmentSpec.from_arrays([1.0, -2.0, 3.0, 1.0, 4.0], states)
        times = np.linspace(0.0, 3.0, 31)
        shifted = coherence_series(env, times + np.pi).values
        np.testing.assert_allclose(shifted, coherence_series(env, times).values, atol=1e-12)

    def test_eigenstates_keep_unit_magnitude(self):
        env = EnvironmentSpec.from_arrays([0.2, -0.7], [QubitState.zero(), QubitState.one()])
        np.testing.assert_allclose(factor_magnitudes(env, 2.5), [1.0, 1.0])

    def test_non_finite_coupling_rejected(self):
        with pytest.raises(ValidationError):
            EnvironmentSpec.from_arrays([float("inf")], [QubitState.zero()])


class TestAverageEstimate:
    @pytest.mark.parametrize(
        "n, expected",
        [(0, 1.0), (10, 0.03125), (100, 8.881784197001252e-16)],
    )
    def test_values(self, n, expected):
        assert average_coherence_estimate(n) == pytest.approx(expected, rel=1e-12)

    def test_negative(self):
        with pytest.raises(ValidationError):
            average_coherence_estimate(-1)

    @pytest.mark.slow
    def test_hundred_spin_magnitude(self):
        values = []
        for seed in range(100):
            env = sample_environment(RandomStream(seed), 100, "complex_square", 0.2)
            values.append(abs(coherence_factor(env, 1.0)))
        median = float(np.median(values))
        assert 1e-18 <= median <= 1e-13


class TestSingleQubitRdm:
    def test_initial_state(self, make_env):
        sys = QubitState.normalized(0.3, 0.4 + 0.2j)
        rho = single_qubit_rdm(sys, make_env(5, 6), 0.0)
        np.testing.assert_allclose(rho.entries, density_matrix(sys).entries, atol=1e-15)

    def test_populations_constant(self, make_env):
        sys = QubitState.normalized(0.3, 0.4 + 0.2j)
        env = make_env(6, 6)
        for t in time_grid(10.0, 40):
            rho = single_qubit_rdm(sys, env, t)
            assert rho.is_valid()
            assert abs(rho[0, 0] - abs(sys.alpha) ** 2) < 1e-14
            assert abs(rho[1, 1] - abs(sys.beta) ** 2) < 1e-14


class TestObservables:
    def test_apply_observable(self):
        values = np.array([3 + 4j, -1.0])
        np.testing.assert_allclose(apply_observable(values, "magnitude"), [5.0, 1.0])
        np.testing.assert_allclose(apply_observable(values, "real_part"), [3.0, -1.0])
        with pytest.raises(ValidationError):
            apply_observable(values, "phase")


class TestTwoQubit:
    def test_charges(self):
        np.testing.assert_allclose(basis_charges((1.0, 1.0)), [2.0, 0.0, 0.0, -2.0])
        np.testing.assert_allclose(basis_charges((1.0, 0.5)), [1.5, 0.5, -0.5, -1.5])

    def test_ground_environment_phases(self):
        omega = 0.35
        env = TwoQubitEnvSpec(spins=((omega, QubitState.zero()),))
        sys = uniform_superposition_state()
        for t in np.linspace(0.0, 6.0, 13):
            rho = two_qubit_rdm(sys, env, t).entries
            assert rho[1, 2] == pytest.approx(0.25, abs=1e-15)
            assert rho[0, 1] == pytest.approx(0.25 * np.exp(2j * omega * t), abs=1e-15)
            assert rho[0, 3] == pytest.approx(0.25 * np.exp(4j * omega * t), abs=1e-15)

    def test_near_diagonal_is_cosine_product(self):
        rng = RandomStream(77)
        omegas = rng.gauss(np.sqrt(0.4), size=10)
        env = TwoQubitEnvSpec(spins=tuple((w, QubitState.plus()) for w in omegas))
        sys = uniform_superposition_state()
        for t in np.linspace(0.0, 5.0, 26):
            rho = two_qubit_rdm(sys, env, t).entries
            assert rho[1, 2].real == pytest.approx(0.25, abs=1e-15)
            assert rho[0, 1].real == pytest.approx(0.25 * np.prod(np.cos(2.0 * omegas * t)), abs=1e-14)

    @pytest.mark.parametrize("theta", [0.0, np.pi / 6, np.pi / 4, np.pi / 2])
    def test_singlet_is_protected(self, make_two_qubit_env, theta):
        env = make_two_qubit_env(9, 12, basis=theta)
        singlet = bell_state("11")
        times = time_grid(20.0, 40)
        np.testing.assert_allclose(fidelity_series(singlet, env, times), np.ones(times.size), atol=1e-12)

    def test_states_stay_valid(self, make_two_qubit_env):
        env = make_two_qubit_env(10, 8, basis=0.9, weights=(1.0, 0.4))
        for t in (0.0, 0.7, 3.3):
            assert two_qubit_rdm(uniform_superposition_state(), env, t).is_valid()

    def test_dfs_coherence_constant(self, make_two_qubit_env):
        env = make_two_qubit_env(12, 10)
        series = dfs_coherence(uniform_superposition_state(), env, time_grid(10.0, 50))
        np.testing.assert_allclose(series.values, np.ones(51), atol=1e-14)

    def test_dfs_coherence_needs_central_amplitudes(self, make_two_qubit_env):
        with pytest.raises(UndefinedNormalizationError):
            dfs_coherence(bell_state("00"), make_two_qubit_env(1, 3), [0.0, 1.0])

    def test_unknown_method(self, make_two_qubit_env):
        with pytest.raises(ValidationError):
            fidelity_series(bell_state("11"), make_two_qubit_env(1, 2), [0.0], method="magic")

    def test_triplet_x_basis_fidelity_drops_to_half(self, make_two_qubit_env):
        env = make_two_qubit_env(42, 20, basis=np.pi / 2)
        times = np.linspace(5.0, 50.0, 451)
        values = fidelity_series(bell_state("01"), env, times)
        assert abs(float(np.mean(values)) - 0.5) < 0.02


class TestLocalIncreases:
    def test_counts(self):
        assert count_local_increases([1.0, 0.5, 0.7, 0.2, 0.3]) == 2
        assert count_local_increases([1.0]) == 0
        assert count_local_increases([1.0, 1.0 + 1e-13]) == 0
        assert count_local_increases([1.0, 1.0 + 1e-13], tol=0.0) == 1

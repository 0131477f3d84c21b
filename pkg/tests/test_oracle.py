#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pytest

from core.engine import EnvironmentSpec, TwoQubitEnvSpec, rdm_series, single_qubit_rdm, two_qubit_rdm
from core.errors import CapacityError, InvalidDimensionError, ValidationError
from core.oracle import (
    MAX_SPINS,
    ExactPropagator,
    HamiltonianSpec,
    HamiltonianTerm,
    SingleQubitOracle,
    TwoQubitOracle,
    build_hamiltonian,
    evolve_exact,
    oracle_rdm,
    product_state,
    reduced_state_exact,
    reduced_state_exact_two_qubit,
)
from core.reduction import CouplingMatrix
from core.spin import (
    QubitState,
    bell_state,
    density_matrix,
    max_abs_difference,
    rotate_density_matrix,
    uniform_superposition_state,
)
from core.utils_modules import RandomStream, sample_environment, sample_state, time_grid


def _mixed_basis_spec():
    return HamiltonianSpec(
        n_spins=4,
        terms=(
            HamiltonianTerm(0, 1, 0.3 + 0.1j, 0.0, np.pi / 2),
            HamiltonianTerm(1, 2, -0.7, 0.4, 1.1),
            HamiltonianTerm(0, 3, 0.25j, np.pi / 3, 0.0),
            HamiltonianTerm(2, 3, 0.5, 2.0, 0.2),
        ),
    )


class TestHamiltonian:
    def test_single_term_spectrum(self):
        spec = HamiltonianSpec(n_spins=2, terms=(HamiltonianTerm(0, 1, 0.6),))
        h = build_hamiltonian(spec)
        np.testing.assert_allclose(h, np.diag([1.2, -1.2, -1.2, 1.2]))

    def test_empty_is_zero(self):
        h = build_hamiltonian(HamiltonianSpec(n_spins=3))
        np.testing.assert_array_equal(h, np.zeros((8, 8)))

    def test_hermitian(self):
        h = build_hamiltonian(_mixed_basis_spec())
        assert np.max(np.abs(h - h.conj().T)) < 1e-12

    def test_self_interaction_rejected(self):
        with pytest.raises(ValidationError):
            HamiltonianTerm(2, 2, 1.0)

    def test_index_out_of_range(self):
        with pytest.raises(ValidationError):
            HamiltonianSpec(n_spins=2, terms=(HamiltonianTerm(0, 2, 1.0),))

    def test_capacity(self):
        HamiltonianSpec(n_spins=MAX_SPINS)
        with pytest.raises(CapacityError):
            HamiltonianSpec(n_spins=MAX_SPINS + 1)

    def test_environment_capacity(self, make_env):
        with pytest.raises(CapacityError):
            HamiltonianSpec.from_environment(make_env(1, MAX_SPINS))


class TestPropagator:
    def test_zero_time(self):
        propagator = ExactPropagator.from_spec(_mixed_basis_spec())
        psi0 = product_state([sample_state(RandomStream(k), "complex_square") for k in range(4)])
        np.testing.assert_allclose(propagator.evolve(psi0, 0.0), psi0, atol=1e-12)

    def test_norm_energy_and_reversal(self):
        propagator = ExactPropagator.from_spec(_mixed_basis_spec())
        psi0 = product_state([sample_state(RandomStream(k + 10), "complex_square") for k in range(4)])
        energy = propagator.energy(psi0)
        for t in (0.3, 2.0, 7.5):
            psi = propagator.evolve(psi0, t)
            assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)
            assert propagator.energy(psi) == pytest.approx(energy, abs=1e-10)
            np.testing.assert_allclose(propagator.evolve(psi, -t), psi0, atol=1e-12)

    def test_evolve_exact_accepts_matrix(self):
        h = build_hamiltonian(_mixed_basis_spec())
        psi0 = np.zeros(16, dtype=complex)
        psi0[5] = 1.0
        np.testing.assert_allclose(
            evolve_exact(h, psi0, 1.2), ExactPropagator(h).evolve(psi0, 1.2), atol=1e-12
        )

    def test_dimension_mismatch(self):
        propagator = ExactPropagator(np.zeros((4, 4)))
        with pytest.raises(InvalidDimensionError):
            propagator.evolve(np.ones(8) / np.sqrt(8), 1.0)

    def test_product_state_needs_factors(self):
        with pytest.raises(ValidationError):
            product_state([])

    def test_oracle_rdm_of_product(self):
        a, b = QubitState.normalized(0.6, 0.8j), QubitState.plus()
        psi = product_state([a, b, QubitState.one()])
        np.testing.assert_allclose(oracle_rdm(psi, [0]).entries, density_matrix(a).entries, atol=1e-15)
        np.testing.assert_allclose(oracle_rdm(psi, [1]).entries, density_matrix(b).entries, atol=1e-15)


class TestClosedFormAgreement:
    @pytest.mark.parametrize("n", [0, 1, 3, 6])
    def test_single_qubit(self, make_env, random_qubit, random_times, n):
        env = make_env(100 + n, n)
        sys = random_qubit(200 + n)
        oracle = SingleQubitOracle(sys, env)
        for t in random_times(300 + n, count=10):
            assert max_abs_difference(oracle.rdm(t), single_qubit_rdm(sys, env, t)) < 1e-10

    def test_single_spin_formula(self):
        sys, spin = QubitState.normalized(0.6, 0.8), QubitState.normalized(0.3, 0.9j)
        omega, t = 0.7, 1.9
        env = EnvironmentSpec.from_arrays([omega], [spin])
        expected = sys.alpha * np.conj(sys.beta) * (
            abs(spin.alpha) ** 2 * np.exp(2j * omega * t) + abs(spin.beta) ** 2 * np.exp(-2j * omega * t)
        )
        assert reduced_state_exact(sys, env, t)[0, 1] == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize(
        "theta, weights",
        [(0.0, (1.0, 1.0)), (np.pi / 4, (1.0, 1.0)), (np.pi / 2, (1.0, 1.0)), (0.8, (1.0, 0.3))],
    )
    def test_two_qubit_any_basis(self, make_two_qubit_env, random_times, theta, weights):
        env = make_two_qubit_env(7, 4, basis=theta, weights=weights)
        sys = uniform_superposition_state()
        times = random_times(8, count=8)
        oracle_series = rdm_series(sys, env, times, method="oracle")
        for t, rho in zip(times, oracle_series):
            closed = two_qubit_rdm(sys, env, t).entries
            assert np.max(np.abs(rho.entries - closed)) < 1e-10

    def test_two_qubit_convenience(self, make_two_qubit_env):
        env = make_two_qubit_env(12, 3, basis=np.pi / 3)
        sys = bell_state("01")
        for t in (0.0, 1.3, 4.2):
            assert max_abs_difference(reduced_state_exact_two_qubit(sys, env, t), two_qubit_rdm(sys, env, t)) < 1e-10

    @pytest.mark.parametrize("theta", [0.0, np.pi / 6, np.pi / 4, np.pi / 2])
    def test_singlet_invariant_in_oracle(self, make_two_qubit_env, theta):
        env = make_two_qubit_env(31, 6, basis=theta)
        singlet = bell_state("11")
        oracle = TwoQubitOracle(singlet, env)
        target = density_matrix(singlet).entries
        for t in time_grid(10.0, 49):
            assert np.max(np.abs(oracle.rdm(t).entries - target)) < 1e-10

    def test_x_basis_bell_corner_decays(self, make_two_qubit_env):
        env = make_two_qubit_env(42, 20, basis=np.pi / 2)
        sys = bell_state("00")
        times = time_grid(20.0, 400)
        corners = np.array(
            [rotate_density_matrix(two_qubit_rdm(sys, env, t), np.pi / 2)[0, 3] for t in times]
        )
        normalized = np.abs(corners / corners[0])
        assert float(np.mean(normalized)) < 0.05

    @pytest.mark.slow
    def test_fifty_random_configurations(self, random_times):
        for k in range(50):
            n = 1 + k % 10
            rng = RandomStream(1000 + k)
            env = sample_environment(rng, n, "complex_square", 0.2)
            sys = sample_state(rng, "complex_square")
            oracle = SingleQubitOracle(sys, env)
            for t in random_times(2000 + k, count=50):
                closed = single_qubit_rdm(sys, env, t).entries
                assert np.max(np.abs(oracle.rdm(t).entries - closed)) < 1e-10


class TestEnvironmentInteractions:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_inner_couplings_do_not_touch_system(self, n):
        rng = RandomStream(500 + n)
        coupling = CouplingMatrix.random(rng, n + 1, scale=0.5)
        states = [sample_state(rng, "complex_square") for _ in range(n + 1)]
        psi0 = product_state(states)
        full = ExactPropagator.from_spec(HamiltonianSpec.from_coupling_matrix(coupling))
        star = ExactPropagator.from_spec(
            HamiltonianSpec.from_coupling_matrix(coupling, include_environment=False)
        )
        for t in (0.4, 1.7, 6.0):
            rho_full = oracle_rdm(full.evolve(psi0, t), [0]).entries
            rho_star = oracle_rdm(star.evolve(psi0, t), [0]).entries
            assert np.max(np.abs(rho_full - rho_star)) < 1e-10

    def test_star_matrix_matches_closed_form(self):
        rng = RandomStream(91)
        coupling = CouplingMatrix.random(rng, 4, scale=0.5)
        states = [sample_state(rng, "complex_square") for _ in range(4)]
        star = HamiltonianSpec.from_coupling_matrix(coupling, include_environment=False)
        propagator = ExactPropagator.from_spec(star)
        env = EnvironmentSpec.from_arrays(2.0 * np.real(coupling.entries[0, 1:]), states[1:])
        psi0 = product_state(states)
        for t in (0.5, 2.5):
            exact = oracle_rdm(propagator.evolve(psi0, t), [0]).entries
            closed = single_qubit_rdm(states[0], env, t).entries
            assert np.max(np.abs(exact - closed)) < 1e-10


class TestTwoQubitEnvCapacity:
    def test_two_qubit_oracle_capacity(self):
        spins = tuple((0.1, QubitState.zero()) for _ in range(MAX_SPINS - 1))
        with pytest.raises(CapacityError):
            TwoQubitOracle(bell_state("11"), TwoQubitEnvSpec(spins=spins))

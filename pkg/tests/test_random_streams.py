#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pytest

from core.errors import ValidationError
from core.spin import QubitState
from core.utils_modules import (
    RandomStream,
    format_float,
    ordered_map,
    sample_environment,
    sample_state,
    time_grid,
)


class TestRandomStream:
    def test_same_seed_same_draws(self):
        a, b = RandomStream(7), RandomStream(7)
        np.testing.assert_array_equal(a.uniform(size=5), b.uniform(size=5))
        np.testing.assert_array_equal(a.gauss(2.0, size=7), b.gauss(2.0, size=7))

    def test_different_seeds(self):
        assert RandomStream(7).uniform() != RandomStream(8).uniform()

    def test_spawn(self):
        stream = RandomStream(2 ** 64 - 1)
        assert stream.spawn(0).seed == 2 ** 64 - 1
        assert stream.spawn(1).seed == 0
        assert RandomStream(42).spawn(3).seed == 45

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_seed_range(self, seed):
        with pytest.raises(ValidationError):
            RandomStream(seed)

    def test_uniform_range(self):
        values = RandomStream(3).uniform(-1.0, 1.0, size=1000)
        assert values.min() >= -1.0 and values.max() < 1.0

    def test_gauss_scalar_and_odd_sizes(self):
        assert isinstance(RandomStream(5).gauss(), float)
        assert RandomStream(5).gauss(size=3).shape == (3,)

    def test_gauss_pairs_share_radius(self):
        # 前两个数来自同一对均匀数
        first, second = RandomStream(11).gauss(size=2)
        u1 = np.random.Generator(np.random.PCG64(11)).random(1)[0]
        assert np.hypot(first, second) == pytest.approx(np.sqrt(-2.0 * np.log1p(-u1)), rel=1e-12)

    def test_gauss_statistics(self):
        values = RandomStream(99).gauss(1.5, size=200000, mu=0.5)
        assert float(np.mean(values)) == pytest.approx(0.5, abs=0.02)
        assert float(np.std(values)) == pytest.approx(1.5, rel=0.02)


class TestSampling:
    def test_complex_square_normalized(self):
        rng = RandomStream(1)
        for _ in range(50):
            state = sample_state(rng, "complex_square")
            assert abs(state.alpha) ** 2 + abs(state.beta) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_real_unit(self):
        rng = RandomStream(2)
        for _ in range(50):
            state = sample_state(rng, "real_unit")
            assert state.alpha.imag == 0.0 and state.beta.imag == 0.0
            assert 0.0 <= state.alpha.real < 1.0
            assert state.beta.real >= 0.0

    def test_balanced(self):
        assert sample_state(RandomStream(3), "balanced") == QubitState.plus()

    def test_unknown(self):
        with pytest.raises(ValidationError):
            sample_state(RandomStream(3), "gaussian")

    def test_empty_environment(self):
        env = sample_environment(RandomStream(4), 0, "complex_square", 0.2)
        assert env.n == 0

    def test_environment_is_reproducible(self):
        a = sample_environment(RandomStream(42), 6, "complex_square", 0.2)
        b = sample_environment(RandomStream(42), 6, "complex_square", 0.2)
        assert a == b

    def test_couplings_drawn_first(self):
        env = sample_environment(RandomStream(42), 6, "complex_square", 0.2)
        expected = RandomStream(42).gauss(np.sqrt(0.4), size=6)
        np.testing.assert_array_equal(env.omegas, expected)

    def test_ground_states(self):
        env = sample_environment(RandomStream(5), 4, "complex_square", 0.2, env_state="ground")
        assert all(state == QubitState.zero() for state in env.states)

    def test_negative_size(self):
        with pytest.raises(ValidationError):
            sample_environment(RandomStream(5), -1, "balanced", 0.2)


class TestHelpers:
    def test_ordered_map_keeps_order(self):
        items = list(range(20))
        assert ordered_map(lambda x: x * x, items, max_workers=4) == [x * x for x in items]
        assert ordered_map(lambda x: x + 1, items) == [x + 1 for x in items]

    def test_time_grid(self):
        grid = time_grid(10.0, 4)
        np.testing.assert_array_equal(grid, [0.0, 2.5, 5.0, 7.5, 10.0])
        with pytest.raises(ValidationError):
            time_grid(10.0, 0)
        with pytest.raises(ValidationError):
            time_grid(0.0, 5)

    def test_format_float(self):
        assert format_float(3) == "3"
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(np.float64(1.0)) == "1"

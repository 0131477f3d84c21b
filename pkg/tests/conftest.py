#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
测试共用的夹具
"""

import os
import sys

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from core.engine import EnvironmentSpec, TwoQubitEnvSpec  # noqa: E402
from core.utils_modules import RandomStream, sample_environment, sample_state  # noqa: E402


@pytest.fixture
def stream():
    return RandomStream(20240601)


@pytest.fixture
def make_env():
    """make_env(seed, n, sampling="complex_square", lam=0.2, basis=0.0)"""

    def factory(seed, n, sampling="complex_square", lam=0.2, basis=0.0, coupling_scale="per_spin"):
        return sample_environment(
            RandomStream(seed), n, sampling=sampling, lam=lam, coupling_scale=coupling_scale, basis=basis
        )

    return factory


@pytest.fixture
def make_two_qubit_env(make_env):
    def factory(seed, n, basis=0.0, weights=(1.0, 1.0), sampling="complex_square", lam=0.2):
        env = make_env(seed, n, sampling=sampling, lam=lam, basis=basis)
        return TwoQubitEnvSpec.from_environment(env, weights=weights)

    return factory


@pytest.fixture
def random_qubit():
    def factory(seed):
        return sample_state(RandomStream(seed), "complex_square")

    return factory


@pytest.fixture
def random_times():
    def factory(seed, count=50, t_max=10.0):
        return np.sort(RandomStream(seed).uniform(0.0, t_max, size=count))

    return factory


@pytest.fixture
def empty_env():
    return EnvironmentSpec()

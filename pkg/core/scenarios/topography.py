#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
约化密度矩阵全部元素随时间的演化
"""

import logging
from typing import List

from ..engine import TwoQubitEnvSpec, apply_observable, rdm_series, single_qubit_rdm
from ..errors import CapacityError
from ..models import ScenarioConfig, ScenarioTable
from ..oracle import MAX_SPINS, SingleQubitOracle
from ..spin import QubitState, uniform_superposition_state
from .base_scenario import BaseScenario

logger = logging.getLogger("decoherence-lab.scenarios.topography")

TOPOGRAPHY_DEFAULTS = {
    "env_state": "ground",
    "observable": "real_part",
}


def _labels(n_qubits: int) -> List[str]:
    return [format(index, f"0{n_qubits}b") for index in range(2 ** n_qubits)]


def _entry_columns(n_qubits: int) -> List[str]:
    labels = _labels(n_qubits)
    if n_qubits == 1:
        return [f"rho_{a}{b}" for a in labels for b in labels]
    return [f"rho_{a}_{b}" for a in labels for b in labels]


def _check_oracle_capacity(n_spins: int) -> None:
    if n_spins > MAX_SPINS:
        raise CapacityError(f"oracle 最多支持 {MAX_SPINS} 个自旋，本场景需要 {n_spins} 个")


class DmTopography1QScenario(BaseScenario):
    """系统初态 (|0⟩ + |1⟩)/√2，环境默认全部处于 |0⟩"""

    name = "dm_topography_1q"
    description = "单比特约化密度矩阵元素随时间的演化"
    DEFAULTS = dict(TOPOGRAPHY_DEFAULTS)

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = self._environment(config, rng, config.n_env)
        sys = QubitState.plus()
        times = self._times(config)

        if config.engine.value == "oracle":
            _check_oracle_capacity(env.n + 1)
            oracle = SingleQubitOracle(sys, env)
            matrices = [oracle.rdm(t) for t in times]
        else:
            matrices = [single_qubit_rdm(sys, env, t) for t in times]

        table = ScenarioTable(columns=["t"] + _entry_columns(1), seeds=[rng.seed])
        for t, rho in zip(times, matrices):
            values = apply_observable(rho.entries.reshape(-1), config.observable_name)
            table.add_row(float(t), *(float(v) for v in values))
        return table


class DmTopography2QScenario(BaseScenario):
    """系统初态为四个基矢的等权叠加，集体环境默认全部处于 |0⟩"""

    name = "dm_topography_2q"
    description = "双比特约化密度矩阵元素随时间的演化"
    DEFAULTS = dict(TOPOGRAPHY_DEFAULTS)

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = TwoQubitEnvSpec.from_environment(self._environment(config, rng, config.n_env))
        sys = uniform_superposition_state()
        times = self._times(config)

        if config.engine.value == "oracle":
            _check_oracle_capacity(env.n + 2)
        matrices = rdm_series(sys, env, times, method=config.engine.value)

        table = ScenarioTable(columns=["t"] + _entry_columns(2), seeds=[rng.seed])
        for t, rho in zip(times, matrices):
            values = apply_observable(rho.entries.reshape(-1), config.observable_name)
            table.add_row(float(t), *(float(v) for v in values))
        return table

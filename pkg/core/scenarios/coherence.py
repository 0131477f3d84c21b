#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
单比特相干性扫描：随环境规模、随时间以及二者构成的网格
"""

import logging

from ..engine import apply_observable, average_coherence_estimate, coherence_factor, coherence_series
from ..models import ScenarioConfig, ScenarioTable
from .base_scenario import BaseScenario

logger = logging.getLogger("decoherence-lab.scenarios.coherence")


class CoherenceVsNScenario(BaseScenario):
    """固定时刻 t_eval，环境自旋数从 0 增加到 n_env"""

    name = "coherence_vs_n"
    description = "固定时刻下剩余相干性随环境自旋数的变化"
    DEFAULTS = {"n_env": 100}

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = self._environment(config, rng, config.n_env)
        table = ScenarioTable(
            columns=["n", "t", self._observable_column(config), "estimate"],
            seeds=[rng.seed],
        )
        # 前 n 个自旋构成嵌套的环境序列
        for n in range(config.n_env + 1):
            r = coherence_factor(env.truncated(n), config.t_eval)
            value = float(apply_observable(r, config.observable_name))
            table.add_row(n, config.t_eval, value, average_coherence_estimate(n))
        logger.info(f"{self.name}: n = 0..{config.n_env}, t = {config.t_eval}")
        return table


class CoherenceVsTScenario(BaseScenario):
    """固定 n_env 个环境自旋，沿时间网格求 r(t)"""

    name = "coherence_vs_t"
    description = "固定环境规模下相干性随时间的演化"

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = self._environment(config, rng, config.n_env)
        series = coherence_series(env, self._times(config))
        values = series.observable(config.observable_name)
        table = ScenarioTable(columns=["t", self._observable_column(config)], seeds=[rng.seed])
        for t, value in zip(series.times, values):
            table.add_row(float(t), float(value))
        return table


class SurfaceNTScenario(BaseScenario):
    """(n, t) 网格，长表格式输出"""

    name = "surface_n_t"
    description = "相干性关于环境规模与时间的曲面"
    DEFAULTS = {"n_env": 20, "t_max": 5.0, "steps": 50}

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = self._environment(config, rng, config.n_env)
        times = self._times(config)
        table = ScenarioTable(columns=["n", "t", self._observable_column(config)], seeds=[rng.seed])
        for n in range(config.n_env + 1):
            series = coherence_series(env.truncated(n), times)
            for t, value in zip(series.times, series.observable(config.observable_name)):
                table.add_row(n, float(t), float(value))
        return table

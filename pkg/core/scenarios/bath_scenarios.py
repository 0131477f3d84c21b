#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
有限环境与无穷高斯环境的对比、多次种子运行的系综平均（含按环境大小扫描），
以及高斯环境本身的密度与相干性曲面
"""

import logging
from typing import List

import numpy as np

from ..bath import BathParams, analytic_coherence, coupling_density, mean_abs_coupling
from ..engine import coherence_series
from ..models import ScenarioConfig, ScenarioTable
from ..utils_modules import ordered_map
from .base_scenario import BaseScenario

logger = logging.getLogger("decoherence-lab.scenarios.bath")

BATH_DEFAULTS = {
    "n_env": 200,
    "t_max": 3.0,
    "steps": 300,
    "sampling": "balanced",
    "coupling_scale": "per_bath",
}

# 十次随机运行，环境自旋数 0, 10, ..., 200，时间步长 0.25
SWEEP_DEFAULTS = {
    "n_env": 200,
    "n_step": 10,
    "t_max": 5.0,
    "steps": 20,
    "runs": 10,
    "sampling": "real_unit",
    "coupling_scale": "per_spin",
}

# 密度曲线覆盖 ±5 个标准差
DENSITY_WIDTHS = 5.0


class FiniteVsInfiniteScenario(BaseScenario):
    """单次有限环境 r(t) 与 e^{-4λt²} 并列输出"""

    name = "finite_vs_infinite"
    description = "有限环境与无穷高斯环境的相干性对比"
    DEFAULTS = dict(BATH_DEFAULTS)

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        env = self._environment(config, rng, config.n_env)
        series = coherence_series(env, self._times(config))
        finite = series.observable(config.observable_name)
        table = ScenarioTable(columns=["t", "finite", "infinite", "difference"], seeds=[rng.seed])
        for t, value in zip(series.times, finite):
            infinite = analytic_coherence(t, config.lam)
            table.add_row(float(t), float(value), infinite, float(value) - infinite)
        return table


class EnsembleAverageScenario(BaseScenario):
    """
    runs 次独立运行的算术平均

    第 k 次运行使用种子 seed + k；各次运行可以并行，
    结果按运行序号汇总，输出与线程数无关。
    """

    name = "ensemble_average"
    description = "多次种子运行的系综平均与无穷环境对比"
    DEFAULTS = dict(BATH_DEFAULTS, runs=10)

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        times = self._times(config)

        def single_run(k: int):
            rng = self._stream(config, k)
            env = self._environment(config, rng, config.n_env)
            return rng.seed, coherence_series(env, times).observable(config.observable_name)

        logger.info(f"{self.name}: {config.runs} 次运行，线程数 {config.max_workers}")
        results = ordered_map(single_run, range(config.runs), max_workers=config.max_workers)
        seeds = [seed for seed, _ in results]
        runs = np.array([values for _, values in results])

        table = ScenarioTable(
            columns=["t", "mean", "min", "max", "infinite"] + [f"run_{k}" for k in range(config.runs)],
            seeds=seeds,
        )
        mean = runs.mean(axis=0)
        low = runs.min(axis=0)
        high = runs.max(axis=0)
        for index, t in enumerate(times):
            table.add_row(
                float(t),
                float(mean[index]),
                float(low[index]),
                float(high[index]),
                analytic_coherence(t, config.lam),
                *(float(v) for v in runs[:, index]),
            )
        return table


class EnsembleSweepScenario(BaseScenario):
    """
    对 n = 0, n_step, 2·n_step, ..., n_env 逐一做 runs 次运行的系综平均

    每个 n 的第 k 次运行都用种子 seed + k，与 ensemble_average 在 n_env = n 时的
    第 k 次运行相同；difference 列为系综平均减去 e^{-4λt²}。
    """

    name = "ensemble_sweep"
    description = "不同环境自旋数下的系综平均及其与无穷环境之差"
    DEFAULTS = dict(SWEEP_DEFAULTS)

    def sizes(self, config: ScenarioConfig) -> List[int]:
        return list(range(0, config.n_env + 1, config.n_step))

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        times = self._times(config)
        sizes = self.sizes(config)
        infinite = np.array([analytic_coherence(t, config.lam) for t in times])

        def single_run(k: int):
            values = []
            for n in sizes:
                rng = self._stream(config, k)
                env = self._environment(config, rng, n)
                values.append(coherence_series(env, times).observable(config.observable_name))
            return self._stream(config, k).seed, np.array(values)

        logger.info(f"{self.name}: n = {sizes[0]}..{sizes[-1]}，{config.runs} 次运行")
        results = ordered_map(single_run, range(config.runs), max_workers=config.max_workers)
        # runs × sizes × times
        runs = np.array([values for _, values in results])

        table = ScenarioTable(
            columns=["n", "t", "mean", "min", "max", "infinite", "difference"],
            seeds=[seed for seed, _ in results],
        )
        mean = runs.mean(axis=0)
        low = runs.min(axis=0)
        high = runs.max(axis=0)
        for i, n in enumerate(sizes):
            for j, t in enumerate(times):
                table.add_row(
                    n,
                    float(t),
                    float(mean[i, j]),
                    float(low[i, j]),
                    float(high[i, j]),
                    float(infinite[j]),
                    float(mean[i, j] - infinite[j]),
                )
        return table


class GaussianBathScenario(BaseScenario):
    """
    无穷高斯环境本身的数据，不涉及随机抽样

    block = density: 宽度 λ 下的耦合密度，x 为 ω；
    block = mean_abs: 平均耦合强度 √(λ/π)；
    block = coherence: 宽度 μ_j = 2λ·j/spreads (j = 1..spreads) 下的 e^{-4μt²}，x 为 t。
    """

    name = "gaussian_bath"
    description = "高斯耦合密度与不同宽度下的无穷环境相干性曲面"
    DEFAULTS = {"t_max": 10.0, "steps": 100, "spreads": 8}

    def spread_grid(self, config: ScenarioConfig) -> np.ndarray:
        return 2.0 * config.lam * np.arange(1, config.spreads + 1) / config.spreads

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        lam = config.lam
        table = ScenarioTable(columns=["block", "spread", "x", "value"], seeds=[config.seed])

        half = DENSITY_WIDTHS * BathParams(lam).coupling_std
        for omega in np.linspace(-half, half, config.steps + 1):
            table.add_row("density", lam, float(omega), float(coupling_density(omega, lam)))
        table.add_row("mean_abs", lam, 0.0, mean_abs_coupling(lam))

        times = self._times(config)
        for mu in self.spread_grid(config):
            params = BathParams(lam, mu=float(mu))
            for t in times:
                table.add_row("coherence", float(mu), float(t), params.transformed_coherence(t))
        return table

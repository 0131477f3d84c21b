#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
多对一约化演示：随机耦合矩阵、箭头形矩阵、酉阵与两者的谱
"""

import logging

import numpy as np

from ..models import ScenarioConfig, ScenarioTable
from ..reduction import CouplingMatrix, diagonalize_hermitian, many_to_one_reduce
from .base_scenario import BaseScenario

logger = logging.getLogger("decoherence-lab.scenarios.reduction")


class ReduceDemoScenario(BaseScenario):
    """系统加 n_env 个环境自旋的随机厄米耦合矩阵，元素尺度 √(2λ)"""

    name = "reduce_demo"
    description = "耦合矩阵的多对一约化与谱对比"
    DEFAULTS = {"n_env": 5}

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        config = self.resolve(config)
        rng = self._stream(config)
        coupling = CouplingMatrix.random(rng, config.n_env + 1, scale=float(np.sqrt(2.0 * config.lam)))
        reduced = many_to_one_reduce(coupling)
        arrowhead = reduced.arrowhead()
        _, spectrum_coupling = diagonalize_hermitian(coupling)
        _, spectrum_arrowhead = diagonalize_hermitian(arrowhead)

        table = ScenarioTable(columns=["block", "i", "j", "re", "im"], seeds=[rng.seed])
        for block, matrix in (("coupling", coupling.entries), ("arrowhead", arrowhead), ("unitary", reduced.unitary)):
            for (i, j), value in np.ndenumerate(matrix):
                table.add_row(block, i, j, float(value.real), float(value.imag))
        for block, spectrum in (("spectrum_coupling", spectrum_coupling), ("spectrum_arrowhead", spectrum_arrowhead)):
            for i, value in enumerate(spectrum):
                table.add_row(block, i, 0, float(value), 0.0)

        gap = float(np.max(np.abs(spectrum_coupling - spectrum_arrowhead)))
        logger.info(f"{self.name}: 谱最大偏差 {gap:.3e}")
        return table

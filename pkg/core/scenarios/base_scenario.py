#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
基础场景接口 - 定义所有实验场景的统一接口
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict

import numpy as np

from ..engine import EnvironmentSpec
from ..models import ScenarioConfig, ScenarioTable
from ..utils_modules import RandomStream, sample_environment, time_grid

logger = logging.getLogger("decoherence-lab.scenarios.base")


class BaseScenario(ABC):
    """实验场景基类"""

    name: str = ""
    description: str = ""

    # 所有场景共用的默认值，子类的 DEFAULTS 覆盖其中的项
    BASE_DEFAULTS: Dict[str, Any] = {
        "n_env": 10,
        "t_max": 10.0,
        "steps": 200,
        "runs": 1,
        "sampling": "complex_square",
        "observable": "magnitude",
        "basis_theta": 0.0,
        "coupling_scale": "per_spin",
        "env_state": "sampled",
    }
    DEFAULTS: Dict[str, Any] = {}

    def defaults(self) -> Dict[str, Any]:
        """
        获取场景默认配置

        返回:
            合并后的默认值字典
        """
        merged = dict(self.BASE_DEFAULTS)
        merged.update(self.DEFAULTS)
        return merged

    def resolve(self, config: ScenarioConfig) -> ScenarioConfig:
        """用场景默认值补全配置"""
        return config.resolved(self.defaults())

    @abstractmethod
    def run(self, config: ScenarioConfig) -> ScenarioTable:
        """
        运行场景

        参数:
            config: 场景配置，未补全的字段按 defaults() 补全

        返回:
            数据表，列名在各场景中固定
        """
        pass

    def _stream(self, config: ScenarioConfig, k: int = 0) -> RandomStream:
        """第 k 次运行的随机流，种子为 seed + k"""
        return RandomStream(config.seed).spawn(k)

    def _environment(self, config: ScenarioConfig, rng: RandomStream, n: int) -> EnvironmentSpec:
        return sample_environment(
            rng,
            n,
            sampling=config.sampling,
            lam=config.lam,
            coupling_scale=config.coupling_scale,
            env_state=config.env_state,
            basis=config.basis_theta,
        )

    def _times(self, config: ScenarioConfig) -> np.ndarray:
        return time_grid(config.t_max, config.steps)

    def _observable_column(self, config: ScenarioConfig, prefix: str = "coherence") -> str:
        return f"{prefix}_{config.observable_name}"

    def __str__(self) -> str:
        """字符串表示"""
        return f"{self.__class__.__name__}(name={self.name})"

    def __repr__(self) -> str:
        """详细字符串表示"""
        return f"{self.__class__.__name__}(name={self.name}, defaults={self.defaults()})"

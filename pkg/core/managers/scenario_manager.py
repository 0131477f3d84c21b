#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
场景管理器 - 统一管理各实验场景的注册、调度与输出
"""

import time
import logging
from typing import Dict, Optional

from ..errors import ValidationError
from ..formatters import CsvFormatter
from ..interfaces import IFormatter, IScenario
from ..models import RunRecord, ScenarioConfig
from ..scenarios import (
    CoherenceVsNScenario,
    CoherenceVsTScenario,
    SurfaceNTScenario,
    FiniteVsInfiniteScenario,
    EnsembleAverageScenario,
    EnsembleSweepScenario,
    GaussianBathScenario,
    DmTopography1QScenario,
    DmTopography2QScenario,
    BellTableScenario,
    DfsDemoScenario,
    ReduceDemoScenario,
)

logger = logging.getLogger("decoherence-lab.managers.scenario_manager")


class ScenarioManager:
    """场景管理器 - 按名称注册场景并负责运行与写出 CSV"""

    def __init__(self, formatter: Optional[IFormatter] = None):
        """
        初始化场景管理器

        参数:
            formatter: CSV 格式化器，默认新建 CsvFormatter
        """
        self.formatter = formatter or CsvFormatter()
        self._scenarios: Dict[str, IScenario] = {}

        # 注册所有支持的场景
        self._register_scenarios()

        logger.debug(f"场景管理器初始化完成，支持 {len(self._scenarios)} 个场景")

    def _register_scenarios(self):
        """注册所有场景"""
        scenario_classes = [
            CoherenceVsNScenario,
            CoherenceVsTScenario,
            SurfaceNTScenario,
            FiniteVsInfiniteScenario,
            EnsembleAverageScenario,
    EnsembleSweepScenario,
    GaussianBathScenario,
            DmTopography1QScenario,
            DmTopography2QScenario,
            BellTableScenario,
            DfsDemoScenario,
            ReduceDemoScenario,
        ]

        for scenario_class in scenario_classes:
            scenario = scenario_class()
            self._scenarios[scenario.name] = scenario

    def get_supported_scenarios(self) -> list:
        """获取所有支持的场景名称"""
        return list(self._scenarios.keys())

    def get_scenario(self, name: str) -> IScenario:
        """
        获取指定名称的场景

        参数:
            name: 场景名称

        返回:
            场景实例，不存在时抛出 ValidationError
        """
        scenario = self._scenarios.get(getattr(name, "value", name))
        if scenario is None:
            raise ValidationError(f"未知场景: {name}。支持的场景: {', '.join(self.get_supported_scenarios())}")
        return scenario

    def describe(self) -> Dict[str, str]:
        """场景名称到说明的映射"""
        return {name: scenario.description for name, scenario in self._scenarios.items()}

    def resolve(self, config: ScenarioConfig) -> ScenarioConfig:
        return self.get_scenario(config.name).resolve(config)

    def run(self, config: ScenarioConfig, write: bool = True) -> RunRecord:
        """
        运行场景的统一入口

        参数:
            config: 场景配置
            write: 是否写出 CSV

        返回:
            RunRecord
        """
        scenario = self.get_scenario(config.name)
        resolved = scenario.resolve(config)
        logger.info(f"开始运行场景: {resolved.name}, seed={resolved.seed}")

        start = time.perf_counter()
        table = scenario.run(resolved)
        wall_time = time.perf_counter() - start

        output_path = None
        if write:
            result = self.formatter.format(table, resolved, resolved.output_path())
            output_path = result["output_path"]

        logger.info(f"场景完成: {resolved.name}, {len(table.rows)} 行, 用时 {wall_time:.3f}s")
        return RunRecord(config=resolved, table=table, wall_time=wall_time, output_path=output_path)

    def render(self, config: ScenarioConfig) -> str:
        """运行场景并返回 CSV 文本，不写文件"""
        record = self.run(config, write=False)
        return self.formatter.render(record.table, record.config)

    def __str__(self) -> str:
        """字符串表示"""
        return f"ScenarioManager(scenarios=[{', '.join(self.get_supported_scenarios())}])"


def run_scenario(config: ScenarioConfig, write: bool = True) -> RunRecord:
    """运行单个场景并写出 CSV"""
    return ScenarioManager().run(config, write=write)

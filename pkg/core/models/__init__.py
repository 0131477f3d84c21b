#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
数据模型
"""

from .config import (
    ScenarioConfig,
    Scenario,
    Sampling,
    Observable,
    CouplingScale,
    EnvState,
    Engine,
    SCHEMA_VERSION,
)
from .run_record import ScenarioTable, RunRecord

__all__ = [
    'ScenarioConfig',
    'Scenario',
    'Sampling',
    'Observable',
    'CouplingScale',
    'EnvState',
    'Engine',
    'SCHEMA_VERSION',
    'ScenarioTable',
    'RunRecord',
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
管理器模块
包含配置合并与场景调度功能
"""

from .config_manager import ConfigManager, ConfigSource, parse_config_text
from .scenario_manager import ScenarioManager, run_scenario

__all__ = [
    'ConfigManager',
    'ConfigSource',
    'parse_config_text',
    'ScenarioManager',
    'run_scenario',
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具模块
包含随机流、保序并行映射和各种辅助功能
"""

from .utils import time_grid, ensure_directory, ensure_parent_directory, format_float
from .parallel import ordered_map
from .random_streams import RandomStream, sample_state, sample_environment

__all__ = [
    'time_grid',
    'ensure_directory',
    'ensure_parent_directory',
    'format_float',
    'ordered_map',
    'RandomStream',
    'sample_state',
    'sample_environment',
]

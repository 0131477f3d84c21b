#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
工具函数模块，提供时间网格、输出路径和数值格式化等通用功能
"""

import os
import logging
from typing import Any

import numpy as np

from ..errors import OutputError, ValidationError

# 设置日志
logger = logging.getLogger("decoherence-lab.utils")

FLOAT_DIGITS = 17


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """
    均匀且包含端点的时间网格 t_k = k·t_max/steps，k = 0..steps

    参数:
        t_max: 终止时间，> 0
        steps: 区间数，≥ 1

    返回:
        steps + 1 个时间点
    """
    if steps < 1:
        raise ValidationError(f"steps 必须 ≥ 1: {steps}")
    if not t_max > 0:
        raise ValidationError(f"t_max 必须 > 0: {t_max}")
    return np.arange(steps + 1, dtype=float) * float(t_max) / steps


def ensure_directory(directory: str) -> str:
    """
    确保目录存在，如果不存在则创建

    参数:
        directory: 目录路径

    返回:
        目录的绝对路径
    """
    try:
        if directory and not os.path.exists(directory):
            os.makedirs(directory, exist_ok=True)
            logger.info(f"创建目录: {directory}")
    except OSError as e:
        raise OutputError(f"无法创建输出目录 {directory}: {e}") from e
    return os.path.abspath(directory or ".")


def ensure_parent_directory(path: str) -> str:
    """确保输出文件的父目录存在，返回文件绝对路径"""
    ensure_directory(os.path.dirname(path))
    return os.path.abspath(path)


def format_float(value: Any) -> str:
    """17 位有效数字，整数原样输出"""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.{FLOAT_DIGITS}g}"

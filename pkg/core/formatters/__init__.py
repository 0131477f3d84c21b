#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Formatters 包

提供场景数据表的输出格式，目前只有 CSV
"""

from .csv_formatter import CsvFormatter

__all__ = [
    'CsvFormatter'
]

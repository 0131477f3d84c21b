#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
自旋环境退相干数值实验的核心模块包
"""

from . import errors
from . import spin
from . import reduction
from . import engine
from . import oracle
from . import bath
from . import utils_modules
from . import models
from . import interfaces
from . import formatters
from . import scenarios
from . import managers

__version__ = "1.0.0"

__all__ = [
    'errors',
    'spin',
    'reduction',
    'engine',
    'oracle',
    'bath',
    'utils_modules',
    'models',
    'interfaces',
    'formatters',
    'scenarios',
    'managers',
]

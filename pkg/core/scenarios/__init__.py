#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
实验场景模块
每个场景把库模块组装成一张可写成 CSV 的数据表
"""

from .base_scenario import BaseScenario
from .coherence import CoherenceVsNScenario, CoherenceVsTScenario, SurfaceNTScenario
from .bath_scenarios import (
    FiniteVsInfiniteScenario,
    EnsembleAverageScenario,
    EnsembleSweepScenario,
    GaussianBathScenario,
)
from .topography import DmTopography1QScenario, DmTopography2QScenario
from .two_qubit_scenarios import BellTableScenario, DfsDemoScenario
from .reduction_scenario import ReduceDemoScenario

__all__ = [
    'BaseScenario',
    'CoherenceVsNScenario',
    'CoherenceVsTScenario',
    'SurfaceNTScenario',
    'FiniteVsInfiniteScenario',
    'EnsembleAverageScenario',
    'EnsembleSweepScenario',
    'GaussianBathScenario',
    'DmTopography1QScenario',
    'DmTopography2QScenario',
    'BellTableScenario',
    'DfsDemoScenario',
    'ReduceDemoScenario',
]

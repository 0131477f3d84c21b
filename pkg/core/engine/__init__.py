#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
闭式演化引擎
单比特相干因子乘积形式、双比特集体环境演化与无退相干子空间分析
"""

from .environment import (
    EnvironmentSpec,
    TwoQubitEnvSpec,
    CoherenceSeries,
    apply_observable,
    polarization_along,
    OBSERVABLES,
)
from .single_qubit import (
    coherence_factor,
    factor_magnitudes,
    coherence_series,
    single_qubit_rdm,
    average_coherence_estimate,
)
from .two_qubit import (
    basis_charges,
    two_qubit_rdm,
    rdm_series,
    dfs_coherence,
    fidelity_series,
    count_local_increases,
)

__all__ = [
    'EnvironmentSpec',
    'TwoQubitEnvSpec',
    'CoherenceSeries',
    'apply_observable',
    'polarization_along',
    'OBSERVABLES',
    'coherence_factor',
    'factor_magnitudes',
    'coherence_series',
    'single_qubit_rdm',
    'average_coherence_estimate',
    'basis_charges',
    'two_qubit_rdm',
    'rdm_series',
    'dfs_coherence',
    'fidelity_series',
    'count_local_increases',
]

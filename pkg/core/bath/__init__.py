#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
无穷高斯环境的解析模型
"""

from .gaussian import (
    BathParams,
    coupling_density,
    mean_abs_coupling,
    mean_abs_coupling_quadrature,
    analytic_coherence,
    damping_quadrature,
    operator_sum_rdm,
    coupling_std,
    sample_couplings,
)

__all__ = [
    'BathParams',
    'coupling_density',
    'mean_abs_coupling',
    'mean_abs_coupling_quadrature',
    'analytic_coherence',
    'damping_quadrature',
    'operator_sum_rdm',
    'coupling_std',
    'sample_couplings',
]

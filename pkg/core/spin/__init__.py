#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
自旋基础模块
包含量子态、任意基泡利算符、密度矩阵、偏迹与保真度
"""

from .operators import (
    BasisAngle,
    AngleLike,
    as_angle,
    pauli_operator,
    basis_rotation,
    kron_all,
    embed_operator,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    IDENTITY_2,
)
from .states import (
    QubitState,
    TwoQubitState,
    bell_state,
    uniform_superposition_state,
    rotate_two_qubit,
    states_equal_up_to_phase,
    state_vector,
    StateLike,
)
from .density import (
    DensityMatrix,
    density_matrix,
    partial_trace,
    rotate_density_matrix,
    fidelity,
    max_abs_difference,
    n_factors,
)

__all__ = [
    'BasisAngle',
    'AngleLike',
    'as_angle',
    'pauli_operator',
    'basis_rotation',
    'kron_all',
    'embed_operator',
    'SIGMA_X',
    'SIGMA_Y',
    'SIGMA_Z',
    'IDENTITY_2',
    'QubitState',
    'TwoQubitState',
    'bell_state',
    'uniform_superposition_state',
    'rotate_two_qubit',
    'states_equal_up_to_phase',
    'state_vector',
    'StateLike',
    'DensityMatrix',
    'density_matrix',
    'partial_trace',
    'rotate_density_matrix',
    'fidelity',
    'max_abs_difference',
    'n_factors',
]

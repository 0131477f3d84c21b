#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
耦合约化模块
包含厄米矩阵的 Jacobi 对角化与多对一耦合约化
"""

from .jacobi import (
    Eigendecomposition,
    diagonalize_hermitian,
    jacobi_eigh,
    check_hermitian,
    off_diagonal_norm,
)
from .coupling import (
    CouplingMatrix,
    ReducedCoupling,
    many_to_one_reduce,
    is_unitary,
)

__all__ = [
    'Eigendecomposition',
    'diagonalize_hermitian',
    'jacobi_eigh',
    'check_hermitian',
    'off_diagonal_norm',
    'CouplingMatrix',
    'ReducedCoupling',
    'many_to_one_reduce',
    'is_unitary',
]

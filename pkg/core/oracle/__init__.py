#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
精确对照模块
在完整的系统加环境希尔伯特空间上组装哈密顿量并做精确演化
"""

from .hamiltonian import (
    HamiltonianTerm,
    HamiltonianSpec,
    build_hamiltonian,
    MAX_SPINS,
)
from .propagator import (
    product_state,
    ExactPropagator,
    evolve_exact,
    oracle_rdm,
    SingleQubitOracle,
    TwoQubitOracle,
    reduced_state_exact,
    reduced_state_exact_two_qubit,
)

__all__ = [
    'HamiltonianTerm',
    'HamiltonianSpec',
    'build_hamiltonian',
    'MAX_SPINS',
    'product_state',
    'ExactPropagator',
    'evolve_exact',
    'oracle_rdm',
    'SingleQubitOracle',
    'TwoQubitOracle',
    'reduced_state_exact',
    'reduced_state_exact_two_qubit',
]

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
双比特系统的闭式演化与无退相干子空间分析

在 σ_θ 本征基下，基矢 |b₁b₂⟩ 携带荷 q = c₁s₁ + c₂s₂（s = ±1）。
元素 ⟨b|ρ|b′⟩ 对每个环境自旋乘以
cos((q - q′)ω_i t) + i·p_i·sin((q - q′)ω_i t)。
集体环境下 |01⟩、|10⟩ 的荷均为 0，它们之间的相干严格守恒。
"""

import logging
from typing import List, Sequence

import numpy as np

from ..errors import UndefinedNormalizationError, ValidationError
from ..spin import DensityMatrix, TwoQubitState, fidelity, rotate_density_matrix, rotate_two_qubit
from .environment import CoherenceSeries, TwoQubitEnvSpec

logger = logging.getLogger("decoherence-lab.engine.two_qubit")

# σ_θ 本征值：比特 0 对应 +1
_SIGNS = np.array([1.0, -1.0])
CENTRAL_INDEX = (1, 2)
NORMALIZATION_FLOOR = 1e-15
METHODS = ("closed_form", "oracle")


def basis_charges(weights) -> np.ndarray:
    """四个基矢的荷 q = c₁s₁ + c₂s₂，顺序为 |00⟩, |01⟩, |10⟩, |11⟩"""
    c1, c2 = weights
    return np.array([c1 * s1 + c2 * s2 for s1 in _SIGNS for s2 in _SIGNS])


def two_qubit_rdm(sys: TwoQubitState, env: TwoQubitEnvSpec, t: float) -> DensityMatrix:
    """
    双比特系统在时刻 t 的 4×4 约化密度矩阵

    参数:
        sys: 系统初态
        env: 环境，任意作用基 θ
        t: 时间

    返回:
        计算基下的 DensityMatrix
    """
    theta = env.basis
    psi = rotate_two_qubit(sys, theta).vector
    rho = np.outer(psi, psi.conj())

    if env.n:
        charges = basis_charges(env.weights)
        delta = charges[:, np.newaxis] - charges[np.newaxis, :]
        phases = float(t) * delta[:, :, np.newaxis] * env.omegas[np.newaxis, np.newaxis, :]
        factors = np.cos(phases) + 1j * env.polarizations() * np.sin(phases)
        rho = rho * np.prod(factors, axis=2)

    if theta.is_z:
        return DensityMatrix(rho)
    return rotate_density_matrix(rho, -theta)


def rdm_series(
    sys: TwoQubitState, env: TwoQubitEnvSpec, times: Sequence[float], method: str = "closed_form"
) -> List[DensityMatrix]:
    """沿时间网格求约化密度矩阵；oracle 路径复用同一次本征分解"""
    grid = [float(t) for t in times]
    if method == "closed_form":
        return [two_qubit_rdm(sys, env, t) for t in grid]
    if method == "oracle":
        from ..oracle import TwoQubitOracle

        oracle = TwoQubitOracle(sys, env)
        return [oracle.rdm(t) for t in grid]
    raise ValidationError(f"未知的求值路径: {method!r}，可选 {METHODS}")


def dfs_coherence(
    sys: TwoQubitState, env: TwoQubitEnvSpec, times: Sequence[float], method: str = "closed_form"
) -> CoherenceSeries:
    """
    跟踪中心元 ⟨01|ρ(t)|10⟩，以 t = 0 时的值归一化

    参数:
        sys: 系统初态，|01⟩、|10⟩ 振幅都不能为 0
        env: 环境；集体环境下序列恒为 1
        times: 时间网格
        method: "closed_form" 或 "oracle"

    返回:
        CoherenceSeries
    """
    if not env.collective:
        logger.warning(f"环境不是集体耦合 (weights={env.weights})，中心元不再受保护")
    amps = sys.vector
    initial = amps[1] * np.conj(amps[2])
    if abs(initial) < NORMALIZATION_FLOOR:
        raise UndefinedNormalizationError("初始中心元为 0，无法归一化")

    grid = np.asarray(times, dtype=float).reshape(-1)
    series = rdm_series(sys, env, grid, method=method)
    values = np.array([rho[CENTRAL_INDEX] / initial for rho in series], dtype=np.complex128)
    return CoherenceSeries(times=grid, values=values, n_env=env.n)


def fidelity_series(
    sys: TwoQubitState, env: TwoQubitEnvSpec, times: Sequence[float], method: str = "closed_form"
) -> np.ndarray:
    """⟨ψ₀|ρ(t)|ψ₀⟩ 沿时间网格的取值"""
    return np.array([fidelity(sys, rho) for rho in rdm_series(sys, env, times, method=method)])


def count_local_increases(values: Sequence[float], tol: float = 1e-12) -> int:
    """相邻两点中后一点比前一点大 tol 以上的次数，用于识别相干复苏"""
    v = np.asarray(values, dtype=float).reshape(-1)
    if v.size < 2:
        return 0
    return int(np.count_nonzero(np.diff(v) > tol))

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
单比特系统的闭式相干演化

r(t) = Π_i [cos(2ω_i t) + (|α_i|² - |β_i|²)·i·sin(2ω_i t)]，
ρ₀₁(t) = α₀β₀*·r(t)，ρ₁₀(t) 为其共轭，对角元不随时间变化。
"""

import logging
from typing import Sequence

import numpy as np

from ..errors import UnsupportedBasisError, ValidationError
from ..spin import DensityMatrix, QubitState
from .environment import CoherenceSeries, EnvironmentSpec

logger = logging.getLogger("decoherence-lab.engine.single_qubit")


def _require_z_basis(env: EnvironmentSpec) -> None:
    if not env.basis.is_z:
        raise UnsupportedBasisError(
            f"单比特闭式只支持 z 基环境（θ = 0），实际 θ = {env.basis.theta}；请改用 oracle 路径"
        )


def _factors(env: EnvironmentSpec, times: np.ndarray) -> np.ndarray:
    """形状为 (时间点, 自旋) 的逐自旋因子"""
    phases = 2.0 * np.outer(times, env.omegas)
    return np.cos(phases) + 1j * env.polarizations()[np.newaxis, :] * np.sin(phases)


def coherence_factor(env: EnvironmentSpec, t: float) -> complex:
    """
    计算时刻 t 的相干因子 r(t)

    参数:
        env: z 基环境，可为空
        t: 时间

    返回:
        复数 r(t)，|r| ≤ 1，r(0) = 1；空环境恒为 1
    """
    _require_z_basis(env)
    if env.n == 0:
        return 1.0 + 0.0j
    return complex(np.prod(_factors(env, np.array([float(t)]))[0]))


def factor_magnitudes(env: EnvironmentSpec, t: float) -> np.ndarray:
    """每个环境自旋因子的模 √(cos² + p²sin²)，只有 z 本征态恒为 1"""
    _require_z_basis(env)
    if env.n == 0:
        return np.zeros(0)
    return np.abs(_factors(env, np.array([float(t)]))[0])


def coherence_series(env: EnvironmentSpec, times: Sequence[float]) -> CoherenceSeries:
    """沿时间网格计算 r(t)，结果与求值顺序无关"""
    _require_z_basis(env)
    grid = np.asarray(times, dtype=float).reshape(-1)
    if env.n == 0:
        values = np.ones(grid.size, dtype=np.complex128)
    else:
        values = np.prod(_factors(env, grid), axis=1)
    return CoherenceSeries(times=grid, values=values, n_env=env.n)


def single_qubit_rdm(sys: QubitState, env: EnvironmentSpec, t: float) -> DensityMatrix:
    """
    系统比特在时刻 t 的约化密度矩阵

    参数:
        sys: 系统初态 α₀|0⟩ + β₀|1⟩
        env: z 基环境
        t: 时间

    返回:
        2×2 DensityMatrix
    """
    r = coherence_factor(env, t)
    a, b = sys.alpha, sys.beta
    off = a * np.conj(b) * r
    rho = np.array(
        [[abs(a) ** 2, off], [np.conj(off), abs(b) ** 2]],
        dtype=np.complex128,
    )
    return DensityMatrix(rho)


def average_coherence_estimate(n_env: int) -> float:
    """N 个环境自旋后剩余相干性的量级估计 2^{-N/2}"""
    if n_env < 0:
        raise ValidationError(f"环境自旋数不能为负: {n_env}")
    return float(2.0 ** (-n_env / 2.0))

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
高斯分布的无穷环境

耦合密度为 (1/√(4πλ))·e^{-ω²/4λ}，即方差 2λ 的正态分布。
非对角元按 e^{-4λt²} 衰减；μ 是同一规律下的变换方差参数。
积分校验使用 scipy.integrate.quad（QUADPACK 自适应 Gauss–Kronrod，
振荡权重走 QAWO），积分区间 [-50√λ, 50√λ]。
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy import integrate

from ..errors import DomainError, InvalidDimensionError, ValidationError
from ..spin import DensityMatrix

logger = logging.getLogger("decoherence-lab.bath.gaussian")

QUAD_EPSABS = 1e-12
QUAD_EPSREL = 1e-10
QUAD_LIMIT = 200
WINDOW_WIDTHS = 50.0
METHODS = ("closed_form", "quadrature")
COUPLING_SCALES = ("per_spin", "per_bath")


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if not np.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} 必须为正的有限实数: {value}")
    return value


def coupling_density(omega, lam: float):
    """耦合分布密度 (1/√(4πλ))·e^{-ω²/4λ}"""
    return np.exp(-np.square(omega) / (4.0 * lam)) / np.sqrt(4.0 * np.pi * lam)


def _window(lam: float) -> float:
    return WINDOW_WIDTHS * np.sqrt(lam)


def mean_abs_coupling(lam: float) -> float:
    """(1/√(4πλ))∫₀^∞ e^{-ω²/4λ}·ω dω 的闭式值 √(λ/π)"""
    lam = _check_positive("lam", lam)
    return float(np.sqrt(lam / np.pi))


def mean_abs_coupling_quadrature(lam: float) -> float:
    """数值积分计算 mean_abs_coupling，用于独立校验"""
    lam = _check_positive("lam", lam)
    value, error = integrate.quad(
        lambda w: coupling_density(w, lam) * abs(w),
        0.0,
        _window(lam),
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
    )
    logger.debug(f"|ω| 均值积分: λ={lam}, 值={value}, 误差估计={error:.2e}")
    return float(value)


def analytic_coherence(t: float, lam: float) -> float:
    """e^{-4λt²}"""
    lam = _check_positive("lam", lam)
    return float(np.exp(-4.0 * lam * float(t) ** 2))


def damping_quadrature(t: float, lam: float) -> complex:
    """
    数值积分 (1/√(4πλ))∫e^{2iωt}·e^{-ω²/4λ} dω

    参数:
        t: 时间
        lam: 高斯宽度参数

    返回:
        复数；虚部因对称性为 0（数值误差内）
    """
    lam = _check_positive("lam", lam)
    frequency = 2.0 * float(t)
    half = _window(lam)
    options = dict(epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
    if frequency == 0.0:
        real, _ = integrate.quad(coupling_density, -half, half, args=(lam,), **options)
        return complex(real, 0.0)
    real, _ = integrate.quad(
        coupling_density, -half, half, args=(lam,), weight="cos", wvar=frequency, **options
    )
    imag, _ = integrate.quad(
        coupling_density, -half, half, args=(lam,), weight="sin", wvar=frequency, **options
    )
    return complex(real, imag)


@dataclass(frozen=True)
class BathParams:
    """无穷高斯环境参数，mu 缺省时取 lam"""

    lam: float
    mu: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "lam", _check_positive("lam", self.lam))
        mu = self.lam if self.mu is None else self.mu
        object.__setattr__(self, "mu", _check_positive("mu", mu))

    @property
    def coupling_std(self) -> float:
        """对应的正态分布标准差 √(2λ)"""
        return float(np.sqrt(2.0 * self.lam))

    def coherence(self, t: float) -> float:
        return analytic_coherence(t, self.lam)

    def transformed_coherence(self, t: float) -> float:
        return analytic_coherence(t, self.mu)

    def mean_abs_coupling(self) -> float:
        return mean_abs_coupling(self.lam)


def _as_qubit_rdm(rho0) -> np.ndarray:
    matrix = rho0 if isinstance(rho0, DensityMatrix) else DensityMatrix(rho0)
    if matrix.dim != 2:
        raise InvalidDimensionError(f"算子和表示只适用于单比特，实际维度 {matrix.dim}")
    return np.array(matrix.check().entries)


def operator_sum_rdm(
    rho0: Union[DensityMatrix, np.ndarray], lam: float, t: float, method: str = "closed_form"
) -> DensityMatrix:
    """
    无穷高斯环境下单比特约化态的算子和表示

    ρ(t) = ∫ p(ω)·U_ω ρ₀ U_ω† dω，U_ω = diag(e^{iωt}, e^{-iωt})：
    对角元不变，非对角元乘以阻尼因子。

    参数:
        rho0: 合法的 2×2 初始密度矩阵
        lam: 高斯宽度参数
        t: 时间
        method: "closed_form" 用 e^{-4λt²}，"quadrature" 用数值积分

    返回:
        DensityMatrix
    """
    rho = _as_qubit_rdm(rho0)
    if method == "closed_form":
        damping = complex(analytic_coherence(t, lam))
    elif method == "quadrature":
        damping = damping_quadrature(t, lam)
    else:
        raise ValidationError(f"未知的求值方法: {method!r}，可选 {METHODS}")
    rho[0, 1] *= damping
    rho[1, 0] *= np.conj(damping)
    return DensityMatrix(rho)


def coupling_std(lam: float, n: int = 1, coupling_scale: str = "per_spin") -> float:
    """
    单个耦合抽样的标准差

    per_spin 为 √(2λ)；per_bath 为 √(2λ/n)，使 n 个自旋的总方差为 2λ。
    """
    lam = _check_positive("lam", lam)
    coupling_scale = getattr(coupling_scale, "value", coupling_scale)
    if coupling_scale == "per_spin":
        return float(np.sqrt(2.0 * lam))
    if coupling_scale == "per_bath":
        return float(np.sqrt(2.0 * lam / max(1, n)))
    raise ValidationError(f"未知的耦合缩放: {coupling_scale!r}，可选 {COUPLING_SCALES}")


def sample_couplings(rng, n: int, lam: float, coupling_scale: str = "per_spin") -> np.ndarray:
    """
    从高斯密度抽取 n 个耦合

    参数:
        rng: RandomStream
        n: 个数
        lam: 高斯宽度参数
        coupling_scale: per_spin 或 per_bath
    """
    if n < 0:
        raise ValidationError(f"抽样个数不能为负: {n}")
    sigma = coupling_std(lam, n, coupling_scale)
    if n == 0:
        return np.zeros(0)
    return np.asarray(rng.gauss(sigma, size=n), dtype=float)

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
泡利算符与基变换

约定：张量因子 0 是最左侧的 Kronecker 因子，对应基矢下标的最高位；
φ 固定为 0，作用基只由极角 θ 决定。
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Tuple, Union

import numpy as np

from ..errors import ValidationError

logger = logging.getLogger("decoherence-lab.spin.operators")

IDENTITY_2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class BasisAngle:
    """作用基 σ_θ = a₁σ_x + a₂σ_y + a₃σ_z 在 φ = 0 下的极角 θ（弧度）"""

    theta: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.theta):
            raise ValidationError(f"基角必须是有限实数: {self.theta}")

    @classmethod
    def z(cls) -> "BasisAngle":
        return cls(0.0)

    @classmethod
    def x(cls) -> "BasisAngle":
        return cls(np.pi / 2)

    @property
    def components(self) -> Tuple[float, float, float]:
        """(a₁, a₂, a₃)，a₂ 恒为 0"""
        return (float(np.sin(self.theta)), 0.0, float(np.cos(self.theta)))

    @property
    def is_z(self) -> bool:
        return self.theta == 0.0

    def __neg__(self) -> "BasisAngle":
        return BasisAngle(-self.theta)


AngleLike = Union[BasisAngle, float, int]


def as_angle(angle: AngleLike) -> BasisAngle:
    """把浮点数或 BasisAngle 统一成 BasisAngle"""
    if isinstance(angle, BasisAngle):
        return angle
    return BasisAngle(float(angle))


def pauli_operator(angle: AngleLike) -> np.ndarray:
    """
    构造任意基下的泡利算符 σ_θ = sinθ·σ_x + cosθ·σ_z

    参数:
        angle: 作用基角

    返回:
        2×2 厄米、无迹、平方为单位阵的矩阵
    """
    a1, _, a3 = as_angle(angle).components
    return a1 * SIGMA_X + a3 * SIGMA_Z


def basis_rotation(angle: AngleLike) -> np.ndarray:
    """
    单比特基变换 R(θ)，R(θ)|0⟩ = cos(θ/2)|0⟩ + sin(θ/2)|1⟩

    R 的两列分别是 σ_θ 本征值 +1 与 -1 的本征矢。
    """
    half = as_angle(angle).theta / 2.0
    c, s = np.cos(half), np.sin(half)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def kron_all(operators: Sequence[np.ndarray]) -> np.ndarray:
    """按因子顺序做 Kronecker 积"""
    if not operators:
        return np.ones((1, 1), dtype=np.complex128)
    return reduce(np.kron, operators)


def embed_operator(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """
    把单比特算符嵌入 n_sites 个因子的空间，其余因子补单位阵

    参数:
        op: 2×2 算符
        site: 作用的因子下标
        n_sites: 因子总数

    返回:
        2^n × 2^n 矩阵
    """
    if not 0 <= site < n_sites:
        raise ValidationError(f"因子下标 {site} 超出范围 [0, {n_sites})")
    left = np.eye(2 ** site, dtype=np.complex128)
    right = np.eye(2 ** (n_sites - site - 1), dtype=np.complex128)
    return np.kron(np.kron(left, op), right)

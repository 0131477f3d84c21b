#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
单比特与双比特纯态

双比特振幅按 (|00⟩, |01⟩, |10⟩, |11⟩) 排列，对应 α, β, γ, δ。
"""

import logging
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from ..errors import ValidationError
from .operators import AngleLike, basis_rotation

logger = logging.getLogger("decoherence-lab.spin.states")

NORM_TOLERANCE = 1e-12

BELL_LABELS = ("00", "01", "10", "11")


def _check_amplitudes(amps: np.ndarray) -> None:
    if not np.all(np.isfinite(amps)):
        raise ValidationError(f"振幅包含 NaN 或 Inf: {amps}")
    norm = float(np.sum(np.abs(amps) ** 2))
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ValidationError(f"态未归一化: Σ|amp|² = {norm!r}")


@dataclass(frozen=True)
class QubitState:
    """α|0⟩ + β|1⟩"""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        _check_amplitudes(self.vector)

    @classmethod
    def normalized(cls, alpha: complex, beta: complex) -> "QubitState":
        """按给定振幅归一化后构造"""
        norm = np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if norm == 0.0:
            raise ValidationError("零向量无法归一化")
        return cls(alpha / norm, beta / norm)

    @classmethod
    def zero(cls) -> "QubitState":
        return cls(1.0, 0.0)

    @classmethod
    def one(cls) -> "QubitState":
        return cls(0.0, 1.0)

    @classmethod
    def plus(cls) -> "QubitState":
        return cls(1 / np.sqrt(2), 1 / np.sqrt(2))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=np.complex128)

    @property
    def polarization(self) -> float:
        """|α|² - |β|²"""
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2


@dataclass(frozen=True)
class TwoQubitState:
    """α|00⟩ + β|01⟩ + γ|10⟩ + δ|11⟩"""

    amps: Tuple[complex, complex, complex, complex]

    def __post_init__(self):
        amps = tuple(complex(a) for a in self.amps)
        if len(amps) != 4:
            raise ValidationError(f"双比特态需要 4 个振幅，实际 {len(amps)} 个")
        object.__setattr__(self, "amps", amps)
        _check_amplitudes(self.vector)

    @classmethod
    def from_vector(cls, vector: np.ndarray, normalize: bool = False) -> "TwoQubitState":
        vector = np.asarray(vector, dtype=np.complex128).reshape(-1)
        if normalize:
            norm = np.linalg.norm(vector)
            if norm == 0.0:
                raise ValidationError("零向量无法归一化")
            vector = vector / norm
        return cls(tuple(vector))

    @classmethod
    def product(cls, first: QubitState, second: QubitState) -> "TwoQubitState":
        """(a₀|0⟩ + a₁|1⟩) ⊗ (b₀|0⟩ + b₁|1⟩)"""
        return cls.from_vector(np.kron(first.vector, second.vector))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.amps, dtype=np.complex128)


StateLike = Union[QubitState, TwoQubitState, np.ndarray]


def state_vector(state: StateLike) -> np.ndarray:
    """把各种态表示统一成一维复数组"""
    if isinstance(state, (QubitState, TwoQubitState)):
        return state.vector
    return np.asarray(state, dtype=np.complex128).reshape(-1)


def bell_state(label: str) -> TwoQubitState:
    """
    Bell 态 β₀₀, β₀₁, β₁₀, β₁₁

    参数:
        label: "00" / "01" / "10" / "11"

    返回:
        对应的 TwoQubitState；"11" 为单态，"01" 为三重态
    """
    h = 1 / np.sqrt(2)
    table = {
        "00": (h, 0, 0, h),
        "01": (0, h, h, 0),
        "10": (h, 0, 0, -h),
        "11": (0, h, -h, 0),
    }
    if label not in table:
        raise ValidationError(f"未知的 Bell 态标签: {label!r}，可选 {BELL_LABELS}")
    return TwoQubitState(table[label])


def uniform_superposition_state() -> TwoQubitState:
    """(|00⟩ + |01⟩ + |10⟩ + |11⟩)/2"""
    return TwoQubitState((0.5, 0.5, 0.5, 0.5))


def rotate_two_qubit(state: TwoQubitState, angle: AngleLike) -> TwoQubitState:
    """
    把双比特态改写到 θ 作用基下的系数

    系数映射为 (R(θ)† ⊗ R(θ)†)·ψ；β₀₁ 得到 (sinθ, cosθ, cosθ, -sinθ)/√2，
    单态保持不变。rotate_two_qubit(·, -θ) 是它的逆。

    参数:
        state: 双比特态
        angle: 作用基角

    返回:
        θ 基下的双比特态
    """
    r_dag = basis_rotation(angle).conj().T
    rotated = np.kron(r_dag, r_dag) @ state.vector
    return TwoQubitState.from_vector(rotated)


def states_equal_up_to_phase(a: StateLike, b: StateLike, tol: float = 1e-12) -> bool:
    """|⟨a|b⟩| = 1（容差内），即两态只差一个全局相位"""
    va, vb = state_vector(a), state_vector(b)
    if va.shape != vb.shape:
        return False
    return abs(abs(np.vdot(va, vb)) - 1.0) <= tol

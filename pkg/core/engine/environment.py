#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
环境描述与相干性时间序列

环境自旋 i 由 (ω_i, 初态) 给出，ω_i 是已合并的实耦合，闭式演化中
每个自旋贡献 cos(Δq·ω_i·t) + i·p_i·sin(Δq·ω_i·t)，p_i 为自旋沿作用基的极化。
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..errors import ValidationError
from ..spin import AngleLike, BasisAngle, QubitState, as_angle, pauli_operator

logger = logging.getLogger("decoherence-lab.engine.environment")

OBSERVABLES = ("magnitude", "real_part")


def polarization_along(state: QubitState, angle: AngleLike) -> float:
    """⟨ψ|σ_θ|ψ⟩；θ = 0 时等于 |α|² - |β|²"""
    v = state.vector
    return float(np.vdot(v, pauli_operator(angle) @ v).real)


def _coerce_spins(spins: Iterable) -> Tuple[Tuple[float, QubitState], ...]:
    result = []
    for index, item in enumerate(spins):
        omega, state = item
        omega = float(omega)
        if not np.isfinite(omega):
            raise ValidationError(f"环境自旋 {index} 的耦合不是有限实数: {omega}")
        if not isinstance(state, QubitState):
            raise ValidationError(f"环境自旋 {index} 的初态必须是 QubitState，实际 {type(state).__name__}")
        result.append((omega, state))
    return tuple(result)


@dataclass(frozen=True)
class EnvironmentSpec:
    """单比特系统的环境：所有自旋共用一个作用基，可以为空"""

    spins: Tuple[Tuple[float, QubitState], ...] = ()
    basis: BasisAngle = field(default_factory=BasisAngle)

    def __post_init__(self):
        object.__setattr__(self, "spins", _coerce_spins(self.spins))
        object.__setattr__(self, "basis", as_angle(self.basis))

    @classmethod
    def from_arrays(
        cls, omegas: Sequence[float], states: Sequence[QubitState], basis: AngleLike = 0.0
    ) -> "EnvironmentSpec":
        if len(omegas) != len(states):
            raise ValidationError(f"耦合数 {len(omegas)} 与初态数 {len(states)} 不一致")
        return cls(spins=tuple(zip(omegas, states)), basis=as_angle(basis))

    @property
    def n(self) -> int:
        return len(self.spins)

    @property
    def omegas(self) -> np.ndarray:
        return np.array([omega for omega, _ in self.spins], dtype=float)

    @property
    def states(self) -> Tuple[QubitState, ...]:
        return tuple(state for _, state in self.spins)

    def polarizations(self) -> np.ndarray:
        """各自旋沿作用基的极化"""
        return np.array([polarization_along(s, self.basis) for s in self.states], dtype=float)

    def truncated(self, n: int) -> "EnvironmentSpec":
        """只保留前 n 个自旋"""
        return EnvironmentSpec(spins=self.spins[:n], basis=self.basis)


@dataclass(frozen=True)
class TwoQubitEnvSpec:
    """
    双比特系统的环境

    weights = (c₁, c₂) 是两个系统比特对同一环境的耦合权重；
    (1, 1) 即集体环境，此时 {|01⟩, |10⟩} 构成无退相干子空间。
    """

    spins: Tuple[Tuple[float, QubitState], ...] = ()
    basis: BasisAngle = field(default_factory=BasisAngle)
    weights: Tuple[float, float] = (1.0, 1.0)

    def __post_init__(self):
        object.__setattr__(self, "spins", _coerce_spins(self.spins))
        object.__setattr__(self, "basis", as_angle(self.basis))
        weights = tuple(float(w) for w in self.weights)
        if len(weights) != 2 or not all(np.isfinite(weights)):
            raise ValidationError(f"耦合权重必须是两个有限实数: {self.weights}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_environment(cls, env: EnvironmentSpec, weights: Tuple[float, float] = (1.0, 1.0)) -> "TwoQubitEnvSpec":
        return cls(spins=env.spins, basis=env.basis, weights=weights)

    @property
    def collective(self) -> bool:
        return self.weights[0] == self.weights[1]

    @property
    def n(self) -> int:
        return len(self.spins)

    @property
    def omegas(self) -> np.ndarray:
        return np.array([omega for omega, _ in self.spins], dtype=float)

    @property
    def states(self) -> Tuple[QubitState, ...]:
        return tuple(state for _, state in self.spins)

    def polarizations(self) -> np.ndarray:
        return np.array([polarization_along(s, self.basis) for s in self.states], dtype=float)


@dataclass(frozen=True)
class CoherenceSeries:
    """相干因子 r(t) 沿时间网格的取值"""

    times: np.ndarray
    values: np.ndarray
    n_env: int

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float).reshape(-1)
        values = np.asarray(self.values, dtype=np.complex128).reshape(-1)
        if times.shape != values.shape:
            raise ValidationError(f"时间点 {times.size} 个，取值 {values.size} 个")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.times.size

    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    def real_part(self) -> np.ndarray:
        return self.values.real.copy()

    def observable(self, name: str) -> np.ndarray:
        """按名称取观测量: magnitude 或 real_part"""
        name = getattr(name, "value", name)
        if name == "magnitude":
            return self.magnitude()
        if name == "real_part":
            return self.real_part()
        raise ValidationError(f"未知的观测量: {name!r}，可选 {OBSERVABLES}")


def apply_observable(values, name: str) -> np.ndarray:
    """对任意复数数组取观测量"""
    name = getattr(name, "value", name)
    values = np.asarray(values, dtype=np.complex128)
    if name == "magnitude":
        return np.abs(values)
    if name == "real_part":
        return values.real.copy()
    raise ValidationError(f"未知的观测量: {name!r}，可选 {OBSERVABLES}")

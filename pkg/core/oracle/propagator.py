#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
基于完整本征分解的精确传播子

ψ(t) = V·e^{-iΛt}·V†·ψ₀，任意 t 直接求值，没有时间步进误差。
"""

import logging
from typing import Iterable, Sequence, Union

import numpy as np

from ..errors import InvalidDimensionError, ValidationError
from ..reduction import diagonalize_hermitian
from ..spin import DensityMatrix, QubitState, TwoQubitState, kron_all, n_factors, state_vector
from .hamiltonian import HamiltonianSpec, build_hamiltonian

logger = logging.getLogger("decoherence-lab.oracle.propagator")

NORM_TOLERANCE = 1e-12


def product_state(states: Sequence[Union[QubitState, TwoQubitState, np.ndarray]]) -> np.ndarray:
    """
    各因子初态的张量积

    参数:
        states: 按因子顺序排列的态

    返回:
        归一化的 2^M 维态矢量
    """
    if not states:
        raise ValidationError("乘积态至少需要一个因子")
    vectors = [state_vector(s).reshape(-1, 1) for s in states]
    psi = kron_all(vectors).reshape(-1)
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ValidationError(f"乘积态未归一化: ‖ψ‖ = {norm!r}")
    return psi


class ExactPropagator:
    """缓存 (V, Λ)，同一哈密顿量的时间网格只做一次分解"""

    def __init__(self, hamiltonian: np.ndarray, method: str = "auto"):
        self.hamiltonian = np.asarray(hamiltonian, dtype=np.complex128)
        self.dim = self.hamiltonian.shape[0]
        self.vectors, self.eigenvalues = diagonalize_hermitian(self.hamiltonian, method=method)
        logger.debug(f"精确传播子就绪: 维度 {self.dim}, 方法 {method}")

    @classmethod
    def from_spec(cls, spec: HamiltonianSpec, method: str = "auto") -> "ExactPropagator":
        return cls(build_hamiltonian(spec), method=method)

    def evolve(self, psi0: np.ndarray, t: float) -> np.ndarray:
        psi0 = np.asarray(psi0, dtype=np.complex128).reshape(-1)
        if psi0.size != self.dim:
            raise InvalidDimensionError(f"态维度 {psi0.size} 与哈密顿量维度 {self.dim} 不一致")
        coefficients = self.vectors.conj().T @ psi0
        return self.vectors @ (np.exp(-1j * self.eigenvalues * float(t)) * coefficients)

    def energy(self, psi: np.ndarray) -> float:
        """⟨ψ|H|ψ⟩"""
        psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
        return float(np.vdot(psi, self.hamiltonian @ psi).real)


def evolve_exact(H, psi0: np.ndarray, t: float) -> np.ndarray:
    """
    精确演化 ψ₀ 到时刻 t

    参数:
        H: 厄米矩阵或已构造的 ExactPropagator
        psi0: 初态矢量
        t: 时间，可为负

    返回:
        ψ(t)
    """
    propagator = H if isinstance(H, ExactPropagator) else ExactPropagator(H)
    return propagator.evolve(psi0, t)


def oracle_rdm(psi: np.ndarray, keep: Iterable[int]) -> DensityMatrix:
    """
    态矢量投影 |ψ⟩⟨ψ| 对 keep 以外因子的偏迹，不构造完整密度矩阵

    参数:
        psi: 2^M 维态矢量
        keep: 保留的因子下标，结果按下标升序排列
    """
    psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
    n = n_factors(psi.size)
    kept = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in kept):
        raise InvalidDimensionError(f"保留因子 {kept} 超出范围 [0, {n})")
    tensor = np.moveaxis(psi.reshape([2] * n), kept, list(range(len(kept))))
    a = tensor.reshape(2 ** len(kept), -1)
    return DensityMatrix(a @ a.conj().T)


class SingleQubitOracle:
    """单比特系统加环境的精确求解器"""

    def __init__(self, sys: QubitState, env, method: str = "auto"):
        self.spec = HamiltonianSpec.from_environment(env)
        self.propagator = ExactPropagator.from_spec(self.spec, method=method)
        self.psi0 = product_state([sys, *env.states])

    def state(self, t: float) -> np.ndarray:
        return self.propagator.evolve(self.psi0, t)

    def rdm(self, t: float) -> DensityMatrix:
        return oracle_rdm(self.state(t), [0])


class TwoQubitOracle:
    """双比特系统（因子 0、1）加环境的精确求解器"""

    def __init__(self, sys: TwoQubitState, env, method: str = "auto"):
        self.spec = HamiltonianSpec.from_two_qubit_environment(env)
        self.propagator = ExactPropagator.from_spec(self.spec, method=method)
        self.psi0 = product_state([sys, *env.states])

    def state(self, t: float) -> np.ndarray:
        return self.propagator.evolve(self.psi0, t)

    def rdm(self, t: float) -> DensityMatrix:
        return oracle_rdm(self.state(t), [0, 1])


def reduced_state_exact(sys: QubitState, env, t: float) -> DensityMatrix:
    """单比特系统在时刻 t 的精确约化密度矩阵"""
    return SingleQubitOracle(sys, env).rdm(t)


def reduced_state_exact_two_qubit(sys: TwoQubitState, env, t: float) -> DensityMatrix:
    """双比特系统在时刻 t 的精确 4×4 约化密度矩阵"""
    return TwoQubitOracle(sys, env).rdm(t)

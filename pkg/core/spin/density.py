#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
密度矩阵、偏迹与保真度

DensityMatrix 构造后只读；check() 可在任意调用后断言三条物理约束：
厄米（1e-12）、单位迹（1e-12）、本征值 ≥ -1e-10。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from ..errors import InvalidDimensionError, ValidationError
from .operators import AngleLike, basis_rotation, kron_all
from .states import StateLike, state_vector

logger = logging.getLogger("decoherence-lab.spin.density")

HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-12
EIGENVALUE_FLOOR = -1e-10


def n_factors(dim: int) -> int:
    """维度对应的比特数，维度不是 2 的幂时报错"""
    if dim < 1 or dim & (dim - 1):
        raise InvalidDimensionError(f"维度 {dim} 不是 2 的幂")
    return dim.bit_length() - 1


@dataclass(frozen=True)
class DensityMatrix:
    """d×d 复厄米、迹为 1 的约化态"""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.complex128, copy=True)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidDimensionError(f"密度矩阵必须是方阵，实际形状 {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, index):
        return self.entries[index]

    def violations(self) -> List[str]:
        """列出不满足的约束，空列表表示合法"""
        problems = []
        m = self.entries
        if not np.all(np.isfinite(m)):
            problems.append("包含 NaN 或 Inf")
            return problems
        herm = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
        if herm > HERMITIAN_TOLERANCE:
            problems.append(f"非厄米: 残差 {herm:.3e}")
        trace = complex(np.trace(m))
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            problems.append(f"迹不为 1: {trace}")
        if not problems:
            lowest = float(np.min(np.linalg.eigvalsh(m)))
            if lowest < EIGENVALUE_FLOOR:
                problems.append(f"存在负本征值: {lowest:.3e}")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def check(self) -> "DensityMatrix":
        """校验物理约束，失败时抛出 ValidationError；返回自身便于链式调用"""
        problems = self.violations()
        if problems:
            raise ValidationError("无效的密度矩阵: " + "; ".join(problems))
        return self


def density_matrix(state: StateLike) -> DensityMatrix:
    """纯态投影 |ψ⟩⟨ψ|"""
    psi = state_vector(state)
    return DensityMatrix(np.outer(psi, psi.conj()))


def _as_array(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.entries
    return np.asarray(rho, dtype=np.complex128)


def partial_trace(rho, keep: Iterable[int]) -> DensityMatrix:
    """
    对不在 keep 中的张量因子求偏迹

    参数:
        rho: 2^M 维密度矩阵（DensityMatrix 或数组）
        keep: 保留的因子下标；结果按下标升序排列

    返回:
        2^|keep| 维 DensityMatrix
    """
    m = _as_array(rho)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidDimensionError(f"偏迹输入必须是方阵，实际形状 {m.shape}")
    n = n_factors(m.shape[0])
    kept = sorted(set(int(k) for k in keep))
    if any(k < 0 or k >= n for k in kept):
        raise InvalidDimensionError(f"保留因子 {kept} 超出范围 [0, {n})")

    tensor = m.reshape([2] * (2 * n))
    current = n
    for axis in sorted(set(range(n)) - set(kept), reverse=True):
        tensor = np.trace(tensor, axis1=axis, axis2=axis + current)
        current -= 1
    dim = 2 ** len(kept)
    return DensityMatrix(tensor.reshape(dim, dim))


def rotate_density_matrix(rho, angle: AngleLike) -> DensityMatrix:
    """
    把密度矩阵改写到 θ 作用基：R(θ)†^{⊗k} ρ R(θ)^{⊗k}

    与 rotate_two_qubit 对态矢量的约定一致。
    """
    m = _as_array(rho)
    k = n_factors(m.shape[0])
    r = kron_all([basis_rotation(angle)] * k)
    return DensityMatrix(r.conj().T @ m @ r)


def fidelity(psi0: StateLike, rho_t) -> float:
    """
    初态 ψ₀ 与演化后 ρ(t) 的重叠概率 ⟨ψ₀|ρ(t)|ψ₀⟩

    参数:
        psi0: 纯初态
        rho_t: 演化后的密度矩阵

    返回:
        [0, 1] 内的实数
    """
    psi = state_vector(psi0)
    m = _as_array(rho_t)
    if m.shape != (psi.size, psi.size):
        raise InvalidDimensionError(f"维度不匹配: 态 {psi.size}, 密度矩阵 {m.shape}")
    overlap = np.vdot(psi, m @ psi).real
    return float(np.clip(overlap, 0.0, 1.0))


def max_abs_difference(a, b) -> float:
    """两个矩阵逐元素差的最大模"""
    return float(np.max(np.abs(_as_array(a) - _as_array(b))))
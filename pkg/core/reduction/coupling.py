#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
耦合系数矩阵与多对一约化

下标 0 是系统自旋，其余为环境自旋。约化只对环境块做酉相似变换，
得到箭头形矩阵：系统与每个准自旋耦合，准自旋之间不再耦合。
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

from ..errors import InvalidSizeError, ValidationError
from ..spin import AngleLike, QubitState, as_angle
from .jacobi import HERMITIAN_TOLERANCE, check_hermitian, diagonalize_hermitian, off_diagonal_norm

if TYPE_CHECKING:
    from ..engine import EnvironmentSpec
    from ..utils_modules.random_streams import RandomStream

logger = logging.getLogger("decoherence-lab.reduction.coupling")

UNITARY_TOLERANCE = 1e-10


@dataclass(frozen=True)
class CouplingMatrix:
    """n×n 厄米耦合系数矩阵 ω_ij，单位为角频率（ħ = 1）"""

    entries: np.ndarray

    def __post_init__(self):
        entries = check_hermitian(self.entries, HERMITIAN_TOLERANCE)
        if np.any(np.abs(np.diag(entries).imag) > HERMITIAN_TOLERANCE):
            raise ValidationError("耦合矩阵对角元必须为实数")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def random(cls, rng: "RandomStream", n: int, scale: float = 1.0) -> "CouplingMatrix":
        """
        由随机流生成厄米矩阵 (A + A†)/2，A 的实部与虚部为标准正态

        参数:
            rng: RandomStream
            n: 矩阵阶数
            scale: 整体缩放
        """
        if n < 1:
            raise InvalidSizeError(f"矩阵阶数必须为正: {n}")
        real = np.asarray(rng.gauss(1.0, size=n * n)).reshape(n, n)
        imag = np.asarray(rng.gauss(1.0, size=n * n)).reshape(n, n)
        a = real + 1j * imag
        h = 0.5 * scale * (a + a.conj().T)
        h[np.diag_indices(n)] = h.diagonal().real
        return cls(h)


def is_unitary(matrix: np.ndarray, tol: float = UNITARY_TOLERANCE) -> bool:
    """U†U = I（容差内）"""
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))) <= tol)


@dataclass(frozen=True)
class ReducedCoupling:
    """
    多对一约化结果

    omega00 为系统自能；effective_couplings[i] 为 ω′₀ᵢ；
    self_energies[i] 为准自旋 i 的 Ωᵢᵢ；unitary 为环境块的对角化酉阵。
    """

    omega00: float
    effective_couplings: np.ndarray
    self_energies: np.ndarray
    unitary: np.ndarray

    @property
    def n_quasi(self) -> int:
        return len(self.self_energies)

    def arrowhead(self) -> np.ndarray:
        """组装箭头形系数矩阵"""
        n = self.n_quasi + 1
        m = np.zeros((n, n), dtype=np.complex128)
        m[0, 0] = self.omega00
        m[0, 1:] = self.effective_couplings
        m[1:, 0] = np.conj(self.effective_couplings)
        m[np.arange(1, n), np.arange(1, n)] = self.self_energies
        return m

    def combined_couplings(self) -> np.ndarray:
        """ω′₀ᵢ + ω′₀ᵢ* ，即闭式演化使用的实耦合"""
        return 2.0 * np.real(self.effective_couplings)

    def to_environment(self, states: Sequence[QubitState], basis: AngleLike = 0.0) -> "EnvironmentSpec":
        """
        以准自旋构造闭式引擎的环境描述

        参数:
            states: 每个准自旋的初态，个数必须等于准自旋数
            basis: 公共作用基角
        """
        from ..engine import EnvironmentSpec

        if len(states) != self.n_quasi:
            raise InvalidSizeError(f"需要 {self.n_quasi} 个准自旋初态，实际 {len(states)} 个")
        spins = tuple(zip((float(w) for w in self.combined_couplings()), states))
        return EnvironmentSpec(spins=spins, basis=as_angle(basis))


def many_to_one_reduce(H, method: str = "jacobi") -> ReducedCoupling:
    """
    对环境块做对角化，把全连接耦合变成多对一耦合

    参数:
        H: CouplingMatrix 或厄米数组，n ≥ 2
        method: 传给 diagonalize_hermitian 的求解方法

    返回:
        ReducedCoupling；环境块已对角时 U = I，保持输入次序
    """
    coupling = H if isinstance(H, CouplingMatrix) else CouplingMatrix(H)
    if coupling.n < 2:
        raise InvalidSizeError(f"多对一约化至少需要 2 个自旋，实际 {coupling.n} 个")

    m = coupling.entries
    block = m[1:, 1:]
    if off_diagonal_norm(block) == 0.0:
        unitary = np.eye(coupling.n - 1, dtype=np.complex128)
        self_energies = block.diagonal().real.copy()
        logger.debug("环境块已经是对角阵，跳过对角化")
    else:
        unitary, self_energies = diagonalize_hermitian(block, method=method)

    effective = m[0, 1:] @ unitary
    logger.debug(f"多对一约化完成: {coupling.n - 1} 个准自旋")
    return ReducedCoupling(
        omega00=float(m[0, 0].real),
        effective_couplings=np.asarray(effective, dtype=np.complex128),
        self_energies=np.asarray(self_energies, dtype=float),
        unitary=unitary,
    )

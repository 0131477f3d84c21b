#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
全希尔伯特空间哈密顿量的组装

每一项 (i, j, ω) 贡献 ω·σ^{(i)}σ^{(j)} + ω*·σ^{(j)}σ^{(i)}，
未作用的因子补单位阵，i = j 的自相互作用项不允许出现。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from ..errors import CapacityError, ValidationError
from ..spin import IDENTITY_2, AngleLike, BasisAngle, as_angle, kron_all, pauli_operator

logger = logging.getLogger("decoherence-lab.oracle.hamiltonian")

MAX_SPINS = 14


@dataclass(frozen=True)
class HamiltonianTerm:
    """两体耦合项"""

    i: int
    j: int
    omega: complex
    basis_i: BasisAngle = field(default_factory=BasisAngle)
    basis_j: BasisAngle = field(default_factory=BasisAngle)

    def __post_init__(self):
        if self.i == self.j:
            raise ValidationError(f"哈密顿量不包含自相互作用项: i = j = {self.i}")
        object.__setattr__(self, "omega", complex(self.omega))
        object.__setattr__(self, "basis_i", as_angle(self.basis_i))
        object.__setattr__(self, "basis_j", as_angle(self.basis_j))


@dataclass(frozen=True)
class HamiltonianSpec:
    """
    M 个自旋上的两体耦合哈密顿量描述

    闭式公式按 e^{+iHt} 书写，这里的传播子是 e^{-iHt}；
    from_* 构造器嵌入环境时取相反的耦合符号，使两条路径逐元素一致。
    """

    n_spins: int
    terms: Tuple[HamiltonianTerm, ...] = ()

    def __post_init__(self):
        if self.n_spins < 1:
            raise ValidationError(f"自旋数必须为正: {self.n_spins}")
        if self.n_spins > MAX_SPINS:
            raise CapacityError(f"oracle 最多支持 {MAX_SPINS} 个自旋，实际 {self.n_spins} 个")
        terms = tuple(self.terms)
        for term in terms:
            if not (0 <= term.i < self.n_spins and 0 <= term.j < self.n_spins):
                raise ValidationError(f"耦合项下标 ({term.i}, {term.j}) 超出范围 [0, {self.n_spins})")
        object.__setattr__(self, "terms", terms)

    @property
    def dim(self) -> int:
        return 2 ** self.n_spins

    @classmethod
    def from_environment(cls, env) -> "HamiltonianSpec":
        """单比特系统（因子 0）加 EnvironmentSpec 的多对一模型"""
        theta = env.basis
        terms = [
            HamiltonianTerm(0, k + 1, -omega / 2.0, theta, theta)
            for k, omega in enumerate(env.omegas)
        ]
        return cls(n_spins=env.n + 1, terms=tuple(terms))

    @classmethod
    def from_two_qubit_environment(cls, env) -> "HamiltonianSpec":
        """双比特系统（因子 0、1）与 TwoQubitEnvSpec 的耦合，权重分别为 c₁、c₂"""
        theta = env.basis
        c1, c2 = env.weights
        terms: List[HamiltonianTerm] = []
        for k, omega in enumerate(env.omegas):
            site = k + 2
            if c1:
                terms.append(HamiltonianTerm(0, site, -c1 * omega / 2.0, theta, theta))
            if c2:
                terms.append(HamiltonianTerm(1, site, -c2 * omega / 2.0, theta, theta))
        return cls(n_spins=env.n + 2, terms=tuple(terms))

    @classmethod
    def from_coupling_matrix(
        cls, coupling, basis: AngleLike = 0.0, include_environment: bool = True
    ) -> "HamiltonianSpec":
        """
        全连接模型：系数矩阵的每个非零上三角元 ω_ij 成为一项

        参数:
            coupling: CouplingMatrix 或厄米数组，下标 0 为系统
            basis: 公共作用基角
            include_environment: False 时丢弃环境内部（i, j ≥ 1）的耦合
        """
        entries = np.asarray(getattr(coupling, "entries", coupling), dtype=np.complex128)
        n = entries.shape[0]
        theta = as_angle(basis)
        terms = []
        for i in range(n - 1):
            for j in range(i + 1, n):
                if entries[i, j] == 0:
                    continue
                if i >= 1 and not include_environment:
                    continue
                terms.append(HamiltonianTerm(i, j, -entries[i, j], theta, theta))
        return cls(n_spins=n, terms=tuple(terms))


def _term_operator(term: HamiltonianTerm, n_spins: int) -> np.ndarray:
    sites = [IDENTITY_2] * n_spins
    sites[term.i] = pauli_operator(term.basis_i)
    sites[term.j] = pauli_operator(term.basis_j)
    return kron_all(sites)


def build_hamiltonian(spec: HamiltonianSpec) -> np.ndarray:
    """
    组装 2^M × 2^M 稠密厄米矩阵

    参数:
        spec: 哈密顿量描述

    返回:
        complex128 数组；空项列表得到零矩阵
    """
    h = np.zeros((spec.dim, spec.dim), dtype=np.complex128)
    for term in spec.terms:
        # 不同因子上的算符对易，σ^{(j)}σ^{(i)} 与 σ^{(i)}σ^{(j)} 相同
        product = _term_operator(term, spec.n_spins)
        h += term.omega * product + np.conj(term.omega) * product
    logger.debug(f"组装哈密顿量: {spec.n_spins} 个自旋, {len(spec.terms)} 项")
    return h

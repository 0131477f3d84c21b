#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
厄米矩阵的循环 Jacobi 对角化

扫描顺序固定为上三角逐行；非对角 Frobenius 范数低于
tol·max(1, ‖H‖_F) 时收敛，最多 100 次扫描。本征值升序输出，
相同本征值保持扫描产生的先后次序。
"""

import logging
from typing import NamedTuple, Tuple

import numpy as np

from ..errors import ConvergenceError, ValidationError

logger = logging.getLogger("decoherence-lab.reduction.jacobi")

DEFAULT_TOLERANCE = 1e-12
MAX_SWEEPS = 100
HERMITIAN_TOLERANCE = 1e-12
# auto 模式下使用 Jacobi 的最大维度；更大的矩阵交给 LAPACK
AUTO_JACOBI_MAX_DIM = 64

METHODS = ("jacobi", "lapack", "auto")


class Eigendecomposition(NamedTuple):
    """H = U·diag(eigenvalues)·U†"""

    unitary: np.ndarray
    eigenvalues: np.ndarray


def off_diagonal_norm(matrix: np.ndarray) -> float:
    """非对角元的 Frobenius 范数"""
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def check_hermitian(matrix: np.ndarray, tol: float = HERMITIAN_TOLERANCE) -> np.ndarray:
    """校验方阵且厄米，返回 complex128 副本"""
    m = np.array(matrix, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"需要方阵，实际形状 {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("矩阵包含 NaN 或 Inf")
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    residual = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if residual > tol * scale:
        raise ValidationError(f"矩阵不是厄米的: 残差 {residual:.3e}")
    return m


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """消去 a[p, q] 的复 Jacobi 旋转，原地更新 a 与 v"""
    apq = a[p, q]
    magnitude = abs(apq)
    phase = apq / magnitude
    tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
    c = 1.0 / np.hypot(1.0, t)
    s = t * c
    j = np.array([[c, s * phase], [-s * np.conj(phase), c]], dtype=np.complex128)

    cols = [p, q]
    a[:, cols] = a[:, cols] @ j
    a[cols, :] = j.conj().T @ a[cols, :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, cols] = v[:, cols] @ j


def jacobi_eigh(
    matrix: np.ndarray,
    tol: float = DEFAULT_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
    strict: bool = False,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    循环 Jacobi 求厄米矩阵本征分解

    参数:
        matrix: 厄米方阵
        tol: 相对收敛阈值
        max_sweeps: 最大扫描次数
        strict: 未收敛时是否抛出 ConvergenceError

    返回:
        (升序本征值, 以列为本征矢的酉矩阵, 实际扫描次数)
    """
    a = check_hermitian(matrix)
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    skip_below = threshold / max(1, n * n)

    sweeps = 0
    converged = off_diagonal_norm(a) < threshold
    while not converged and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip_below:
                    _rotate(a, v, p, q)
        sweeps += 1
        converged = off_diagonal_norm(a) < threshold

    if not converged:
        message = f"Jacobi 在 {max_sweeps} 次扫描后未收敛，残差 {off_diagonal_norm(a):.3e}"
        if strict:
            raise ConvergenceError(message)
        logger.warning(message)
    else:
        logger.debug(f"Jacobi 收敛: 维度 {n}, 扫描 {sweeps} 次")

    eigenvalues = np.diag(a).real.copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order], sweeps


def diagonalize_hermitian(H, method: str = "jacobi", tol: float = DEFAULT_TOLERANCE) -> Eigendecomposition:
    """
    对角化厄米矩阵 H，满足 U†HU = diag(eigenvalues)

    参数:
        H: CouplingMatrix 或厄米数组
        method: "jacobi"（默认）、"lapack"（numpy.linalg.eigh）或 "auto"
        tol: Jacobi 收敛阈值

    返回:
        Eigendecomposition(unitary, eigenvalues)，本征值升序
    """
    matrix = getattr(H, "entries", H)
    if method not in METHODS:
        raise ValidationError(f"未知的对角化方法: {method!r}，可选 {METHODS}")

    if method == "auto":
        m = check_hermitian(matrix)
        small = m.shape[0] <= AUTO_JACOBI_MAX_DIM
        method = "jacobi" if small or off_diagonal_norm(m) == 0.0 else "lapack"
        logger.debug(f"auto 模式选择 {method}，维度 {m.shape[0]}")

    if method == "lapack":
        m = check_hermitian(matrix)
        eigenvalues, unitary = np.linalg.eigh(0.5 * (m + m.conj().T))
        return Eigendecomposition(unitary, eigenvalues)

    eigenvalues, unitary, _ = jacobi_eigh(matrix, tol=tol)
    return Eigendecomposition(unitary, eigenvalues)

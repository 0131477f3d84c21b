#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
可复现的随机流与环境抽样

位生成器固定为 numpy 的 PCG64；均匀数取自 Generator.random，
高斯数由同一均匀流经 Box–Muller 变换得到。第 k 次运行使用种子 seed + k。
"""

import logging
from typing import Optional, Union

import numpy as np

from ..bath import sample_couplings
from ..engine import EnvironmentSpec
from ..errors import SamplingError, ValidationError
from ..spin import AngleLike, QubitState, as_angle

logger = logging.getLogger("decoherence-lab.utils.random_streams")

SEED_LIMIT = 2 ** 64
MIN_PRENORM = 1e-6
MAX_REDRAWS = 100
SAMPLINGS = ("complex_square", "real_unit", "balanced")
ENV_STATES = ("sampled", "ground")


class RandomStream:
    """带种子的随机流"""

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed < SEED_LIMIT:
            raise ValidationError(f"种子必须在 [0, 2^64) 内: {seed}")
        self._seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))

    @property
    def seed(self) -> int:
        return self._seed

    def spawn(self, k: int) -> "RandomStream":
        """第 k 个子流，种子为 seed + k（模 2^64）"""
        return RandomStream((self._seed + int(k)) % SEED_LIMIT)

    def uniform(self, low: float = 0.0, high: float = 1.0, size: Optional[int] = None) -> Union[float, np.ndarray]:
        u = self._generator.random(size)
        if size is None:
            return float(low + (high - low) * u)
        return low + (high - low) * u

    def gauss(self, sigma: float = 1.0, size: Optional[int] = None, mu: float = 0.0) -> Union[float, np.ndarray]:
        """
        Box–Muller 正态抽样

        每对均匀数 (u₁, u₂) 产生 r·cos(2πu₂) 与 r·sin(2πu₂)，
        r = √(-2 ln(1 - u₁))，按先 cos 后 sin 的次序输出。
        """
        count = 1 if size is None else int(size)
        pairs = (count + 1) // 2
        u1 = self._generator.random(pairs)
        u2 = self._generator.random(pairs)
        radius = np.sqrt(-2.0 * np.log1p(-u1))
        angle = 2.0 * np.pi * u2
        normals = np.stack([radius * np.cos(angle), radius * np.sin(angle)], axis=1).reshape(-1)[:count]
        values = mu + sigma * normals
        if size is None:
            return float(values[0])
        return values

    def __repr__(self) -> str:
        return f"RandomStream(seed={self._seed})"


def sample_state(rng: RandomStream, sampling: str) -> QubitState:
    """
    抽取一个环境自旋初态

    参数:
        rng: 随机流
        sampling: complex_square / real_unit / balanced

    返回:
        归一化的 QubitState
    """
    sampling = getattr(sampling, "value", sampling)
    if sampling == "complex_square":
        for attempt in range(MAX_REDRAWS):
            re_a, im_a, re_b, im_b = rng.uniform(-1.0, 1.0, size=4)
            alpha, beta = complex(re_a, im_a), complex(re_b, im_b)
            if np.sqrt(abs(alpha) ** 2 + abs(beta) ** 2) >= MIN_PRENORM:
                return QubitState.normalized(alpha, beta)
            logger.warning(f"抽样振幅过小，重新抽取（第 {attempt + 1} 次）")
        raise SamplingError(f"连续 {MAX_REDRAWS} 次抽样振幅过小")
    if sampling == "real_unit":
        alpha = rng.uniform()
        return QubitState(alpha, np.sqrt(max(0.0, 1.0 - alpha * alpha)))
    if sampling == "balanced":
        return QubitState.plus()
    raise ValidationError(f"未知的抽样方式: {sampling!r}，可选 {SAMPLINGS}")


def sample_environment(
    rng: RandomStream,
    n: int,
    sampling: str,
    lam: float,
    coupling_scale: str = "per_spin",
    env_state: str = "sampled",
    basis: AngleLike = 0.0,
) -> EnvironmentSpec:
    """
    抽取 n 个环境自旋：先抽全部耦合，再依次抽初态

    参数:
        rng: 随机流
        n: 自旋数，0 得到空环境
        sampling: 初态抽样方式
        lam: 高斯宽度参数，耦合标准差 √(2λ)
        coupling_scale: per_spin 或 per_bath
        env_state: sampled 按 sampling 抽样，ground 全部取 |0⟩
        basis: 公共作用基角
    """
    if n < 0:
        raise ValidationError(f"环境自旋数不能为负: {n}")
    omegas = sample_couplings(rng, n, lam, coupling_scale)
    env_state = getattr(env_state, "value", env_state)
    if env_state == "ground":
        states = [QubitState.zero()] * n
    elif env_state == "sampled":
        states = [sample_state(rng, sampling) for _ in range(n)]
    else:
        raise ValidationError(f"未知的环境初态方式: {env_state!r}，可选 {ENV_STATES}")
    return EnvironmentSpec.from_arrays(list(omegas), states, basis=as_angle(basis))

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
异常定义模块

所有库异常都派生自内置的 ValueError / RuntimeError，调用方可以按内置类别捕获；
code 属性供命令行输出一行可解析的错误信息。
"""


class DecoherenceLabError(Exception):
    """项目异常基类"""

    code = "error"


class ValidationError(DecoherenceLabError, ValueError):
    """输入校验失败（非厄米、未归一化、非法哈密顿量项等）"""

    code = "validation"


class InvalidDimensionError(ValidationError):
    """维度不是 2 的幂，或维度不匹配"""

    code = "invalid-dimension"


class InvalidSizeError(ValidationError):
    """耦合矩阵规模过小"""

    code = "invalid-size"


class DomainError(ValidationError):
    """参数超出定义域（如 λ ≤ 0）"""

    code = "domain"


class UnsupportedBasisError(ValidationError):
    """闭式解不支持的作用基，需要改走精确对角化路径"""

    code = "unsupported-basis"


class UndefinedNormalizationError(ValidationError):
    """初始中心矩阵元为零，无法归一化"""

    code = "undefined-normalization"


class CapacityError(DecoherenceLabError, RuntimeError):
    """精确对角化超出容量上限"""

    code = "capacity"


class SamplingError(DecoherenceLabError, RuntimeError):
    """重复抽样次数用尽"""

    code = "sampling"


class ConvergenceError(DecoherenceLabError, RuntimeError):
    """Jacobi 迭代未在扫描上限内收敛"""

    code = "convergence"


class OutputError(DecoherenceLabError, RuntimeError):
    """输出路径不可写"""

    code = "output"

#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
保序并行映射
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

logger = logging.getLogger("decoherence-lab.utils.parallel")

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Iterable[T], max_workers: int = 1) -> List[R]:
    """
    对 items 逐个调用 fn，结果按提交顺序返回

    参数:
        fn: 无共享可变状态的函数
        items: 输入序列
        max_workers: 线程数，1 时直接顺序执行

    返回:
        结果列表，与调度次序无关
    """
    items = list(items)
    if max_workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"并行执行 {len(items)} 个任务，线程数 {max_workers}")
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(fn, items))

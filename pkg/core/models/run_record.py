#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
场景输出表与运行记录
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .config import ScenarioConfig


@dataclass
class ScenarioTable:
    """场景产生的数据表，rows 中每行与 columns 等长"""

    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    seeds: List[int] = field(default_factory=list)

    def add_row(self, *values: Any) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"行长度 {len(values)} 与列数 {len(self.columns)} 不一致")
        self.rows.append(list(values))

    def column(self, name: str) -> List[Any]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


@dataclass
class RunRecord:
    """一次运行的配置回显、种子、数据与耗时"""

    config: ScenarioConfig
    table: ScenarioTable
    wall_time: float
    output_path: Optional[str] = None

    @property
    def seeds(self) -> List[int]:
        return list(self.table.seeds)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.echo(),
            "seeds": self.seeds,
            "columns": list(self.table.columns),
            "n_rows": len(self.table.rows),
            "wall_time": self.wall_time,
            "output_path": self.output_path,
        }

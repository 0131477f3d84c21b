#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
场景配置模型

字段名与配置文件的键一一对应；取值为 None 的字段由场景默认值补全。
"""

import logging
import math
from enum import Enum
from typing import Any, Dict, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic import ValidationError as PydanticValidationError

from ..errors import ValidationError

logger = logging.getLogger("decoherence-lab.models.config")

SCHEMA_VERSION = "decoherence-lab v1"


class Scenario(str, Enum):
    COHERENCE_VS_N = "coherence_vs_n"
    COHERENCE_VS_T = "coherence_vs_t"
    SURFACE_N_T = "surface_n_t"
    FINITE_VS_INFINITE = "finite_vs_infinite"
    ENSEMBLE_AVERAGE = "ensemble_average"
    ENSEMBLE_SWEEP = "ensemble_sweep"
    GAUSSIAN_BATH = "gaussian_bath"
    DM_TOPOGRAPHY_1Q = "dm_topography_1q"
    DM_TOPOGRAPHY_2Q = "dm_topography_2q"
    BELL_TABLE = "bell_table"
    DFS_DEMO = "dfs_demo"
    REDUCE_DEMO = "reduce_demo"


class Sampling(str, Enum):
    COMPLEX_SQUARE = "complex_square"
    REAL_UNIT = "real_unit"
    BALANCED = "balanced"


class Observable(str, Enum):
    MAGNITUDE = "magnitude"
    REAL_PART = "real_part"


class CouplingScale(str, Enum):
    PER_SPIN = "per_spin"
    PER_BATH = "per_bath"


class EnvState(str, Enum):
    SAMPLED = "sampled"
    GROUND = "ground"


class Engine(str, Enum):
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


class ScenarioConfig(BaseModel):
    """一次场景运行的完整配置"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    scenario: Scenario
    n_env: Optional[int] = Field(None, ge=0)
    t_max: Optional[float] = Field(None, gt=0)
    steps: Optional[int] = Field(None, ge=1)
    seed: int = Field(42, ge=0, lt=2 ** 64)
    lam: float = Field(0.2, gt=0)
    runs: Optional[int] = Field(None, ge=1)
    n_step: Optional[int] = Field(None, ge=1)
    spreads: Optional[int] = Field(None, ge=1)
    sampling: Optional[Sampling] = None
    observable: Optional[Observable] = None
    basis_theta: Optional[float] = None
    out_path: Optional[str] = None
    t_eval: float = 1.0
    coupling_scale: Optional[CouplingScale] = None
    env_state: Optional[EnvState] = None
    engine: Engine = Engine.CLOSED_FORM
    max_workers: int = Field(1, ge=1)
    log_level: str = "WARNING"

    @field_validator("t_max", "lam", "basis_theta", "t_eval")
    @classmethod
    def _finite(cls, value):
        if value is not None and not math.isfinite(value):
            raise ValueError("必须是有限实数")
        return value

    @field_validator("log_level")
    @classmethod
    def _level(cls, value: str) -> str:
        level = str(value).upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"未知的日志级别: {value}")
        return level

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> "ScenarioConfig":
        """校验字典并构造配置，pydantic 的校验错误统一转换为 ValidationError"""
        try:
            return cls.model_validate(dict(data))
        except PydanticValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in e.errors()
            )
            raise ValidationError(f"配置无效: {problems}") from e

    def resolved(self, defaults: Mapping[str, Any]) -> "ScenarioConfig":
        """用场景默认值补全取值为 None 的字段"""
        updates = {key: value for key, value in defaults.items() if getattr(self, key, None) is None}
        if not updates:
            return self
        data = self.model_dump()
        data.update(updates)
        return ScenarioConfig.from_mapping(data)

    @property
    def name(self) -> str:
        return self.scenario.value

    @property
    def observable_name(self) -> str:
        return self.observable.value if self.observable is not None else Observable.MAGNITUDE.value

    def output_path(self) -> str:
        return self.out_path or f"{self.name}.csv"

    def echo(self) -> Dict[str, Any]:
        """JSON 友好的配置回显"""
        return self.model_dump(mode="json")

"""
统一配置管理系统

整合 key = value 配置文件、环境变量和命令行参数等多个配置源，
按优先级合并后交给 ScenarioConfig 做类型校验。
"""

import os
import logging
from typing import Dict, Any, Optional, List, Mapping
from pathlib import Path
from dataclasses import dataclass, field
from copy import deepcopy

from ..errors import ValidationError
from ..models import ScenarioConfig

logger = logging.getLogger("decoherence-lab.managers.config_manager")

ENV_PREFIX = "DECOHERENCE_LAB_"

# 命令行与配置文件中允许的别名
KEY_ALIASES = {
    "lambda": "lam",
    "theta": "basis_theta",
    "out": "out_path",
    "workers": "max_workers",
}

# 取值按原文保留、不做数字转换的字段
STRING_KEYS = ("out_path", "log_level")


@dataclass
class ConfigSource:
    """配置源描述"""
    name: str
    path: Optional[str] = None
    env_prefix: Optional[str] = None
    values: Dict[str, Any] = field(default_factory=dict)
    required: bool = False
    priority: int = 100  # 数字越小优先级越高


def normalize_key(key: str) -> str:
    """连字符转下划线、小写并解析别名"""
    key = key.strip().lower().replace("-", "_")
    return KEY_ALIASES.get(key, key)


def convert_value(value: str, key: Optional[str] = None) -> Any:
    """
    转换配置文件和环境变量中的字符串值

    参数:
        value: 原始字符串
        key: 规范化后的键名，属于 STRING_KEYS 时只去掉引号
    """
    value = value.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in ("'", '"'):
        return value[1:-1]
    if key in STRING_KEYS:
        return value

    # 布尔值
    if value.lower() in ('true', 'yes'):
        return True
    elif value.lower() in ('false', 'no'):
        return False

    # 数字
    try:
        return int(value)
    except ValueError:
        pass
    try:
        return float(value)
    except ValueError:
        pass

    # 字符串
    return value


def parse_config_text(text: str, source_name: str = "<text>") -> Dict[str, Any]:
    """
    解析 key = value 文本

    参数:
        text: 文件内容
        source_name: 出错时报告的来源名

    返回:
        键已规范化的字典
    """
    config: Dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if " #" in line:
            line = line.split(" #", 1)[0].rstrip()
        if "=" not in line:
            raise ValidationError(f"{source_name} 第 {number} 行缺少 '=': {raw!r}")
        key, value = line.split("=", 1)
        key = normalize_key(key)
        if not key:
            raise ValidationError(f"{source_name} 第 {number} 行缺少键名")
        config[key] = convert_value(value, key)
    return config


class ConfigManager:
    """
    统一配置管理器

    优先级：命令行参数（0） > 环境变量（5） > 配置文件（10） > 场景默认值
    """

    def __init__(
        self,
        config_file: Optional[str] = None,
        overrides: Optional[Mapping[str, Any]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ):
        self._environ = os.environ if environ is None else environ
        self._config_cache: Dict[str, Any] = {}
        self._config_sources: List[ConfigSource] = []

        # 设置默认配置源
        self._setup_default_sources(config_file, overrides or {})

        # 初始加载配置
        self._load_all_configs()

    def _setup_default_sources(self, config_file: Optional[str], overrides: Mapping[str, Any]):
        """设置默认配置源"""
        self._config_sources = [
            ConfigSource(
                name="cli_overrides",
                values={normalize_key(k): v for k, v in overrides.items() if v is not None},
                priority=0
            ),
            ConfigSource(
                name="env_vars",
                env_prefix=ENV_PREFIX,
                priority=5
            ),
        ]
        if config_file:
            self._config_sources.append(
                ConfigSource(
                    name="config_file",
                    path=config_file,
                    required=True,
                    priority=10
                )
            )

    def _load_all_configs(self):
        """加载所有配置源"""
        merged_config: Dict[str, Any] = {}

        # 按优先级排序配置源（优先级高的最后加载，以便覆盖低优先级的配置）
        sorted_sources = sorted(self._config_sources, key=lambda x: x.priority, reverse=True)

        for source in sorted_sources:
            config_data = self._load_config_source(source)
            if config_data:
                merged_config = self._merge_configs(merged_config, config_data)
                logger.debug(f"加载配置源: {source.name}，{len(config_data)} 项")

        self._config_cache = merged_config

    def _load_config_source(self, source: ConfigSource) -> Dict[str, Any]:
        """加载单个配置源"""
        if source.path:
            return self._load_file_config(source)
        elif source.env_prefix:
            return self._load_env_config(source)
        return dict(source.values)

    def _load_file_config(self, source: ConfigSource) -> Dict[str, Any]:
        """加载 key = value 配置文件"""
        config_path = Path(source.path)

        if not config_path.exists():
            if source.required:
                raise ValidationError(f"配置文件不存在: {config_path}")
            return {}

        try:
            text = config_path.read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as e:
            raise ValidationError(f"读取配置文件 {config_path} 失败: {e}") from e
        return parse_config_text(text, str(config_path))

    def _load_env_config(self, source: ConfigSource) -> Dict[str, Any]:
        """加载环境变量配置"""
        env_config = {}
        prefix = source.env_prefix

        for key, value in self._environ.items():
            if key.startswith(prefix):
                config_key = normalize_key(key[len(prefix):])
                if config_key not in ScenarioConfig.model_fields:
                    logger.debug(f"忽略未知的环境变量: {key}")
                    continue
                env_config[config_key] = convert_value(value, config_key)

        return env_config

    def _merge_configs(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """合并配置，override 中的键覆盖 base"""
        result = deepcopy(base)
        for key, value in override.items():
            result[key] = deepcopy(value)
        return result

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值"""
        value = self._config_cache.get(normalize_key(key))
        return value if value is not None else default

    def set(self, key: str, value: Any) -> None:
        """设置配置值（运行时修改，不持久化）"""
        self._config_cache[normalize_key(key)] = value
        logger.debug(f"运行时配置更新: {key} = {value}")

    def get_all(self) -> Dict[str, Any]:
        """获取所有配置"""
        return deepcopy(self._config_cache)

    def reload(self) -> None:
        """重新加载所有配置"""
        logger.info("重新加载配置...")
        self._config_cache.clear()
        self._load_all_configs()

    def build_config(self) -> ScenarioConfig:
        """把合并后的配置校验为 ScenarioConfig"""
        data = self.get_all()
        if "scenario" not in data:
            raise ValidationError("未指定场景 (scenario)")
        return ScenarioConfig.from_mapping(data)

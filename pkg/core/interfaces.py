#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
标准服务接口定义

定义项目中核心服务的协议接口，使用Python的Protocol机制
确保类型安全和接口契约。
"""

from typing import Protocol, Dict, Any, Mapping

from .models import ScenarioConfig, ScenarioTable


class IScenario(Protocol):
    """实验场景接口协议"""

    name: str
    description: str

    def defaults(self) -> Mapping[str, Any]:
        """场景默认配置"""
        ...

    def resolve(self, config: ScenarioConfig) -> ScenarioConfig:
        """按场景默认值补全配置"""
        ...

    def run(self, config: ScenarioConfig) -> ScenarioTable:
        """运行场景并返回数据表"""
        ...


class IFormatter(Protocol):
    """格式化器接口协议"""

    def render(self, table: ScenarioTable, config: ScenarioConfig) -> str:
        """渲染为文本"""
        ...

    def format(self, table: ScenarioTable, config: ScenarioConfig, output_file: str) -> Dict[str, Any]:
        """格式化数据到文件"""
        ...


class IConfigManager(Protocol):
    """配置管理器接口协议"""

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值"""
        ...

    def get_all(self) -> Dict[str, Any]:
        """获取所有配置"""
        ...

    def reload(self) -> None:
        """重新加载配置"""
        ...

    def build_config(self) -> ScenarioConfig:
        """生成校验后的场景配置"""
        ...

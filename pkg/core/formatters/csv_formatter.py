#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
CSV格式化器，把场景数据表写成带版本注释行的CSV文件
"""

import io
import csv
import logging
from typing import Dict, Any

from ..errors import OutputError
from ..models import SCHEMA_VERSION, ScenarioConfig, ScenarioTable
from ..utils_modules import ensure_parent_directory, format_float

# 设置日志
logger = logging.getLogger("decoherence-lab.formatters.csv")


def _cell(value: Any) -> str:
    if isinstance(value, str):
        return value
    return format_float(value)


class CsvFormatter:
    """CSV格式化器类"""

    def header_line(self, config: ScenarioConfig) -> str:
        """首行注释：版本、场景、种子与观测量"""
        return (
            f"# {SCHEMA_VERSION}, scenario={config.name}, "
            f"seed={config.seed}, observable={config.observable_name}"
        )

    def render(self, table: ScenarioTable, config: ScenarioConfig) -> str:
        """
        生成CSV文本

        参数:
            table: 场景数据表
            config: 已补全默认值的配置

        返回:
            UTF-8 文本，LF 换行，浮点数 17 位有效数字
        """
        buffer = io.StringIO()
        buffer.write(self.header_line(config) + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_cell(value) for value in row])
        return buffer.getvalue()

    def format(self, table: ScenarioTable, config: ScenarioConfig, output_file: str) -> Dict[str, Any]:
        """
        将数据表写入CSV文件

        参数:
            table: 场景数据表
            config: 已补全默认值的配置
            output_file: 输出文件路径

        返回:
            格式化结果
        """
        text = self.render(table, config)
        try:
            path = ensure_parent_directory(output_file)
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
        except OSError as e:
            raise OutputError(f"无法写入输出文件 {output_file}: {e}") from e

        logger.info(f"已生成CSV: {output_file}，{len(table.rows)} 行")

        return {
            "status": "success",
            "message": "已生成CSV",
            "output_path": path,
            "rows": len(table.rows),
        }

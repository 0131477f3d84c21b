#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
decoherence-lab 主入口文件
每个实验场景对应一个子命令，另有 run（按配置文件运行）与 list
"""

import os
import sys
import json
import logging
from typing import Any, Callable, Dict, Optional

import click
from rich.console import Console
from rich.table import Table

# 确保当前目录在Python路径中，以便正确导入core模块
current_dir = os.path.dirname(os.path.abspath(__file__))
if current_dir not in sys.path:
    sys.path.insert(0, current_dir)

from core.errors import DecoherenceLabError, ValidationError
from core.interfaces import IConfigManager
from core.managers import ConfigManager, ScenarioManager
from core.models import Scenario, Sampling, Observable, CouplingScale, EnvState, Engine

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# click 8.2 起不带参数调用命令组时抛出该异常并打印帮助
NO_ARGS_HELP = getattr(click.exceptions, "NoArgsIsHelpError", ())

logger = logging.getLogger("decoherence-lab")
console = Console(stderr=True)


def setup_logging(verbose: bool) -> None:
    """配置日志，默认 WARNING，--verbose 时为 INFO"""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def _choices(enum_cls) -> click.Choice:
    return click.Choice([member.value for member in enum_cls])


def scenario_options(func: Callable) -> Callable:
    """所有场景命令共用的参数"""
    options = [
        click.option("--config", "config_file", type=click.Path(dir_okay=False), help="key = value 配置文件"),
        click.option("--n-env", type=int, help="环境自旋数"),
        click.option("--t-max", type=float, help="时间网格终点"),
        click.option("--steps", type=int, help="时间网格区间数"),
        click.option("--seed", type=int, help="随机种子，0 ≤ seed < 2^64"),
        click.option("--lambda", "lam", type=float, help="高斯宽度参数 λ"),
        click.option("--runs", type=int, help="系综运行次数"),
        click.option("--n-step", type=int, help="ensemble_sweep 的环境自旋数步长"),
        click.option("--spreads", type=int, help="gaussian_bath 的宽度网格点数"),
        click.option("--sampling", type=_choices(Sampling), help="环境初态抽样方式"),
        click.option("--observable", type=_choices(Observable), help="输出的观测量"),
        click.option("--theta", "basis_theta", type=float, help="作用基角 θ（弧度）"),
        click.option("--out", "out_path", type=click.Path(dir_okay=False), help="CSV 输出路径"),
        click.option("--coupling-scale", type=_choices(CouplingScale), help="耦合抽样缩放"),
        click.option("--env-state", type=_choices(EnvState), help="环境初态：抽样或全部 |0⟩"),
        click.option("--engine", type=_choices(Engine), help="求值路径"),
        click.option("--t-eval", type=float, help="coherence_vs_n 的求值时刻"),
        click.option("--workers", "max_workers", type=int, help="并行线程数"),
        click.option("--echo", is_flag=True, help="在标准输出打印运行记录 JSON"),
        click.option("--verbose", "-v", is_flag=True, help="输出 INFO 级日志"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def report_error(error: Exception) -> None:
    """一行可解析的错误信息"""
    code = getattr(error, "code", "internal")
    message = " ".join(str(error).split())
    click.echo(f"error code={code} type={type(error).__name__} message={message}", err=True)


def print_summary(record) -> None:
    table = Table(title=f"{record.config.name} 运行摘要", show_header=False)
    table.add_row("seeds", ", ".join(str(s) for s in record.seeds))
    table.add_row("observable", record.config.observable_name)
    table.add_row("rows", str(len(record.table.rows)))
    table.add_row("output", str(record.output_path))
    table.add_row("wall time", f"{record.wall_time:.3f}s")
    console.print(table)


def execute(overrides: Dict[str, Any], config_file: Optional[str], verbose: bool, echo: bool) -> None:
    """
    合并配置并运行场景

    参数:
        overrides: 命令行参数
        config_file: 配置文件路径
        verbose: 是否输出 INFO 日志
        echo: 是否打印运行记录
    """
    setup_logging(verbose)
    try:
        manager: IConfigManager = ConfigManager(config_file=config_file, overrides=overrides)
        config = manager.build_config()
        if not verbose:
            logging.getLogger().setLevel(config.log_level)
        record = ScenarioManager().run(config)
    except DecoherenceLabError as e:
        report_error(e)
        sys.exit(2 if isinstance(e, ValidationError) else 1)
    except Exception as e:
        logger.exception("运行时出现未预期的异常")
        report_error(e)
        sys.exit(1)

    if verbose:
        print_summary(record)
    if echo:
        click.echo(json.dumps(record.to_dict(), ensure_ascii=False))


class LabGroup(click.Group):
    """命令行用法错误也按一行 error code=... 的格式报告，退出码 2"""

    def main(self, *args, **kwargs):
        kwargs.pop("standalone_mode", None)
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except NO_ARGS_HELP as e:
            e.show()
            sys.exit(e.exit_code)
        except click.UsageError as e:
            report_error(ValidationError(e.format_message()))
            sys.exit(2)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(1)


@click.group(cls=LabGroup)
@click.version_option(version="1", prog_name="decoherence-lab", message="%(prog)s v%(version)s")
def cli():
    """自旋环境退相干数值实验"""


@cli.command("run")
@click.option("--scenario", type=_choices(Scenario), help="场景名称，缺省时取配置文件中的 scenario")
@scenario_options
def run_command(config_file, echo, verbose, **overrides):
    """按配置文件（和命令行参数）运行场景"""
    execute(overrides, config_file, verbose, echo)


@cli.command("list")
def list_command():
    """列出所有场景"""
    table = Table(title="场景")
    table.add_column("name")
    table.add_column("description")
    for name, description in ScenarioManager().describe().items():
        table.add_row(name, description)
    Console().print(table)


def _scenario_command(name: str, description: str) -> click.Command:
    @scenario_options
    def command(config_file, echo, verbose, **overrides):
        overrides["scenario"] = name
        execute(overrides, config_file, verbose, echo)

    command.__doc__ = description
    return click.command(name)(command)


for _name, _description in ScenarioManager().describe().items():
    cli.add_command(_scenario_command(_name, _description))


if __name__ == "__main__":
    cli()

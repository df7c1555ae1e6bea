"""
命令行入口

退出码：0 成功，2 配置或取值域错误，3 调用顺序错误，4 决策后端错误，5 读写错误。
"""

import functools
import json
import logging
import re
import sys

import click

from invbench.constants import AgentKind, BoundKind, CapRule, ReasoningEffort
from invbench.exceptions import ConfigurationError, IngestionError, InvBenchError
from invbench.harness import eval_traces, load_scenario, record_rollout_log, run_experiment
from invbench.objects import BackendConfig, RunConfig
from invbench.optimal import export_ip, solve, solve_ip, write_schedule
from invbench.policies import make_policy

__all__ = ["main", "parse_budget"]

logger = logging.getLogger(__name__)


def parse_budget(text: str):
    """解析搜索预算："5000" 表示节点数，"30s" 表示秒数；返回 (node_limit, time_limit)"""
    match = re.fullmatch(r"\s*(\d+(?:\.\d+)?)\s*(s?)\s*", text or "")
    if not match:
        raise ConfigurationError(f"无法解析搜索预算: {text!r}（例如 5000 或 30s）")
    value, unit = match.groups()
    if unit:
        return None, float(value)
    if "." in value:
        raise ConfigurationError(f"节点数预算必须是整数: {text!r}")
    return int(value), None


def _handle_errors(func):
    """把 invbench 异常映射为对应的退出码"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvBenchError as e:
            click.echo(f"错误: {e}", err=True)
            sys.exit(e.exit_code)
        except OSError as e:
            click.echo(f"读写错误: {e}", err=True)
            sys.exit(IngestionError.exit_code)

    return wrapper


@click.group()
@click.option("--log-level", default="INFO", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"]),
              help="日志级别")
def main(log_level: str):
    """多级供应链库存管理基准"""
    logging.basicConfig(level=getattr(logging, log_level),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--scenario", required=True, help="场景名称或 YAML 文件")
@click.option("--agent", required=True, type=click.Choice([kind.value for kind in AgentKind]), help="智能体类型")
@click.option("--episodes", default=5, show_default=True, help="回合数")
@click.option("--k", "k", default=6, show_default=True, help="近邻数 K")
@click.option("--tau", default=2.0, show_default=True, help="距离阈值")
@click.option("--memory", "memory_log", default=None, help="预先载入的记忆日志")
@click.option("--backend", default="scripted:safety-stock", show_default=True,
              help="决策后端：scripted:<策略> 或 remote")
@click.option("--endpoint", default=None, help="远程后端基础地址")
@click.option("--model", default=None, help="远程模型名称")
@click.option("--effort", default="medium", type=click.Choice([e.value for e in ReasoningEffort]), show_default=True,
              help="推理强度")
@click.option("--max-concurrency", default=4, show_default=True, help="同时进行中的远程请求数上限")
@click.option("--z", default=0.0, show_default=True, help="安全库存策略的安全系数")
@click.option("--cap-rule", default="supplier", type=click.Choice([r.value for r in CapRule]), show_default=True,
              help="安全库存策略的订单上限规则")
@click.option("--workers", default=1, show_default=True, help="并行回合数")
@click.option("--force-episodes", is_flag=True, help="确定性配置也运行全部回合")
@click.option("--templates", "template_dir", default=None, help="自定义提示词模板目录")
@click.option("--schedule", "schedule_path", default=None, help="optimal-replay 回放的订单矩阵文件")
@click.option("--out", "out_dir", default=None, help="输出目录")
@_handle_errors
def run(scenario, agent, episodes, k, tau, memory_log, backend, endpoint, model, effort, max_concurrency, z,
        cap_rule, workers, force_episodes, template_dir, schedule_path, out_dir):
    """运行实验并输出报告"""
    backend_kind, _, backend_policy = backend.partition(":")
    if backend_kind not in ("scripted", "remote"):
        raise ConfigurationError(f"未知的决策后端: {backend}")
    cfg = RunConfig(
        scenario=scenario,
        agent=AgentKind(agent),
        episodes=episodes,
        k=k,
        tau=tau,
        backend=BackendConfig(kind=backend_kind, endpoint=endpoint, model=model,
                              reasoning_effort=ReasoningEffort(effort), max_concurrency=max_concurrency),
        backend_policy=backend_policy or AgentKind.SAFETY_STOCK.value,
        memory_log=memory_log,
        out_dir=out_dir,
        z=z,
        cap_rule=CapRule(cap_rule),
        workers=workers,
        force_episodes=force_episodes,
        template_dir=template_dir,
        schedule_path=schedule_path,
    )
    report = run_experiment(cfg)
    click.echo(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))


@main.command(name="solve")
@click.option("--scenario", required=True, help="场景名称或 YAML 文件")
@click.option("--export-ip", "export_path", default=None, help="把整数规划模型写为 LP 文件")
@click.option("--budget", default=None, help="搜索预算：节点数（5000）或秒数（30s）")
@click.option("--bound", default="lp", type=click.Choice([b.value for b in BoundKind]), show_default=True,
              help="上界类型")
@click.option("--workers", default=1, show_default=True, help="并行搜索线程数")
@click.option("--cbc", is_flag=True, help="改用 CBC 求解导出的整数规划模型")
@click.option("--schedule-out", default=None, help="写出最优订单矩阵")
@_handle_errors
def solve_command(scenario, export_path, budget, bound, workers, cbc, schedule_out):
    """求解集中式最优订单矩阵"""
    node_limit, time_limit = parse_budget(budget) if budget else (None, None)
    if cbc and node_limit is not None:
        raise ConfigurationError("CBC 只支持秒数预算（例如 --budget 30s），不支持节点数预算")
    spec = load_scenario(scenario)
    if export_path:
        count = export_ip(spec, export_path)
        click.echo(f"已写出 {export_path}（{count} 个变量）")
    if cbc:
        result = solve_ip(spec, time_limit=time_limit)
    else:
        result = solve(spec, node_limit=node_limit, time_limit=time_limit, bound=BoundKind(bound), workers=workers)
    if schedule_out:
        write_schedule(result.schedule, schedule_out)
    click.echo(json.dumps({
        "scenario": spec.name,
        "objective": result.objective,
        "status": result.status.value,
        "upper_bound": result.upper_bound,
        "node_count": result.node_count,
        "schedule": [list(row) for row in result.schedule.orders],
    }, ensure_ascii=False))


@main.command(name="eval")
@click.option("--traces", "trace_dir", required=True, help="run 命令的输出目录")
@_handle_errors
def eval_command(trace_dir):
    """根据轨迹 CSV 重新计算报告"""
    report = eval_traces(trace_dir)
    click.echo(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))


@main.command()
@click.option("--scenario", required=True, help="场景名称或 YAML 文件")
@click.option("--policy", "policy_kind", default="optimal-replay",
              type=click.Choice([AgentKind.BASE_STOCK.value, AgentKind.TRACKING_DEMAND.value,
                                 AgentKind.SAFETY_STOCK.value, AgentKind.OPTIMAL_REPLAY.value]),
              show_default=True, help="生成日志使用的策略")
@click.option("--out", "out_path", required=True, help="日志文件")
@_handle_errors
def mklog(scenario, policy_kind, out_path):
    """生成离线记忆日志"""
    spec = load_scenario(scenario)
    schedule = solve(spec).schedule if policy_kind == AgentKind.OPTIMAL_REPLAY.value else None
    count = record_rollout_log(spec, make_policy(policy_kind, spec, schedule=schedule), out_path)
    click.echo(f"已写出 {out_path}（{count} 条记录）")

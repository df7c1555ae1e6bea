"""
实验运行与轨迹复算
"""

import concurrent.futures
import dataclasses
import glob
import json
import logging
import os
import re
from typing import Dict, List, Optional

import pandas as pd

from invbench.agents import DecisionBackend, bundle_for, make_backend, run_episode
from invbench.constants import AgentKind
from invbench.env import write_trace
from invbench.exceptions import ConfigurationError, IngestionError
from invbench.harness.metrics import relative_gap, summarize
from invbench.harness.reference import cached_optimal, optimal_reward, published_gap
from invbench.harness.registry import load_scenario
from invbench.harness.series import build_series, emit_series
from invbench.memory import MemoryStore, import_log, make_stores
from invbench.objects import EpisodeResult, MemoryConfig, MetricsReport, RunConfig, ScenarioSpec
from invbench.optimal import read_schedule, solve
from invbench.policies import make_policy

__all__ = ["REPORT_FILE", "FAILURE_MARKER", "make_run_backend", "run_experiment", "eval_traces"]

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"
FAILURE_MARKER = "FAILED"
_TRACE_NAME = re.compile(r"episode_(\d+)\.csv")


def make_run_backend(cfg: RunConfig, spec: ScenarioSpec) -> DecisionBackend:
    """按智能体类型构造决策后端：启发式基线与语言模型智能体的脚本后端都是确定性的"""
    kind = cfg.agent
    if not kind.is_language_agent:
        schedule = None
        if kind == AgentKind.OPTIMAL_REPLAY:
            schedule = read_schedule(cfg.schedule_path) if cfg.schedule_path else solve(spec).schedule
            if (schedule.num_stages, schedule.horizon) != (spec.num_stages, spec.horizon):
                raise ConfigurationError(f"订单矩阵维度为 {schedule.num_stages} x {schedule.horizon}，"
                                         f"场景 {spec.name} 需要 {spec.num_stages} x {spec.horizon}")
        policy = make_policy(kind.value, spec, z=cfg.z, cap_rule=cfg.cap_rule, l_max=cfg.l_max, schedule=schedule)
        return make_backend(dataclasses.replace(cfg.backend, kind="scripted", policy=policy))
    if cfg.backend.kind == "scripted":
        policy = make_policy(cfg.backend_policy, spec, z=cfg.z, cap_rule=cfg.cap_rule, l_max=cfg.l_max)
        return make_backend(dataclasses.replace(cfg.backend, policy=policy))
    fallback = make_policy(AgentKind.SAFETY_STOCK.value, spec, z=0.0)
    return make_backend(cfg.backend, fallback)


def _check_config(cfg: RunConfig) -> None:
    if cfg.episodes < 1:
        raise ConfigurationError(f"回合数必须不小于 1: {cfg.episodes}")
    if cfg.k < 0 or cfg.tau < 0:
        raise ConfigurationError(f"K 与 tau 必须非负: K={cfg.k}, tau={cfg.tau}")
    if cfg.workers < 1:
        raise ConfigurationError(f"并行回合数必须不小于 1: {cfg.workers}")
    if cfg.agent == AgentKind.AIMRM_LOG and not cfg.memory_log:
        raise ConfigurationError("aimrm-log 需要指定记忆日志")


def run_experiment(cfg: RunConfig) -> MetricsReport:
    """运行 N 个回合并汇总报告

    确定性配置（脚本后端）只运行 1 个回合，除非 force_episodes 为 True。启用记忆时各回合在共享记忆库上顺序执行，
    否则按 workers 并行执行。给定输出目录时写出每个回合的轨迹 CSV、序列 CSV 与 report.json；出错时写出已完成的部分
    结果与失败标记后重新抛出异常。
    """
    _check_config(cfg)
    spec = load_scenario(cfg.scenario)
    kind = cfg.agent
    memory = MemoryConfig(enabled=kind.uses_memory, k=cfg.k, tau=cfg.tau)
    stores: Optional[Dict[int, MemoryStore]] = make_stores(spec) if memory.enabled else None
    if stores is not None and cfg.memory_log:
        import_log(stores, cfg.memory_log)

    bundle = bundle_for(kind, cfg.template_dir)
    backend = make_run_backend(cfg, spec)
    remote = cfg.backend.kind == "remote" and kind.is_language_agent
    episodes = cfg.episodes if (remote or cfg.force_episodes) else 1
    opt = optimal_reward(spec)

    if cfg.out_dir:
        os.makedirs(cfg.out_dir, exist_ok=True)

    def one(i: int) -> EpisodeResult:
        transcript = (os.path.join(cfg.out_dir, f"transcript_{i}.jsonl")
                      if (cfg.out_dir and kind.is_language_agent) else None)
        result = run_episode(spec, backend, bundle, memory=memory, stores=stores, episode=i,
                             transcript_path=transcript)
        if cfg.out_dir:
            write_trace(result.state, os.path.join(cfg.out_dir, f"episode_{i}.csv"))
        return result

    results: List[EpisodeResult] = []
    try:
        if memory.enabled or cfg.workers == 1:
            for i in range(episodes):
                results.append(one(i))
        else:
            with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.workers) as executor:
                futures = [executor.submit(one, i) for i in range(episodes)]
                for future in futures:
                    results.append(future.result())
    except Exception as e:
        logger.error("实验 %s/%s 失败（已完成 %d 个回合）: %s", spec.name, kind.value, len(results), e)
        if cfg.out_dir:
            _write_report(cfg.out_dir, _build_report(spec, kind, results, opt), results, error=e)
        raise
    finally:
        backend.close()

    report = _build_report(spec, kind, results, opt)
    if report.reference_gap is not None and report.reference_deviation:
        logger.warning("场景 %s 的 %s 相对差距 %.2f 与已发表的 %.2f 相差 %.2f 个百分点（完整轨迹见 episode_*.csv）",
                       spec.name, kind.value, report.gap, report.reference_gap, report.reference_deviation)
    if cfg.out_dir:
        _write_report(cfg.out_dir, report, results)
        emit_series(report, os.path.join(cfg.out_dir, "series"))
    logger.info("实验 %s/%s：平均总收益 %.2f，标准差 %.2f，Δ=%s", spec.name, kind.value, report.mean, report.std,
                report.gap)
    return report


def _build_report(spec: ScenarioSpec, kind: AgentKind, results: List[EpisodeResult], opt) -> MetricsReport:
    totals = tuple(result.total_reward for result in results)
    mean, std = summarize(totals) if totals else (float("nan"), float("nan"))
    registered = cached_optimal(spec) is not None
    return MetricsReport(
        scenario=spec.name,
        agent=kind.value,
        episode_rewards=totals,
        mean=mean,
        std=std,
        opt=opt,
        gap=relative_gap(opt, mean) if (totals and opt) else None,
        reference_gap=published_gap(kind.value, spec.name) if registered else None,
        fallback_count=sum(result.fallback_count for result in results),
        series=build_series(results[0].state, opt) if results else {},
    )


def _write_report(out_dir: str, report: MetricsReport, results: List[EpisodeResult],
                  error: Optional[BaseException] = None) -> None:
    data = report.to_dict()
    data["episodes"] = [{
        "episode": result.episode,
        "trace": f"episode_{result.episode}.csv",
        "total_reward": result.total_reward,
        "stage_rewards": list(result.stage_rewards),
        "fallback_count": result.fallback_count,
        "retrieval_count": result.retrieval_count,
        "retrieved_cases": result.retrieved_cases,
    } for result in results]
    data["failed"] = error is not None
    if error is not None:
        data["error"] = f"{type(error).__name__}: {error}"
    try:
        with open(os.path.join(out_dir, REPORT_FILE), "w", encoding="UTF-8") as file:
            json.dump(data, file, ensure_ascii=False, indent=2)
        if error is not None:
            with open(os.path.join(out_dir, FAILURE_MARKER), "w", encoding="UTF-8") as file:
                file.write(data["error"] + "\n")
    except OSError as e:
        raise IngestionError(f"无法写入实验报告 {out_dir}: {e}") from e


def eval_traces(trace_dir: str) -> MetricsReport:
    """只根据轨迹 CSV 与 report.json 中的 Opt 重新计算各回合总收益、平均值、标准差与 Δ"""
    report_path = os.path.join(trace_dir, REPORT_FILE)
    if not os.path.isfile(report_path):
        raise IngestionError(f"目录中缺少 {REPORT_FILE}: {trace_dir}")
    try:
        with open(report_path, "r", encoding="UTF-8") as file:
            data = json.load(file)
        episodes = {}
        for path in glob.glob(os.path.join(trace_dir, "episode_*.csv")):
            match = _TRACE_NAME.fullmatch(os.path.basename(path))
            if match:
                episodes[int(match.group(1))] = path
        totals = tuple(pd.read_csv(episodes[i])["P"].sum().item() for i in sorted(episodes))
    except (OSError, ValueError, KeyError) as e:
        raise IngestionError(f"无法读取轨迹目录 {trace_dir}: {e}") from e
    if not totals:
        raise IngestionError(f"目录中没有轨迹文件: {trace_dir}")
    mean, std = summarize(totals)
    opt = data.get("opt")
    return MetricsReport(
        scenario=data.get("scenario", ""),
        agent=data.get("agent", ""),
        episode_rewards=totals,
        mean=mean,
        std=std,
        opt=opt,
        gap=relative_gap(opt, mean) if opt else None,
        reference_gap=data.get("reference_gap"),
        fallback_count=data.get("fallback_count", 0),
    )

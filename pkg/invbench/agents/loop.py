"""
单周期决策流程与回合循环

每个周期按阶段 0 到 M-1 的顺序：观测、检索相似案例、组装提示词、决策、提交订单；全部阶段提交后推进周期，
再把（决策前状态向量，订单，本周期收益）写入各阶段的记忆库。
"""

import logging
from typing import Callable, Dict, List, Optional

from invbench.agents.backends import DecisionBackend
from invbench.agents.prompts import PromptBundle, build_prompt, build_system_prompt, describe_demand
from invbench.agents.transcript import TranscriptWriter
from invbench.constants import RecordSource
from invbench.env import EnvState, demand_at, reset
from invbench.exceptions import ConfigurationError, ProtocolError
from invbench.memory import MemoryStore, make_stores
from invbench.objects import (
    Decision,
    DecisionContext,
    DecisionLog,
    EpisodeResult,
    MemoryConfig,
    MemoryRecord,
    ScenarioSpec
)

__all__ = ["run_round", "run_episode"]

logger = logging.getLogger(__name__)

DecisionHook = Callable[[DecisionContext, Decision], None]


def run_round(env: EnvState, stores: Optional[Dict[int, MemoryStore]], backend: DecisionBackend,
              bundle: PromptBundle, t: int,
              memory: MemoryConfig = MemoryConfig(),
              demand_description: str = "",
              episode: int = 0,
              transcript: Optional[TranscriptWriter] = None,
              decisions: Optional[List[DecisionLog]] = None,
              on_decision: Optional[DecisionHook] = None) -> Dict[int, int]:
    """执行周期 t 全部阶段的决策并推进环境

    Parameters
    ----------
    env : EnvState
        环境状态，必须恰好完成了 t-1 个周期且没有缓存的订单
    stores : Optional[Dict[int, MemoryStore]]
        各阶段记忆库（未启用记忆时可以为 None）
    backend : DecisionBackend
        决策后端
    bundle : PromptBundle
        提示词模板
    t : int
        周期
    memory : MemoryConfig, default = MemoryConfig()
        记忆配置
    demand_description : str, default = ""
        需求说明文本
    episode : int, default = 0
        回合编号（写入记忆记录与对话记录）
    transcript : Optional[TranscriptWriter], default = None
        对话记录
    decisions : Optional[List[DecisionLog]], default = None
        给定时追加本周期的决策记录
    on_decision : Optional[DecisionHook], default = None
        每次决策后的回调，参数为决策上下文与决策

    Returns
    -------
    Dict[int, int]
        阶段 -> 订单
    """
    if env.period != t - 1:
        raise ProtocolError(f"环境已完成 {env.period} 个周期，无法执行周期 {t}")
    if env.pending_orders:
        raise ProtocolError(f"周期 {t} 已有缓存的订单: {env.pending_orders}")

    spec = env.spec
    actions: Dict[int, int] = {}
    contexts: List[DecisionContext] = []
    made: List[Decision] = []
    for m in range(spec.num_stages):
        obs = env.observe(m)
        cases = tuple(stores[m].retrieve(obs.vector(), memory.k, memory.tau)) if memory.enabled else ()
        ctx = DecisionContext(
            observation=obs,
            period=t,
            stage=m,
            num_stages=spec.num_stages,
            similar_cases=cases,
            downstream_order=actions[m - 1] if m > 0 else demand_at(spec.demand, t, spec.horizon),
            demand_description=demand_description,
            prod_capacity=spec.supplier_capacity(m),
        )
        prompt = build_prompt(bundle, ctx)
        system_prompt = build_system_prompt(bundle, ctx)
        decision = backend.decide(prompt, ctx, system_prompt)
        if on_decision is not None:
            on_decision(ctx, decision)
        if transcript is not None:
            transcript.write(ctx, system_prompt, prompt, decision)
        env.submit_order(m, decision.order)
        actions[m] = decision.order
        contexts.append(ctx)
        made.append(decision)

    outcome = env.advance_period()

    for ctx, decision in zip(contexts, made):
        m = ctx.stage
        state_vec = ctx.observation.vector()
        if memory.enabled:
            stores[m].insert(MemoryRecord(stage=m, state_vec=state_vec, action=decision.order,
                                          reward=outcome.rewards[m], episode=episode, period=t,
                                          source=RecordSource.LIVE))
        if decisions is not None:
            decisions.append(DecisionLog(period=t, stage=m, state_vec=state_vec, decision=decision,
                                         reward=outcome.rewards[m], similar_cases=ctx.similar_cases))
    return actions


def run_episode(spec: ScenarioSpec, backend: DecisionBackend, bundle: PromptBundle,
                memory: MemoryConfig = MemoryConfig(),
                stores: Optional[Dict[int, MemoryStore]] = None,
                episode: int = 0,
                transcript_path: Optional[str] = None,
                on_decision: Optional[DecisionHook] = None) -> EpisodeResult:
    """运行一个完整回合

    启用记忆且未给定记忆库时为每个阶段新建空记忆库；给定记忆库时在其上检索与写入（可跨回合共享）。
    配置错误在第一次决策之前抛出。
    """
    if memory.k < 0 or memory.tau < 0:
        raise ConfigurationError(f"K 与 tau 必须非负: K={memory.k}, tau={memory.tau}")
    env = reset(spec)
    if memory.enabled:
        if stores is None:
            stores = make_stores(spec)
        for stage in spec.stages:
            store = stores.get(stage.stage_index)
            if store is None or store.dim != 4 + 2 * stage.lead_time:
                raise ConfigurationError(f"阶段 {stage.stage_index} 缺少维度匹配的记忆库")
    demand_description = describe_demand(bundle, spec.demand, spec.horizon)

    decisions: List[DecisionLog] = []
    transcript = TranscriptWriter(transcript_path, episode) if transcript_path else None
    try:
        for t in range(1, spec.horizon + 1):
            run_round(env, stores, backend, bundle, t, memory=memory, demand_description=demand_description,
                      episode=episode, transcript=transcript, decisions=decisions, on_decision=on_decision)
    finally:
        if transcript is not None:
            transcript.close()

    total = env.total_reward()
    fallback_count = sum(1 for log in decisions if log.decision.fallback)
    if fallback_count:
        logger.warning("回合 %d 中有 %d 次降级决策", episode, fallback_count)
    logger.info("回合 %d（%s，%s）总收益 %s", episode, spec.name, backend.name, total)
    return EpisodeResult(
        episode=episode,
        state=env,
        total_reward=total,
        stage_rewards=env.stage_rewards(),
        fallback_count=fallback_count,
        retrieval_count=len(decisions) if memory.enabled else 0,
        retrieved_cases=sum(len(log.similar_cases) for log in decisions),
        decisions=tuple(decisions),
    )

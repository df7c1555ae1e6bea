"""
生成离线记忆日志：用脚本策略（或最优订单矩阵）完整仿真一个回合，按记忆日志格式写出每个阶段每个周期的记录
"""

import logging
from typing import Callable, Union

from invbench.agents import PromptBundle, ScriptedBackend, run_episode
from invbench.constants import RecordSource
from invbench.memory import write_records
from invbench.objects import MemoryRecord, Observation, OrderSchedule, ScenarioSpec
from invbench.policies import schedule_policy

__all__ = ["record_rollout_log"]

logger = logging.getLogger(__name__)


def record_rollout_log(spec: ScenarioSpec, policy: Union[Callable[[Observation], int], OrderSchedule], path,
                       episode: int = 0) -> int:
    """仿真并写出记忆日志，返回记录数（M × T）"""
    if isinstance(policy, OrderSchedule):
        policy = schedule_policy(policy)
    result = run_episode(spec, ScriptedBackend(policy), PromptBundle.load(), episode=episode)
    records = [MemoryRecord(stage=log.stage, state_vec=log.state_vec, action=log.decision.order, reward=log.reward,
                            episode=episode, period=log.period, source=RecordSource.RL_LOG)
               for log in result.decisions]
    count = write_records(records, path)
    logger.info("场景 %s 的离线记忆日志已写入 %s（%d 条记录，总收益 %s）", spec.name, path, count, result.total_reward)
    return count

"""
回合结果与实验报告类
"""

import dataclasses
from typing import Any, Dict, Optional, Tuple

from invbench.objects.decision import DecisionLog
from invbench.objects.scenario import Money

__all__ = ["EpisodeResult", "MetricsReport"]


@dataclasses.dataclass(slots=True, frozen=True, eq=False)
class EpisodeResult:
    """单个回合的结果"""

    # 回合编号
    episode: int = dataclasses.field(kw_only=True)

    # 回合结束时的环境状态（完整轨迹）
    state: Any = dataclasses.field(kw_only=True)

    # 总收益
    total_reward: Money = dataclasses.field(kw_only=True)

    # 各阶段总收益
    stage_rewards: Tuple[Money, ...] = dataclasses.field(kw_only=True)

    # 降级决策次数
    fallback_count: int = dataclasses.field(kw_only=True, default=0)

    # 检索次数
    retrieval_count: int = dataclasses.field(kw_only=True, default=0)

    # 检索到的相似案例总数
    retrieved_cases: int = dataclasses.field(kw_only=True, default=0)

    # 全部决策记录（按周期、阶段升序）
    decisions: Tuple[DecisionLog, ...] = dataclasses.field(kw_only=True, default=())


@dataclasses.dataclass(slots=True, frozen=True, eq=False)
class MetricsReport:
    """实验报告"""

    # 场景名称
    scenario: str = dataclasses.field(kw_only=True)

    # 智能体类型
    agent: str = dataclasses.field(kw_only=True)

    # 各回合总收益
    episode_rewards: Tuple[Money, ...] = dataclasses.field(kw_only=True)

    # 平均值
    mean: float = dataclasses.field(kw_only=True)

    # 标准差（总体标准差）
    std: float = dataclasses.field(kw_only=True)

    # 最优值 Opt
    opt: Optional[Money] = dataclasses.field(kw_only=True, default=None)

    # 相对最优差距 Δ（百分比，两位小数）
    gap: Optional[float] = dataclasses.field(kw_only=True, default=None)

    # 已发表的参考差距（仅启发式基线有）
    reference_gap: Optional[float] = dataclasses.field(kw_only=True, default=None)

    # 降级决策总次数
    fallback_count: int = dataclasses.field(kw_only=True, default=0)

    # 逐周期序列：inventory、backlog、orders、relative_reward -> DataFrame
    series: Dict[str, Any] = dataclasses.field(kw_only=True, default_factory=dict)

    @property
    def reference_deviation(self) -> Optional[float]:
        """与参考差距的偏差（百分点）"""
        if self.reference_gap is None or self.gap is None:
            return None
        return round(self.gap - self.reference_gap, 2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "agent": self.agent,
            "episode_rewards": list(self.episode_rewards),
            "mean": self.mean,
            "std": self.std,
            "opt": self.opt,
            "gap": self.gap,
            "reference_gap": self.reference_gap,
            "reference_deviation": self.reference_deviation,
            "fallback_count": self.fallback_count,
        }

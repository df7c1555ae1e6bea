"""
阶段观测与周期推进结果类
"""

import dataclasses
from typing import Tuple

from invbench.objects.scenario import Money

__all__ = ["Observation", "StepOutcome"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class Observation:
    """阶段 m 在周期 t 决策前看到的状态 s_{m,t}（仅包含周期 t-1 及之前的量）"""

    # 阶段下标
    stage: int = dataclasses.field(kw_only=True)

    # 当前待决策的周期 t
    period: int = dataclasses.field(kw_only=True)

    # 库存 I_{m,t-1}
    inventory: int = dataclasses.field(kw_only=True)

    # 欠下游的缺货量 B_{m,t-1}
    backlog: int = dataclasses.field(kw_only=True)

    # 上游欠本阶段的缺货量 B_{m+1,t-1}（最上游阶段恒为 0）
    upstream_backlog: int = dataclasses.field(kw_only=True)

    # 提前期 L_m
    lead_time: int = dataclasses.field(kw_only=True)

    # 最近 L_m 个周期的销售量 [S_{m,t-L_m}, ..., S_{m,t-1}]（由旧到新）
    sales_history: Tuple[int, ...] = dataclasses.field(kw_only=True)

    # 在途补货 [R_{m,t-L_m}, ..., R_{m,t-1}]，第 1 个元素在本周期到达
    deliveries: Tuple[int, ...] = dataclasses.field(kw_only=True)

    # 全部历史销售量 [S_{m,1}, ..., S_{m,t-1}]，不属于状态向量，供跟踪需求策略使用
    sales_lookback: Tuple[int, ...] = dataclasses.field(kw_only=True, default=())

    def vector(self) -> Tuple[int, ...]:
        """展开为维度 4 + 2L_m 的数值状态向量"""
        return ((self.inventory, self.backlog, self.upstream_backlog, self.lead_time)
                + tuple(self.sales_history) + tuple(self.deliveries))


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class StepOutcome:
    """推进一个周期的结果"""

    # 各阶段本周期收益 [P_{0,t}, ..., P_{M-1,t}]
    rewards: Tuple[Money, ...] = dataclasses.field(kw_only=True)

    # 各阶段下一周期的观测
    observations: Tuple[Observation, ...] = dataclasses.field(kw_only=True)

    # 是否已到达最后一个周期
    done: bool = dataclasses.field(kw_only=True)

"""
记忆记录类
"""

import dataclasses
from typing import Tuple

from invbench.constants import RecordSource
from invbench.objects.scenario import Money

__all__ = ["MemoryRecord", "SimilarCase"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class MemoryRecord:
    """一条（状态向量，订单，收益）记忆"""

    # 所属阶段
    stage: int = dataclasses.field(kw_only=True)

    # 决策前的状态向量
    state_vec: Tuple[float, ...] = dataclasses.field(kw_only=True)

    # 订单数量
    action: int = dataclasses.field(kw_only=True)

    # 该周期实现的收益
    reward: Money = dataclasses.field(kw_only=True)

    # 来源回合编号
    episode: int = dataclasses.field(kw_only=True, default=0)

    # 来源周期
    period: int = dataclasses.field(kw_only=True, default=0)

    # 来源
    source: RecordSource = dataclasses.field(kw_only=True, default=RecordSource.LIVE)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class SimilarCase:
    """检索到的相似案例"""

    # 记忆记录
    record: MemoryRecord = dataclasses.field(kw_only=True)

    # 与查询向量的欧氏距离
    distance: float = dataclasses.field(kw_only=True)

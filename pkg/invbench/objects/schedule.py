"""
订单矩阵与求解结果类
"""

import dataclasses
from typing import Optional, Sequence, Tuple

from invbench.constants import ProofStatus
from invbench.objects.scenario import Money

__all__ = ["OrderSchedule", "SolveResult"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class OrderSchedule:
    """M x T 的整数订单矩阵，orders[m][t-1] 为 O_{m,t}"""

    # 订单矩阵
    orders: Tuple[Tuple[int, ...], ...] = dataclasses.field(kw_only=True)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "OrderSchedule":
        return cls(orders=tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def zeros(cls, num_stages: int, horizon: int) -> "OrderSchedule":
        return cls(orders=tuple((0,) * horizon for _ in range(num_stages)))

    @property
    def num_stages(self) -> int:
        return len(self.orders)

    @property
    def horizon(self) -> int:
        return len(self.orders[0]) if self.orders else 0

    def at(self, m: int, t: int) -> int:
        """阶段 m 在周期 t（从 1 开始）的订单"""
        return self.orders[m][t - 1]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class SolveResult:
    """最优求解结果"""

    # 目标值（等于订单矩阵的仿真总收益）
    objective: Money = dataclasses.field(kw_only=True)

    # 订单矩阵
    schedule: OrderSchedule = dataclasses.field(kw_only=True)

    # 搜索节点数
    node_count: int = dataclasses.field(kw_only=True, default=0)

    # 证明状态
    status: ProofStatus = dataclasses.field(kw_only=True, default=ProofStatus.OPTIMAL)

    # 剩余上界（仅 BOUND_ONLY 时有意义）
    upper_bound: Optional[Money] = dataclasses.field(kw_only=True, default=None)

    @property
    def is_optimal(self) -> bool:
        return self.status == ProofStatus.OPTIMAL

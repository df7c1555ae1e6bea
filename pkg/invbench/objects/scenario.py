"""
供应链场景参数类
"""

import dataclasses
from typing import Optional, Tuple, Union

from invbench.constants import DemandKind

__all__ = ["Money", "StageParams", "DemandModel", "ScenarioSpec"]

# 金额类型：价格、成本、收益均为非负有理数（实验场景中均为整数，整数运算精确）
Money = Union[int, float]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class StageParams:
    """单个阶段（层级）的参数，阶段 0 为零售商"""

    # 阶段下标，取值范围为 [0, M)
    stage_index: int = dataclasses.field(kw_only=True)

    # 提前期 L_m（周期数，不小于 1）
    lead_time: int = dataclasses.field(kw_only=True)

    # 产能 c_m（每周期最大销售量）
    capacity: int = dataclasses.field(kw_only=True)

    # 初始库存 I_{m,0}
    init_inventory: int = dataclasses.field(kw_only=True)

    # 销售单价 p_m
    sale_price: Money = dataclasses.field(kw_only=True, default=0)

    # 订货单价 r_m
    order_cost: Money = dataclasses.field(kw_only=True, default=0)

    # 每周期单位缺货成本 k_m
    backlog_cost: Money = dataclasses.field(kw_only=True, default=0)

    # 每周期单位持有成本 h_m
    holding_cost: Money = dataclasses.field(kw_only=True, default=0)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class DemandModel:
    """确定性的顾客需求模型"""

    # 需求模式
    kind: DemandKind = dataclasses.field(kw_only=True)

    # 恒定需求取值（仅 CONSTANT 使用）
    value: Optional[int] = dataclasses.field(kw_only=True, default=None)

    # 逐周期需求序列，第 1 个元素为周期 1 的需求（仅 EXPLICIT 使用）
    values: Optional[Tuple[int, ...]] = dataclasses.field(kw_only=True, default=None)

    @classmethod
    def constant(cls, value: int) -> "DemandModel":
        return cls(kind=DemandKind.CONSTANT, value=value)

    @classmethod
    def increasing(cls) -> "DemandModel":
        return cls(kind=DemandKind.INCREASING)

    @classmethod
    def decreasing(cls) -> "DemandModel":
        return cls(kind=DemandKind.DECREASING)

    @classmethod
    def explicit(cls, values) -> "DemandModel":
        return cls(kind=DemandKind.EXPLICIT, values=tuple(values))


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class ScenarioSpec:
    """供应链实例的完整参数（构造时不做校验，在 reset 时校验）"""

    # 场景名称
    name: str = dataclasses.field(kw_only=True)

    # 按阶段下标排列的阶段参数（阶段 0 为零售商，阶段 M-1 为最上游制造商）
    stages: Tuple[StageParams, ...] = dataclasses.field(kw_only=True)

    # 周期数 T
    horizon: int = dataclasses.field(kw_only=True)

    # 顾客需求
    demand: DemandModel = dataclasses.field(kw_only=True)

    @property
    def num_stages(self) -> int:
        return len(self.stages)

    @property
    def max_lead_time(self) -> int:
        return max((stage.lead_time for stage in self.stages), default=0)

    def supplier_capacity(self, m: int) -> Optional[int]:
        """阶段 m 的上游供应商产能 c_{m+1}；最上游阶段从原材料供应商无限供货，返回 None"""
        if m + 1 < len(self.stages):
            return self.stages[m + 1].capacity
        return None

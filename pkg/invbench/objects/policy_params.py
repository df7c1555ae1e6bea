"""
基线策略参数类
"""

import dataclasses

from invbench.constants import CapRule
from invbench.objects.scenario import DemandModel

__all__ = ["ForecastModel", "SafetyStockParams"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class ForecastModel:
    """需求预测模型（确定性需求下直接使用已知的未来需求）"""

    # 顾客需求
    demand: DemandModel = dataclasses.field(kw_only=True)

    # 周期数 T
    horizon: int = dataclasses.field(kw_only=True)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class SafetyStockParams:
    """安全库存策略参数"""

    # 安全系数 z（不小于 0）
    z: float = dataclasses.field(kw_only=True, default=0.0)

    # 订单上限规则
    cap_rule: CapRule = dataclasses.field(kw_only=True, default=CapRule.SUPPLIER)

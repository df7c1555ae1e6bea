"""
安全库存策略
"""

import math
from fractions import Fraction
from typing import Optional

from invbench.constants import CapRule
from invbench.objects import ForecastModel, Observation, SafetyStockParams, StageParams
from invbench.policies.forecast import forecast as forecast_demand
from invbench.policies.rounding import round_half_up

__all__ = ["safety_stock_order", "inventory_position", "order_cap"]


def inventory_position(obs: Observation) -> int:
    """库存位置 Ĩ = 库存 + 在途补货 - 缺货（可以为负数）"""
    return obs.inventory + sum(obs.deliveries) - obs.backlog


def order_cap(params: StageParams, ss: SafetyStockParams, supplier_capacity: Optional[int]) -> Optional[int]:
    """按上限规则给出订单上限，None 表示不限制"""
    if ss.cap_rule == CapRule.SUPPLIER:
        return supplier_capacity
    if ss.cap_rule == CapRule.OWN:
        return params.capacity
    return None


def safety_stock_order(obs: Observation, params: StageParams, forecast: ForecastModel, ss: SafetyStockParams,
                       supplier_capacity: Optional[int] = None) -> int:
    """按目标库存位置与当前库存位置之差订货

    目标 C̃ = (L_m + 1)·μ̂ + z·σ̂·√(L_m + 1)，订货量为 round(C̃ - Ĩ) 截断到 [0, cap]。

    Parameters
    ----------
    obs : Observation
        阶段观测
    params : StageParams
        阶段参数
    forecast : ForecastModel
        需求预测模型
    ss : SafetyStockParams
        安全库存参数
    supplier_capacity : Optional[int], default = None
        上游供应商产能 c_{m+1}；最上游阶段为 None

    Returns
    -------
    int
        非负整数订货量
    """
    mu_hat, sigma_hat = forecast_demand(forecast, obs.period, obs.lead_time)
    target = (obs.lead_time + 1) * Fraction(mu_hat)
    if ss.z and sigma_hat:
        target += Fraction(ss.z * float(sigma_hat) * math.sqrt(obs.lead_time + 1))
    order = max(0, round_half_up(target - inventory_position(obs)))
    cap = order_cap(params, ss, supplier_capacity)
    if cap is not None:
        order = min(order, cap)
    return order

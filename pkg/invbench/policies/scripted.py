"""
把基线策略包装为“观测 -> 订单”的可调用对象
"""

from typing import Callable, Optional

from invbench.constants import AgentKind, CapRule
from invbench.exceptions import ConfigurationError
from invbench.objects import ForecastModel, Observation, OrderSchedule, SafetyStockParams, ScenarioSpec
from invbench.policies.base_stock import base_stock_order
from invbench.policies.safety_stock import safety_stock_order
from invbench.policies.tracking_demand import tracking_demand_order

__all__ = ["Policy", "make_policy", "schedule_policy"]


class Policy:
    """有名称的订货策略"""

    def __init__(self, name: str, fn: Callable[[Observation], int]):
        self.name = name
        self._fn = fn

    def __call__(self, obs: Observation) -> int:
        return self._fn(obs)

    def __repr__(self) -> str:
        return f"Policy({self.name})"


def schedule_policy(schedule: OrderSchedule, name: str = "optimal-replay") -> Policy:
    """回放给定订单矩阵"""
    return Policy(name, lambda obs: schedule.at(obs.stage, obs.period))


def make_policy(kind: str, spec: ScenarioSpec, z: float = 0.0, cap_rule: CapRule = CapRule.SUPPLIER,
                l_max: Optional[int] = None, schedule: Optional[OrderSchedule] = None) -> Policy:
    """按名称构造场景 spec 上的基线策略

    Parameters
    ----------
    kind : str
        策略名称：base-stock、tracking-demand、safety-stock、optimal-replay
    spec : ScenarioSpec
        场景参数
    z : float, default = 0.0
        安全库存策略的安全系数
    cap_rule : CapRule, default = CapRule.SUPPLIER
        安全库存策略的订单上限规则
    l_max : Optional[int], default = None
        跟踪需求策略的窗口长度，默认为所有阶段提前期的最大值
    schedule : Optional[OrderSchedule], default = None
        optimal-replay 回放的订单矩阵
    """
    stages = spec.stages
    if kind == AgentKind.BASE_STOCK.value:
        return Policy(kind, lambda obs: base_stock_order(obs, stages[obs.stage]))
    if kind == AgentKind.TRACKING_DEMAND.value:
        window = spec.max_lead_time if l_max is None else l_max
        if window <= 0:
            raise ConfigurationError(f"L_max 必须为正整数: {window}")
        return Policy(kind, lambda obs: tracking_demand_order(obs, stages[obs.stage], window))
    if kind == AgentKind.SAFETY_STOCK.value:
        if z < 0:
            raise ConfigurationError(f"安全系数 z 必须非负: {z}")
        model = ForecastModel(demand=spec.demand, horizon=spec.horizon)
        params = SafetyStockParams(z=z, cap_rule=cap_rule)
        return Policy(kind, lambda obs: safety_stock_order(obs, stages[obs.stage], model, params,
                                                           spec.supplier_capacity(obs.stage)))
    if kind == AgentKind.OPTIMAL_REPLAY.value:
        if schedule is None:
            raise ConfigurationError("optimal-replay 需要给定订单矩阵")
        return schedule_policy(schedule, kind)
    raise ConfigurationError(f"未知的策略: {kind}")

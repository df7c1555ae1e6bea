"""
串行多级供应链的确定性离散时间仿真

每个周期分两阶段：各阶段依次提交订单（仅缓存），然后 advance_period 一次性按以下顺序结算：
到货、自上而下计算补货发运、销售、缺货、库存、收益。第 m 阶段在周期 t 的到货为 R_{m,t-L_m}。
"""

import logging
import numbers
from typing import Dict, List, Tuple

from invbench.constants import DemandKind
from invbench.env.demand import demand_at
from invbench.exceptions import ConfigurationError, DomainError, ProtocolError
from invbench.objects import Money, Observation, ScenarioSpec, StepOutcome

__all__ = ["EnvState", "check_scenario", "reset", "submit_order", "advance_period", "observe", "total_reward"]

logger = logging.getLogger(__name__)


def _is_count(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def check_scenario(spec: ScenarioSpec) -> None:
    """校验场景参数，不合法时抛出 ConfigurationError"""
    if len(spec.stages) < 1:
        raise ConfigurationError("场景至少需要 1 个阶段")
    if not _is_count(spec.horizon) or spec.horizon < 1:
        raise ConfigurationError(f"周期数必须是正整数: {spec.horizon!r}")
    for m, stage in enumerate(spec.stages):
        if stage.stage_index != m:
            raise ConfigurationError(f"阶段下标不连续：第 {m} 个阶段的下标为 {stage.stage_index}")
        if not _is_count(stage.lead_time) or stage.lead_time < 1:
            raise ConfigurationError(f"阶段 {m} 的提前期必须是正整数: {stage.lead_time!r}")
        for name in ("capacity", "init_inventory"):
            value = getattr(stage, name)
            if not _is_count(value):
                raise ConfigurationError(f"阶段 {m} 的 {name} 必须是非负整数: {value!r}")
        for name in ("sale_price", "order_cost", "backlog_cost", "holding_cost"):
            value = getattr(stage, name)
            if not isinstance(value, numbers.Real) or isinstance(value, bool) or value < 0:
                raise ConfigurationError(f"阶段 {m} 的 {name} 必须是非负数: {value!r}")
    demand = spec.demand
    if demand.kind == DemandKind.CONSTANT and not _is_count(demand.value):
        raise ConfigurationError(f"恒定需求必须是非负整数: {demand.value!r}")
    if demand.kind == DemandKind.EXPLICIT:
        if demand.values is None or len(demand.values) < spec.horizon:
            raise ConfigurationError(f"需求序列长度不足 {spec.horizon} 个周期")
        bad = [v for v in demand.values if not _is_count(v)]
        if bad:
            raise ConfigurationError(f"需求序列中存在非负整数以外的取值: {bad!r}")


class EnvState:
    """
    仿真状态：记录每个阶段在每个已完成周期的 I、B、S、R、O、P 以及顾客需求 D。

    各序列下标即周期 τ，下标 0 为回合开始前（τ <= 0 的历史量均为 0）。实例只能由一个调用方顺序修改。
    """

    def __init__(self, spec: ScenarioSpec):
        check_scenario(spec)
        self.spec = spec
        self.num_stages = spec.num_stages
        self.horizon = spec.horizon
        self.period = 0  # 已完成的周期数

        stages = spec.stages
        self.inventory: List[List[int]] = [[stage.init_inventory] for stage in stages]
        self.backlog: List[List[int]] = [[0] for _ in stages]
        self.sales: List[List[int]] = [[0] for _ in stages]
        self.shipments: List[List[int]] = [[0] for _ in stages]
        self.orders: List[List[int]] = [[0] for _ in stages]
        self.profits: List[List[Money]] = [[0] for _ in stages]
        self.demand: List[int] = [0]

        self._pending: Dict[int, int] = {}  # 本周期已提交的订单

    # ------------------------------ 两阶段接口 ------------------------------

    def submit_order(self, m: int, order: int) -> None:
        """缓存阶段 m 在下一个周期的订单，不执行任何动态"""
        self._check_not_done()
        self._check_stage(m)
        if isinstance(order, bool) or not isinstance(order, numbers.Integral) or order < 0:
            raise DomainError(f"订单必须是非负整数: {order!r}")
        if m in self._pending:
            raise ProtocolError(f"阶段 {m} 在周期 {self.period + 1} 已经提交过订单")
        self._pending[m] = int(order)

    def advance_period(self) -> StepOutcome:
        """所有阶段均已提交订单后结算一个周期"""
        self._check_not_done()
        if len(self._pending) != self.num_stages:
            missing = [m for m in range(self.num_stages) if m not in self._pending]
            raise ProtocolError(f"周期 {self.period + 1} 仍有阶段未提交订单: {missing}")

        orders = [self._pending[m] for m in range(self.num_stages)]
        t = self.period + 1
        demand = demand_at(self.spec.demand, t, self.horizon)
        stages = self.spec.stages
        top = self.num_stages - 1

        # 到货
        avail = [self.available(m) for m in range(self.num_stages)]

        # 自上而下计算补货发运
        shipments = [0] * self.num_stages
        for m in range(top, -1, -1):
            shipments[m] = self.preview_shipment(m, orders[m])

        # 销售
        sales = [0] * self.num_stages
        sales[0] = min(self.backlog[0][t - 1] + demand, stages[0].capacity, avail[0])
        for m in range(1, self.num_stages):
            sales[m] = shipments[m - 1]

        # 缺货
        backlogs = [0] * self.num_stages
        backlogs[0] = self.backlog[0][t - 1] + demand - sales[0]
        for m in range(1, self.num_stages):
            backlogs[m] = self.backlog[m][t - 1] + orders[m - 1] - sales[m]

        # 库存与收益
        rewards = []
        for m, stage in enumerate(stages):
            inventory = avail[m] - sales[m]
            profit = (stage.sale_price * sales[m] - stage.order_cost * shipments[m]
                      - stage.backlog_cost * backlogs[m] - stage.holding_cost * inventory)
            self.inventory[m].append(inventory)
            self.backlog[m].append(backlogs[m])
            self.sales[m].append(sales[m])
            self.shipments[m].append(shipments[m])
            self.orders[m].append(orders[m])
            self.profits[m].append(profit)
            rewards.append(profit)
        self.demand.append(demand)

        self.period = t
        self._pending = {}
        logger.debug("周期 %d: D=%d O=%s R=%s S=%s B=%s I=%s P=%s", t, demand, orders, shipments, sales,
                     backlogs, [self.inventory[m][t] for m in range(self.num_stages)], rewards)

        return StepOutcome(rewards=tuple(rewards),
                           observations=tuple(self.observe(m) for m in range(self.num_stages)),
                           done=self.period == self.horizon)

    def observe(self, m: int) -> Observation:
        """阶段 m 在下一个待决策周期的观测"""
        self._check_stage(m)
        t = self.period + 1
        lead_time = self.spec.stages[m].lead_time
        window = range(t - lead_time, t)
        upstream = self.backlog[m + 1][t - 1] if m + 1 < self.num_stages else 0
        return Observation(
            stage=m,
            period=t,
            inventory=self.inventory[m][t - 1],
            backlog=self.backlog[m][t - 1],
            upstream_backlog=upstream,
            lead_time=lead_time,
            sales_history=tuple(self._history(self.sales[m], tau) for tau in window),
            deliveries=tuple(self._history(self.shipments[m], tau) for tau in window),
            sales_lookback=tuple(self.sales[m][1:t]),
        )

    def total_reward(self) -> Money:
        """回合总收益 Σ_m Σ_t P_{m,t}（仅在回合结束后可用）"""
        if self.period != self.horizon:
            raise ProtocolError(f"回合尚未结束：当前已完成 {self.period}/{self.horizon} 个周期")
        return self.realized_reward()

    # ------------------------------ 辅助接口 ------------------------------

    def realized_reward(self) -> Money:
        """已完成周期的累计收益"""
        return sum(sum(profits[1:]) for profits in self.profits)

    def stage_rewards(self) -> Tuple[Money, ...]:
        return tuple(sum(profits[1:]) for profits in self.profits)

    def available(self, m: int) -> int:
        """阶段 m 在下一个周期的可用量：库存 I_{m,t-1} 加本周期到货 R_{m,t-L_m}"""
        t = self.period + 1
        return self.inventory[m][t - 1] + self._history(self.shipments[m], t - self.spec.stages[m].lead_time)

    def preview_shipment(self, m: int, order: int) -> int:
        """阶段 m 在下一个周期下单 order 时上游实际发运的补货量 R_{m,t}

        最上游阶段从原材料供应商足额到货；其余阶段受上游缺货加订单、上游产能、上游可用量三者的最小值限制。
        """
        if m == self.num_stages - 1:
            return order
        t = self.period + 1
        return min(self.backlog[m + 1][t - 1] + order, self.spec.stages[m + 1].capacity, self.available(m + 1))

    def copy(self) -> "EnvState":
        """复制当前状态（不包含已缓存的订单）"""
        other = EnvState.__new__(EnvState)
        other.spec = self.spec
        other.num_stages = self.num_stages
        other.horizon = self.horizon
        other.period = self.period
        other.inventory = [list(row) for row in self.inventory]
        other.backlog = [list(row) for row in self.backlog]
        other.sales = [list(row) for row in self.sales]
        other.shipments = [list(row) for row in self.shipments]
        other.orders = [list(row) for row in self.orders]
        other.profits = [list(row) for row in self.profits]
        other.demand = list(self.demand)
        other._pending = {}
        return other

    @property
    def done(self) -> bool:
        return self.period == self.horizon

    @property
    def pending_orders(self) -> Dict[int, int]:
        return dict(self._pending)

    @staticmethod
    def _history(series: List[int], tau: int) -> int:
        return series[tau] if tau >= 1 else 0

    def _check_stage(self, m: int) -> None:
        if not 0 <= m < self.num_stages:
            raise DomainError(f"阶段 {m} 超出范围 [0, {self.num_stages})")

    def _check_not_done(self) -> None:
        if self.period >= self.horizon:
            raise ProtocolError("回合已经结束")


def reset(spec: ScenarioSpec) -> EnvState:
    """初始化回合：t = 0，库存为初始库存，缺货与历史量均为 0"""
    return EnvState(spec)


def submit_order(state: EnvState, m: int, order: int) -> None:
    state.submit_order(m, order)


def advance_period(state: EnvState) -> StepOutcome:
    return state.advance_period()


def observe(state: EnvState, m: int) -> Observation:
    return state.observe(m)


def total_reward(state: EnvState) -> Money:
    return state.total_reward()

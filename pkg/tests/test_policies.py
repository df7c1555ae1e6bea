from fractions import Fraction

import pytest

from invbench.constants import AgentKind, CapRule
from invbench.exceptions import ConfigurationError, DomainError
from invbench.objects import DemandModel, ForecastModel, Observation, OrderSchedule, SafetyStockParams, StageParams
from invbench.optimal import rollout_policy
from invbench.policies import (
    base_stock_order,
    forecast,
    inventory_position,
    make_policy,
    round_half_up,
    safety_stock_order,
    tracking_demand_order
)

STAGE = StageParams(stage_index=0, lead_time=2, capacity=20, init_inventory=12)


def _obs(inventory=12, backlog=0, deliveries=(0, 0), period=1, sales_lookback=()):
    return Observation(stage=0, period=period, inventory=inventory, backlog=backlog, upstream_backlog=0,
                       lead_time=len(deliveries), sales_history=(0,) * len(deliveries), deliveries=deliveries,
                       sales_lookback=sales_lookback)


@pytest.mark.parametrize("x, expected", [(2.5, 3), (2.49, 2), (Fraction(-1, 2), 0), (Fraction(-3, 2), -1), (7, 7)])
def test_round_half_up(x, expected):
    assert round_half_up(x) == expected


def test_base_stock_orders_up_to_capacity():
    assert base_stock_order(_obs(inventory=7), STAGE) == 13
    assert base_stock_order(_obs(inventory=25), STAGE) == 0


def test_tracking_demand():
    # 最近 2 个周期平均销售 3，目标 3 × 2 + 1 = 7
    assert tracking_demand_order(_obs(inventory=3, backlog=1, sales_lookback=(4, 4, 2)), STAGE, 2) == 4
    # 历史不足 L_max 个周期时按 0 补齐：平均 2.5，目标 6
    assert tracking_demand_order(_obs(inventory=3, backlog=1, sales_lookback=(5,)), STAGE, 2) == 3
    assert tracking_demand_order(_obs(inventory=30), STAGE, 2) == 0
    with pytest.raises(ConfigurationError):
        tracking_demand_order(_obs(), STAGE, 0)


def test_forecast_window_is_truncated_at_horizon():
    constant = ForecastModel(demand=DemandModel.constant(4), horizon=12)
    assert forecast(constant, 11, 2) == (Fraction(4), Fraction(0))
    increasing = ForecastModel(demand=DemandModel.increasing(), horizon=12)
    assert forecast(increasing, 1, 2)[0] == 3
    assert forecast(increasing, 3, 2)[0] == Fraction(11, 3)
    with pytest.raises(DomainError):
        forecast(constant, 13, 2)


def test_safety_stock_order():
    model = ForecastModel(demand=DemandModel.constant(4), horizon=12)
    ss = SafetyStockParams()
    assert safety_stock_order(_obs(), STAGE, model, ss, supplier_capacity=20) == 0

    obs = _obs(inventory=5, backlog=3, deliveries=(2, 1))
    assert inventory_position(obs) == 5
    assert safety_stock_order(obs, STAGE, model, ss, supplier_capacity=20) == 7
    assert safety_stock_order(obs, STAGE, model, ss, supplier_capacity=5) == 5
    assert safety_stock_order(obs, STAGE, model, SafetyStockParams(cap_rule=CapRule.NONE), supplier_capacity=5) == 7
    own = StageParams(stage_index=0, lead_time=2, capacity=6, init_inventory=0)
    assert safety_stock_order(obs, own, model, SafetyStockParams(cap_rule=CapRule.OWN), supplier_capacity=5) == 6


def test_inventory_position_may_be_negative():
    assert inventory_position(_obs(inventory=0, backlog=5, deliveries=(1, 1))) == -3


def test_make_policy_errors(const_uni):
    with pytest.raises(ConfigurationError):
        make_policy("unknown", const_uni)
    with pytest.raises(ConfigurationError):
        make_policy(AgentKind.OPTIMAL_REPLAY.value, const_uni)
    with pytest.raises(ConfigurationError):
        make_policy(AgentKind.SAFETY_STOCK.value, const_uni, z=-1)
    with pytest.raises(ConfigurationError):
        make_policy(AgentKind.TRACKING_DEMAND.value, const_uni, l_max=0)


def test_safety_stock_on_const_uni_reaches_optimum(const_uni):
    state = rollout_policy(const_uni, make_policy(AgentKind.SAFETY_STOCK.value, const_uni))
    assert state.total_reward() == -120
    assert state.inventory[0][:4] == [12, 8, 4, 0]


def test_schedule_replay(const_uni):
    schedule = OrderSchedule.from_rows([[1] * 12 for _ in range(4)])
    policy = make_policy(AgentKind.OPTIMAL_REPLAY.value, const_uni, schedule=schedule)
    state = rollout_policy(const_uni, policy)
    assert all(row[1:] == [1] * 12 for row in state.orders)


@pytest.mark.parametrize("kind", [AgentKind.BASE_STOCK.value, AgentKind.TRACKING_DEMAND.value])
def test_heuristics_produce_non_negative_integer_orders(const_uni, kind):
    state = rollout_policy(const_uni, make_policy(kind, const_uni))
    assert all(isinstance(v, int) and v >= 0 for row in state.orders for v in row)

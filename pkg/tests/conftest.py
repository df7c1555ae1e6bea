"""
测试用的场景与辅助函数
"""

from typing import Sequence

import pytest

from invbench.harness import scenario
from invbench.objects import DemandModel, ScenarioSpec, StageParams


def make_spec(lead_times: Sequence[int], capacities: Sequence[int], init_inventories: Sequence[int],
              demand: DemandModel, horizon: int, sale_prices=None, order_costs=None, backlog_costs=None,
              holding_costs=None, name: str = "test") -> ScenarioSpec:
    """按列构造场景，未给出的成本参数均为 0"""
    num_stages = len(lead_times)
    zeros = [0] * num_stages
    stages = tuple(StageParams(stage_index=m,
                               lead_time=lead_times[m],
                               capacity=capacities[m],
                               init_inventory=init_inventories[m],
                               sale_price=(sale_prices or zeros)[m],
                               order_cost=(order_costs or zeros)[m],
                               backlog_cost=(backlog_costs or zeros)[m],
                               holding_cost=(holding_costs or zeros)[m])
                   for m in range(num_stages))
    return ScenarioSpec(name=name, stages=stages, horizon=horizon, demand=demand)


@pytest.fixture
def const_uni() -> ScenarioSpec:
    return scenario("const-uni")


@pytest.fixture
def two_stage() -> ScenarioSpec:
    """上游产能为 2 的两阶段链，用于检查发运受限的情形"""
    return make_spec(lead_times=[1, 1], capacities=[10, 2], init_inventories=[0, 5],
                     demand=DemandModel.constant(4), horizon=2,
                     sale_prices=[3, 2], order_costs=[1, 1], backlog_costs=[1, 1], holding_costs=[1, 1])

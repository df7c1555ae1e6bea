import itertools
import random

import pytest

from invbench.constants import AgentKind, BoundKind, ProofStatus
from invbench.env import reset
from invbench.exceptions import DomainError, IngestionError
from invbench.harness import PUBLISHED_OPTIMAL, SCENARIO_NAMES, scenario
from invbench.objects import DemandModel, OrderSchedule
from invbench.optimal import (
    evaluate_schedule,
    lp_bound,
    optimistic_bound,
    read_schedule,
    rollout_policy,
    solve,
    write_schedule
)
from invbench.policies import make_policy
from tests.conftest import make_spec


def _small_instances(count, seed=11):
    rng = random.Random(seed)
    for i in range(count):
        yield make_spec(
            lead_times=[rng.randint(1, 2), rng.randint(1, 2)],
            capacities=[rng.randint(1, 4), rng.randint(1, 4)],
            init_inventories=[rng.randint(0, 4), rng.randint(0, 4)],
            demand=DemandModel.explicit([rng.randint(0, 3) for _ in range(3)]),
            horizon=3,
            sale_prices=[rng.randint(0, 9), rng.randint(0, 9)],
            order_costs=[rng.randint(0, 8), rng.randint(0, 8)],
            backlog_costs=[rng.randint(0, 2), rng.randint(0, 2)],
            holding_costs=[rng.randint(0, 2), rng.randint(0, 2)],
            name=f"small-{i}",
        )


def _exhaustive(spec, ceiling):
    """在 [0, ceiling] 内枚举全部订单的最优总收益（逐周期递归，与环境实现相互独立）"""
    stages = spec.stages
    num_stages, horizon = len(stages), spec.horizon
    demand = [spec.demand.values[t] for t in range(horizon)]
    choices = list(itertools.product(range(ceiling + 1), repeat=num_stages))

    def best_from(t, inventory, backlog, shipped):
        if t > horizon:
            return 0
        avail = [inventory[m] + (shipped[t - 1 - stages[m].lead_time][m] if t - stages[m].lead_time >= 1 else 0)
                 for m in range(num_stages)]
        best = None
        for orders in choices:
            ships = [min(backlog[m + 1] + orders[m], stages[m + 1].capacity, avail[m + 1])
                     for m in range(num_stages - 1)] + [orders[-1]]
            sales = [min(backlog[0] + demand[t - 1], stages[0].capacity, avail[0])] + ships[:-1]
            new_backlog = [backlog[0] + demand[t - 1] - sales[0]] + \
                          [backlog[m] + orders[m - 1] - sales[m] for m in range(1, num_stages)]
            new_inventory = [avail[m] - sales[m] for m in range(num_stages)]
            profit = sum(stages[m].sale_price * sales[m] - stages[m].order_cost * ships[m]
                         - stages[m].backlog_cost * new_backlog[m] - stages[m].holding_cost * new_inventory[m]
                         for m in range(num_stages))
            value = profit + best_from(t + 1, new_inventory, new_backlog, shipped + [ships])
            if best is None or value > best:
                best = value
        return best

    return best_from(1, [stage.init_inventory for stage in stages], [0] * num_stages, [])


@pytest.mark.parametrize("spec", list(_small_instances(4)), ids=lambda spec: spec.name)
def test_matches_exhaustive_search_under_ceiling(spec):
    expected = _exhaustive(spec, 3)
    for bound in (BoundKind.LP, BoundKind.OPTIMISTIC):
        result = solve(spec, bound=bound, order_ceiling=3)
        assert result.status == ProofStatus.OPTIMAL
        assert result.objective == expected
        assert evaluate_schedule(spec, result.schedule) == expected
        assert max(v for row in result.schedule.orders for v in row) <= 3


# 容量不超过 4、需求不超过 3 时，订单 7 已足够覆盖任何有用的订单
@pytest.mark.parametrize("spec", list(_small_instances(3, seed=5)), ids=lambda spec: spec.name)
def test_unbounded_search_matches_exhaustive_search(spec):
    result = solve(spec)
    assert result.status == ProofStatus.OPTIMAL
    assert result.objective == _exhaustive(spec, 7)
    assert evaluate_schedule(spec, result.schedule) == result.objective
    assert solve(spec, order_ceiling=3, workers=3).objective == expected
    assert solve(spec).objective >= expected


@pytest.mark.parametrize("spec", list(_small_instances(6, seed=5)), ids=lambda spec: spec.name)
def test_root_bounds_are_admissible(spec):
    optimum = solve(spec).objective
    root = reset(spec)
    assert optimistic_bound(root) >= optimum
    relaxed, hint = lp_bound(root)
    assert relaxed is not None and relaxed >= optimum - 1e-6
    assert sorted(hint) == [0, 1]


def test_solution_beats_heuristics():
    for spec in _small_instances(3, seed=23):
        optimum = solve(spec).objective
        for kind in (AgentKind.BASE_STOCK, AgentKind.TRACKING_DEMAND, AgentKind.SAFETY_STOCK):
            assert rollout_policy(spec, make_policy(kind.value, spec)).total_reward() <= optimum


def test_empty_horizon():
    spec = make_spec([1], [5], [0], DemandModel.constant(1), 0)
    result = solve(spec)
    assert (result.objective, result.status, result.node_count) == (0, ProofStatus.OPTIMAL, 0)
    assert result.schedule.orders == ((),)


def test_budget_exhausted_reports_bound():
    spec = scenario("dec-div")
    result = solve(spec, node_limit=5)
    assert result.objective == evaluate_schedule(spec, result.schedule)
    if result.status == ProofStatus.BOUND_ONLY:
        assert result.upper_bound >= result.objective
        assert result.node_count <= 6


def test_schedule_dimension_mismatch(const_uni):
    with pytest.raises(DomainError):
        evaluate_schedule(const_uni, OrderSchedule.zeros(3, 12))


def test_schedule_file(tmp_path):
    schedule = OrderSchedule.from_rows([[1, 2, 3], [0, 0, 4]])
    path = tmp_path / "schedule.txt"
    write_schedule(schedule, path)
    assert read_schedule(path) == schedule

    path.write_text("# comment\n1 2\n3 x\n", encoding="UTF-8")
    with pytest.raises(IngestionError) as info:
        read_schedule(path)
    assert info.value.bad_lines == (3,)


@pytest.mark.slow
@pytest.mark.parametrize("name", SCENARIO_NAMES)
def test_reproduces_published_optimum(name):
    result = solve(scenario(name))
    assert result.is_optimal
    assert result.objective == PUBLISHED_OPTIMAL[name]


@pytest.mark.slow
def test_matches_exhaustive_search_on_random_instances():
    for spec in _small_instances(100, seed=2024):
        assert solve(spec, order_ceiling=5).objective == _exhaustive(spec, 5), spec


@pytest.mark.slow
def test_unbounded_search_matches_exhaustive_search_on_random_instances():
    for spec in _small_instances(25, seed=7):
        assert solve(spec).objective == _exhaustive(spec, 7), spec

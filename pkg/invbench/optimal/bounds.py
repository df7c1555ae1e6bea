"""
分支定界的可采纳上界

两种上界都从节点状态（已完成 t-1 个周期，周期 t 的部分阶段已确定补货量）出发，给出任意可达完成方案总收益的上界：

- 乐观上界：已实现收益 + 剩余需求全部由零售商按售价卖出 + 正的中间毛利按满产能计算，不计任何成本；
- 线性规划上界：已实现收益 + 剩余周期的线性规划松弛。松弛中订单等于发运量，上游缺货只保留下界
  B_{m,t} >= B_{m,t-1} - R_{m-1,t}，因此任何可达完成方案都是松弛的可行解。
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from invbench.env import EnvState, demand_at
from invbench.objects import Money

__all__ = ["optimistic_bound", "lp_bound", "remaining_demand"]

logger = logging.getLogger(__name__)


def remaining_demand(state: EnvState) -> int:
    """周期 t..T 的需求总和"""
    spec = state.spec
    return sum(demand_at(spec.demand, tau, spec.horizon) for tau in range(state.period + 1, spec.horizon + 1))


def optimistic_bound(state: EnvState) -> Money:
    """乐观上界"""
    spec = state.spec
    stages = spec.stages
    n = spec.horizon - state.period
    retailer = stages[0]
    bound = state.realized_reward()
    bound += retailer.sale_price * min(state.backlog[0][state.period] + remaining_demand(state),
                                       retailer.capacity * n)
    for m in range(1, spec.num_stages):
        margin = stages[m].sale_price - stages[m - 1].order_cost
        if margin > 0:
            bound += margin * stages[m].capacity * n
    return bound


def lp_bound(state: EnvState, fixed: Optional[Dict[int, int]] = None) -> Tuple[Optional[float], Dict[int, float]]:
    """线性规划松弛上界

    Parameters
    ----------
    state : EnvState
        节点状态（周期起点）
    fixed : Optional[Dict[int, int]], default = None
        当前周期已确定的补货量 {阶段: R_{m,t}}

    Returns
    -------
    Tuple[Optional[float], Dict[int, float]]
        (上界, 当前周期各阶段补货量的松弛解)；求解失败时上界为 None
    """
    fixed = fixed or {}
    spec = state.spec
    stages = spec.stages
    num_stages = spec.num_stages
    t0 = state.period + 1
    n = spec.horizon - state.period
    if n <= 0:
        return float(state.realized_reward()), {}

    # 变量下标
    index: Dict[Tuple[str, int, int], int] = {}

    def add(name: str, m: int, k: int) -> None:
        index[(name, m, k)] = len(index)

    for k in range(n):
        for m in range(num_stages):
            add("R", m, k)
            add("I", m, k)
        add("S0", 0, k)
        add("B0", 0, k)
        for m in range(1, num_stages):
            add("Bu", m, k)
    size = len(index)

    cost = np.zeros(size)
    bounds: List[Tuple[Optional[float], Optional[float]]] = [(0, None)] * size
    eq_rows, eq_rhs, ub_rows, ub_rhs = [], [], [], []

    for k in range(n):
        tau = t0 + k
        demand = demand_at(spec.demand, tau, spec.horizon)

        # 目标函数（linprog 求最小值，取负）
        cost[index[("S0", 0, k)]] -= stages[0].sale_price
        cost[index[("B0", 0, k)]] += stages[0].backlog_cost
        for m in range(num_stages):
            cost[index[("R", m, k)]] += stages[m].order_cost
            cost[index[("I", m, k)]] += stages[m].holding_cost
            if m >= 1:
                cost[index[("R", m - 1, k)]] -= stages[m].sale_price
                cost[index[("Bu", m, k)]] += stages[m].backlog_cost

        # 变量取值范围
        bounds[index[("S0", 0, k)]] = (0, stages[0].capacity)
        for m in range(num_stages - 1):
            bounds[index[("R", m, k)]] = (0, stages[m + 1].capacity)
        if k == 0:
            for m, value in fixed.items():
                bounds[index[("R", m, 0)]] = (value, value)

        # 库存平衡：I_{m,τ} - I_{m,τ-1} - R_{m,τ-L_m} + S_{m,τ} = 0
        for m in range(num_stages):
            row = np.zeros(size)
            rhs = 0.0
            row[index[("I", m, k)]] = 1
            if k == 0:
                rhs += state.inventory[m][state.period]
            else:
                row[index[("I", m, k - 1)]] = -1
            source = tau - stages[m].lead_time
            if source >= t0:
                row[index[("R", m, source - t0)]] -= 1
            elif source >= 1:
                rhs += state.shipments[m][source]
            if m == 0:
                row[index[("S0", 0, k)]] += 1
            else:
                row[index[("R", m - 1, k)]] += 1
            eq_rows.append(row)
            eq_rhs.append(rhs)

        # 零售商缺货：B_{0,τ} - B_{0,τ-1} + S_{0,τ} = D_τ
        row = np.zeros(size)
        rhs = float(demand)
        row[index[("B0", 0, k)]] = 1
        row[index[("S0", 0, k)]] = 1
        if k == 0:
            rhs += state.backlog[0][state.period]
        else:
            row[index[("B0", 0, k - 1)]] = -1
        eq_rows.append(row)
        eq_rhs.append(rhs)

        # 上游缺货下界：B_{m,τ-1} - B_{m,τ} - R_{m-1,τ} <= 0
        for m in range(1, num_stages):
            row = np.zeros(size)
            rhs = 0.0
            row[index[("Bu", m, k)]] = -1
            row[index[("R", m - 1, k)]] = -1
            if k == 0:
                rhs -= state.backlog[m][state.period]
            else:
                row[index[("Bu", m, k - 1)]] = 1
            ub_rows.append(row)
            ub_rhs.append(rhs)

    result = linprog(cost,
                     A_ub=np.array(ub_rows) if ub_rows else None, b_ub=np.array(ub_rhs) if ub_rhs else None,
                     A_eq=np.array(eq_rows), b_eq=np.array(eq_rhs),
                     bounds=bounds, method="highs-ds")
    if result.status != 0:
        logger.warning("线性规划松弛求解失败（周期 %d）: %s", t0, result.message)
        return None, {}
    hint = {m: float(result.x[index[("R", m, 0)]]) for m in range(num_stages)}
    return float(state.realized_reward()) - float(result.fun), hint

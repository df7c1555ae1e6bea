"""
确定性需求下的集中式精确最优求解（分支定界）

按周期深度优先搜索，同一周期内自上而下逐个阶段确定订单。每个节点的上界取乐观上界与线性规划松弛上界中的较小值，
成本参数均为整数时上界向下取整。候选订单先尝试线性规划解给出的提示值，再从支配上限开始递减枚举。
当前最好解达到根节点上界时立即停止。
"""

import concurrent.futures
import logging
import math
import threading
import time
from typing import Dict, List, Optional, Tuple

from invbench.constants import AgentKind, BoundKind, ProofStatus
from invbench.env import EnvState, check_scenario, reset
from invbench.objects import Money, OrderSchedule, ScenarioSpec, SolveResult
from invbench.optimal.bounds import lp_bound, optimistic_bound, remaining_demand
from invbench.optimal.evaluate import rollout_policy, schedule_of
from invbench.policies import make_policy

__all__ = ["BranchAndBound", "solve"]

logger = logging.getLogger(__name__)

_EPS = 1e-6


class _SearchStopped(Exception):
    """搜索提前结束（已证明最优或预算耗尽）"""


class BranchAndBound:
    """
    分支定界求解器。

    order_ceiling 给定时，每个订单只在 [0, order_ceiling] 内枚举且不使用支配规则（用于与穷举结果对比）；
    否则阶段 m < M-1 的订单不超过 min(c_{m+1}, 上游可用量) - 上游缺货，最上游阶段的订单在中间毛利均不为正时
    不超过剩余需求加全部缺货，否则不超过 c_{M-1} 乘以剩余周期数。
    """

    def __init__(self, spec: ScenarioSpec, bound: BoundKind = BoundKind.LP, node_limit: Optional[int] = None,
                 time_limit: Optional[float] = None, order_ceiling: Optional[int] = None, workers: int = 1):
        self.spec = spec
        self.bound = bound
        self.node_limit = node_limit
        self.time_limit = time_limit
        self.order_ceiling = order_ceiling
        self.workers = max(1, workers)

        stages = spec.stages
        self._integral = all(isinstance(getattr(stage, name), int)
                             for stage in stages
                             for name in ("sale_price", "order_cost", "backlog_cost", "holding_cost"))
        self._positive_margin = any(stages[m].sale_price - stages[m - 1].order_cost > 0
                                    for m in range(1, spec.num_stages))

        self.node_count = 0
        self.best_value: Optional[Money] = None
        self.best_schedule: Optional[OrderSchedule] = None
        self.root_bound: Optional[float] = None
        self._started = 0.0
        self._exhausted = False
        self._stop = threading.Event()
        self._lock = threading.Lock()

    def solve(self) -> SolveResult:
        self._started = time.monotonic()
        root = reset(self.spec)
        self._seed_incumbent()

        self.root_bound, hint = self._bound(root, {})
        logger.info("场景 %s：根节点上界 %s，初始解 %s", self.spec.name, self.root_bound, self.best_value)

        if not self._proven():
            try:
                if self.workers > 1:
                    self._search_parallel(root, hint)
                else:
                    self._expand(root, {}, hint)
            except _SearchStopped:
                pass

        if self._exhausted and not self._proven():
            logger.warning("场景 %s：搜索预算耗尽（%d 个节点），当前最好解 %s，上界 %s",
                           self.spec.name, self.node_count, self.best_value, self.root_bound)
            return SolveResult(objective=self.best_value, schedule=self.best_schedule, node_count=self.node_count,
                               status=ProofStatus.BOUND_ONLY, upper_bound=self.root_bound)
        logger.info("场景 %s：最优值 %s（%d 个节点）", self.spec.name, self.best_value, self.node_count)
        return SolveResult(objective=self.best_value, schedule=self.best_schedule, node_count=self.node_count,
                           status=ProofStatus.OPTIMAL, upper_bound=self.best_value)

    # ------------------------------ 搜索 ------------------------------

    def _expand(self, state: EnvState, orders: Dict[int, int], hint: Dict[int, float]) -> None:
        """展开节点：state 为周期起点状态，orders 为当前周期已确定的订单（自上而下）"""
        self._tick()
        m = self.spec.num_stages - 1 - len(orders)
        for order in self._candidates(state, m, hint):
            self._visit(state, {**orders, m: order})

    def _visit(self, state: EnvState, orders: Dict[int, int]) -> None:
        if self._stop.is_set():
            raise _SearchStopped()
        if len(orders) == self.spec.num_stages:
            child = state.copy()
            for m in range(self.spec.num_stages):
                child.submit_order(m, orders[m])
            child.advance_period()
            if child.done:
                self._offer(child)
                return
            bound, hint = self._bound(child, {})
            if self._prunable(bound):
                return
            self._expand(child, {}, hint)
        else:
            fixed = {m: state.preview_shipment(m, order) for m, order in orders.items()}
            bound, hint = self._bound(state, fixed)
            if self._prunable(bound):
                return
            self._expand(state, orders, hint)

    def _search_parallel(self, root: EnvState, hint: Dict[int, float]) -> None:
        """把第一层（周期 1 最上游阶段的订单）的子树分配给多个线程，共享当前最好解"""
        top = self.spec.num_stages - 1
        candidates = self._candidates(root, top, hint)
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = [executor.submit(self._visit_subtree, root, {top: order}) for order in candidates]
            for future in concurrent.futures.as_completed(futures):
                future.result()

    def _visit_subtree(self, root: EnvState, orders: Dict[int, int]) -> None:
        try:
            self._visit(root, orders)
        except _SearchStopped:
            self._stop.set()

    def _candidates(self, state: EnvState, m: int, hint: Dict[int, float]) -> List[int]:
        """候选订单：提示值优先，其余从上限递减"""
        ceiling = self._ceiling(state, m)
        candidates = list(range(ceiling, -1, -1))
        if m in hint:
            target = max(0, int(round(hint[m])))
            if m < self.spec.num_stages - 1:
                target = max(0, target - state.backlog[m + 1][state.period])
            target = min(target, ceiling)
            candidates.remove(target)
            candidates.insert(0, target)
        return candidates

    def _ceiling(self, state: EnvState, m: int) -> int:
        if self.order_ceiling is not None:
            return self.order_ceiling
        spec = self.spec
        t_prev = state.period
        if m < spec.num_stages - 1:
            reachable = min(spec.stages[m + 1].capacity, state.available(m + 1))
            return max(0, reachable - state.backlog[m + 1][t_prev])
        if spec.num_stages == 1 or not self._positive_margin:
            return remaining_demand(state) + sum(state.backlog[j][t_prev] for j in range(spec.num_stages))
        n = spec.horizon - state.period
        return max(0, spec.stages[m].capacity * n - state.inventory[m][t_prev])

    # ------------------------------ 上界与当前最好解 ------------------------------

    def _bound(self, state: EnvState, fixed: Dict[int, int]) -> Tuple[float, Dict[int, float]]:
        bound = optimistic_bound(state)
        hint: Dict[int, float] = {}
        if self.bound == BoundKind.LP and not self._prunable(self._floor(bound)):
            relaxed, hint = lp_bound(state, fixed)
            if relaxed is not None:
                bound = min(bound, relaxed)
        return self._floor(bound), hint

    def _floor(self, bound) -> float:
        if self._integral:
            return math.floor(bound + _EPS)
        return bound

    def _prunable(self, bound) -> bool:
        best = self.best_value
        return best is not None and bound <= best + (0 if self._integral else _EPS)

    def _proven(self) -> bool:
        return (self.best_value is not None and self.root_bound is not None
                and self.best_value >= self.root_bound - (0 if self._integral else _EPS))

    def _offer(self, leaf: EnvState) -> None:
        value = leaf.total_reward()
        with self._lock:
            if self.best_value is None or value > self.best_value:
                self.best_value = value
                self.best_schedule = schedule_of(leaf)
                logger.debug("新的最好解 %s（第 %d 个节点）", value, self.node_count)
        if self._proven():
            raise _SearchStopped()

    def _seed_incumbent(self) -> None:
        """用全零订单与安全库存策略的仿真结果作为初始解"""
        seeds = [reset(self.spec)]
        for _ in range(self.spec.horizon):
            for m in range(self.spec.num_stages):
                seeds[0].submit_order(m, 0)
            seeds[0].advance_period()
        policy = make_policy(AgentKind.SAFETY_STOCK.value, self.spec)
        seeds.append(rollout_policy(self.spec, policy, order_ceiling=self.order_ceiling))
        for leaf in seeds:
            value = leaf.total_reward()
            if self.best_value is None or value > self.best_value:
                self.best_value = value
                self.best_schedule = schedule_of(leaf)

    def _tick(self) -> None:
        with self._lock:
            self.node_count += 1
            count = self.node_count
        if self.node_limit is not None and count > self.node_limit:
            self._exhausted = True
            raise _SearchStopped()
        if self.time_limit is not None and time.monotonic() - self._started > self.time_limit:
            self._exhausted = True
            raise _SearchStopped()


def solve(spec: ScenarioSpec, node_limit: Optional[int] = None, time_limit: Optional[float] = None,
          bound: BoundKind = BoundKind.LP, order_ceiling: Optional[int] = None, workers: int = 1) -> SolveResult:
    """求解场景的集中式最优订单矩阵

    Parameters
    ----------
    spec : ScenarioSpec
        场景参数（确定性需求）
    node_limit : Optional[int], default = None
        搜索节点数预算
    time_limit : Optional[float], default = None
        搜索时间预算（秒）
    bound : BoundKind, default = BoundKind.LP
        上界类型
    order_ceiling : Optional[int], default = None
        订单上限；给定时在 [0, order_ceiling] 内完整枚举
    workers : int, default = 1
        并行线程数；为 1 时节点顺序确定

    Returns
    -------
    SolveResult
        预算内完成搜索时为已证明的最优解，否则为当前最好解及根节点上界
    """
    if spec.horizon == 0:
        return SolveResult(objective=0, schedule=OrderSchedule(orders=tuple(() for _ in spec.stages)),
                           node_count=0, status=ProofStatus.OPTIMAL, upper_bound=0)
    check_scenario(spec)
    return BranchAndBound(spec, bound=bound, node_limit=node_limit, time_limit=time_limit,
                          order_ceiling=order_ceiling, workers=workers).solve()

"""
订单矩阵的证书评估：通过环境仿真得到精确总收益
"""

from invbench.env import EnvState, reset
from invbench.exceptions import DomainError
from invbench.objects import Money, OrderSchedule, ScenarioSpec

__all__ = ["rollout_schedule", "evaluate_schedule", "rollout_policy", "schedule_of"]


def rollout_schedule(spec: ScenarioSpec, sched: OrderSchedule) -> EnvState:
    """按订单矩阵完整仿真一个回合"""
    if sched.num_stages != spec.num_stages or any(len(row) != spec.horizon for row in sched.orders):
        raise DomainError(f"订单矩阵维度应为 {spec.num_stages} x {spec.horizon}")
    state = reset(spec)
    for t in range(1, spec.horizon + 1):
        for m in range(spec.num_stages):
            state.submit_order(m, sched.at(m, t))
        state.advance_period()
    return state


def evaluate_schedule(spec: ScenarioSpec, sched: OrderSchedule) -> Money:
    """订单矩阵的总收益 Σ_m Σ_t P_{m,t}"""
    return rollout_schedule(spec, sched).total_reward()


def rollout_policy(spec: ScenarioSpec, policy, order_ceiling: int = None) -> EnvState:
    """直接在环境中按策略（观测 -> 订单）仿真一个回合，可选地把订单截断到 order_ceiling"""
    state = reset(spec)
    for _ in range(spec.horizon):
        for m in range(spec.num_stages):
            order = policy(state.observe(m))
            if order_ceiling is not None:
                order = min(order, order_ceiling)
            state.submit_order(m, order)
        state.advance_period()
    return state


def schedule_of(state: EnvState) -> OrderSchedule:
    """从已完成的环境状态中取出订单矩阵"""
    return OrderSchedule.from_rows(row[1:] for row in state.orders)

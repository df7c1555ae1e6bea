"""
整数规划模型导出（LP 格式）与 CBC 求解

每个（阶段，周期）有 O、R、S、B、I 五个整数变量。发运量与零售商销售量的三项取最小值用三个不等式加三个二元指示变量
表示：指示变量之和为 1，被选中的一项与结果相等。
"""

import logging
from typing import Dict, Tuple

import pulp

from invbench.constants import ProofStatus
from invbench.env import check_scenario, demand_series
from invbench.exceptions import DomainError, IngestionError
from invbench.objects import OrderSchedule, ScenarioSpec, SolveResult
from invbench.optimal.evaluate import evaluate_schedule

__all__ = ["build_ip_model", "export_ip", "solve_ip"]

logger = logging.getLogger(__name__)


def build_ip_model(spec: ScenarioSpec) -> Tuple[pulp.LpProblem, Dict[Tuple[str, int, int], pulp.LpVariable]]:
    """构造整数规划模型

    Returns
    -------
    Tuple[pulp.LpProblem, Dict[Tuple[str, int, int], pulp.LpVariable]]
        模型，以及 (变量名, 阶段, 周期) 到变量的映射
    """
    check_scenario(spec)
    stages = spec.stages
    num_stages, horizon = spec.num_stages, spec.horizon
    demand = demand_series(spec.demand, horizon)

    # 订单上界与大 M：超过该上界的订单不会被售出，只增加成本
    order_upper = (max(stage.capacity for stage in stages) * horizon + sum(demand)
                   + sum(stage.init_inventory for stage in stages))
    big_m = order_upper * (horizon + 2)

    model = pulp.LpProblem(f"invbench_{spec.name}".replace("-", "_"), pulp.LpMaximize)
    var: Dict[Tuple[str, int, int], pulp.LpVariable] = {}
    for m in range(num_stages):
        for t in range(1, horizon + 1):
            var[("O", m, t)] = pulp.LpVariable(f"O_{m}_{t}", lowBound=0, upBound=order_upper, cat=pulp.LpInteger)
            for name in ("R", "S", "B", "I"):
                var[(name, m, t)] = pulp.LpVariable(f"{name}_{m}_{t}", lowBound=0, cat=pulp.LpInteger)

    def previous(name: str, m: int, t: int):
        if t >= 1:
            return var[(name, m, t)]
        if name == "I":
            return stages[m].init_inventory
        return 0

    def add_min(result, terms, label: str) -> None:
        """result = min(terms)"""
        nonlocal model
        indicators = [pulp.LpVariable(f"y_{label}_{i}", cat=pulp.LpBinary) for i in range(len(terms))]
        for i, term in enumerate(terms):
            model += result <= term, f"min_ub_{label}_{i}"
            model += result >= term - big_m * (1 - indicators[i]), f"min_lb_{label}_{i}"
        model += pulp.lpSum(indicators) == 1, f"min_pick_{label}"

    for t in range(1, horizon + 1):
        for m in range(num_stages):
            arrival = previous("R", m, t - stages[m].lead_time)
            available = previous("I", m, t - 1) + arrival

            # 发运
            if m == num_stages - 1:
                model += var[("R", m, t)] == var[("O", m, t)], f"ship_top_{t}"
            else:
                upstream_available = previous("I", m + 1, t - 1) + previous("R", m + 1, t - stages[m + 1].lead_time)
                add_min(var[("R", m, t)],
                        [previous("B", m + 1, t - 1) + var[("O", m, t)], stages[m + 1].capacity, upstream_available],
                        f"R_{m}_{t}")

            # 销售与缺货
            if m == 0:
                add_min(var[("S", 0, t)], [previous("B", 0, t - 1) + demand[t - 1], stages[0].capacity, available],
                        f"S_0_{t}")
                model += var[("B", 0, t)] == previous("B", 0, t - 1) + demand[t - 1] - var[("S", 0, t)], \
                    f"backlog_0_{t}"
            else:
                model += var[("S", m, t)] == var[("R", m - 1, t)], f"sales_{m}_{t}"
                model += var[("B", m, t)] == previous("B", m, t - 1) + var[("O", m - 1, t)] - var[("S", m, t)], \
                    f"backlog_{m}_{t}"

            # 库存
            model += var[("I", m, t)] == available - var[("S", m, t)], f"inventory_{m}_{t}"

    model += pulp.lpSum(stages[m].sale_price * var[("S", m, t)] - stages[m].order_cost * var[("R", m, t)]
                        - stages[m].backlog_cost * var[("B", m, t)] - stages[m].holding_cost * var[("I", m, t)]
                        for m in range(num_stages) for t in range(1, horizon + 1))
    return model, var


def export_ip(spec: ScenarioSpec, path) -> int:
    """把整数规划模型写为 LP 格式文件，返回变量个数"""
    model, _ = build_ip_model(spec)
    try:
        model.writeLP(str(path))
    except OSError as e:
        raise IngestionError(f"无法写入 LP 文件 {path}: {e}") from e
    count = len(model.variables())
    logger.info("场景 %s 的整数规划模型已导出到 %s（%d 个变量）", spec.name, path, count)
    return count


def solve_ip(spec: ScenarioSpec, time_limit: float = None, msg: bool = False) -> SolveResult:
    """用 pulp 自带的 CBC 求解整数规划模型，并用环境仿真复核目标值"""
    model, var = build_ip_model(spec)
    status = model.solve(pulp.PULP_CBC_CMD(msg=msg, timeLimit=time_limit))
    status_name = pulp.LpStatus[status]
    if status_name not in ("Optimal", "Not Solved") or any(v.varValue is None for v in model.variables()):
        raise DomainError(f"场景 {spec.name} 的整数规划求解失败: {status_name}")
    schedule = OrderSchedule.from_rows(
        [round(var[("O", m, t)].varValue) for t in range(1, spec.horizon + 1)] for m in range(spec.num_stages))
    objective = evaluate_schedule(spec, schedule)
    model_value = pulp.value(model.objective)
    if abs(model_value - objective) > 1e-6:
        logger.warning("场景 %s：模型目标值 %s 与仿真复核值 %s 不一致", spec.name, model_value, objective)
    return SolveResult(objective=objective, schedule=schedule, node_count=0,
                       status=ProofStatus.OPTIMAL if status_name == "Optimal" else ProofStatus.BOUND_ONLY,
                       upper_bound=objective if status_name == "Optimal" else None)

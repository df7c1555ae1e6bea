"""
实验场景注册表与场景文件读写（YAML）
"""

import os
from typing import Any, Dict

import yaml

from invbench.constants import DemandKind
from invbench.env import check_scenario
from invbench.exceptions import ConfigurationError, IngestionError
from invbench.objects import DemandModel, ScenarioSpec, StageParams

__all__ = ["SCENARIO_NAMES", "scenario", "load_scenario", "save_scenario", "scenario_to_dict", "scenario_from_dict"]

SCENARIO_NAMES = ("const-uni", "dec-div", "dec-uni", "inc-div", "inc-uni")

NUM_PERIODS = 12

# 同构参数：各阶段完全相同
_UNIFORM = {
    "init_inventories": [12, 12, 12, 12],
    "lead_times": [2, 2, 2, 2],
    "prod_capacities": [20, 20, 20, 20],
    "sale_prices": [0, 0, 0, 0],
    "order_costs": [0, 0, 0, 0],
    "backlog_costs": [1, 1, 1, 1],
    "holding_costs": [1, 1, 1, 1],
}

# 异构参数：越上游库存、提前期、产能越大，价格越低
_DIVERSE = {
    "init_inventories": [12, 14, 16, 18],
    "lead_times": [1, 2, 3, 4],
    "prod_capacities": [20, 22, 24, 26],
    "sale_prices": [9, 8, 7, 6],
    "order_costs": [8, 7, 6, 5],
    "backlog_costs": [1, 1, 1, 1],
    "holding_costs": [1, 1, 1, 1],
}

_DEMANDS = {
    "const": {"kind": DemandKind.CONSTANT.value, "value": 4},
    "inc": {"kind": DemandKind.INCREASING.value},
    "dec": {"kind": DemandKind.DECREASING.value},
}

_PARAMETER_FIELDS = (
    ("init_inventories", "init_inventory"),
    ("lead_times", "lead_time"),
    ("prod_capacities", "capacity"),
    ("sale_prices", "sale_price"),
    ("order_costs", "order_cost"),
    ("backlog_costs", "backlog_cost"),
    ("holding_costs", "holding_cost"),
)


def scenario(name: str) -> ScenarioSpec:
    """按名称构造注册的实验场景"""
    if name not in SCENARIO_NAMES:
        raise ConfigurationError(f"未知的场景: {name}（可选: {', '.join(SCENARIO_NAMES)}）")
    demand_key, parameter_key = name.split("-")
    data = {"name": name, "num_periods": NUM_PERIODS, "demand": dict(_DEMANDS[demand_key])}
    data.update({key: list(values) for key, values in (_UNIFORM if parameter_key == "uni" else _DIVERSE).items()})
    return scenario_from_dict(data)


def scenario_from_dict(data: Dict[str, Any]) -> ScenarioSpec:
    """从字典构造场景并校验"""
    if not isinstance(data, dict):
        raise ConfigurationError("场景文件的顶层必须是映射")
    missing = [key for key, _ in _PARAMETER_FIELDS if key not in data] + \
              [key for key in ("num_periods", "demand") if key not in data]
    if missing:
        raise ConfigurationError(f"场景缺少字段: {missing}")
    not_lists = [key for key, _ in _PARAMETER_FIELDS if not isinstance(data[key], list)]
    if not_lists:
        raise ConfigurationError(f"以下字段必须是按阶段排列的列表: {not_lists}")
    lengths = {len(data[key]) for key, _ in _PARAMETER_FIELDS}
    if len(lengths) != 1:
        raise ConfigurationError("各阶段参数列表的长度不一致")
    num_stages = lengths.pop()
    stages = tuple(
        StageParams(stage_index=m, **{field: data[key][m] for key, field in _PARAMETER_FIELDS})
        for m in range(num_stages))

    demand_data = data["demand"]
    if not isinstance(demand_data, dict):
        raise ConfigurationError(f"demand 必须是映射: {demand_data!r}")
    try:
        kind = DemandKind(demand_data["kind"])
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"需求模式不合法: {demand_data!r}") from e
    if kind == DemandKind.CONSTANT:
        demand = DemandModel.constant(demand_data.get("value"))
    elif kind == DemandKind.EXPLICIT:
        values = demand_data.get("values")
        if not isinstance(values, list):
            raise ConfigurationError(f"显式需求的 values 必须是列表: {values!r}")
        demand = DemandModel.explicit(values)
    else:
        demand = DemandModel(kind=kind)

    spec = ScenarioSpec(name=str(data.get("name", "custom")), stages=stages, horizon=data["num_periods"],
                        demand=demand)
    check_scenario(spec)
    return spec


def scenario_to_dict(spec: ScenarioSpec) -> Dict[str, Any]:
    data: Dict[str, Any] = {"name": spec.name, "num_periods": spec.horizon}
    for key, field in _PARAMETER_FIELDS:
        data[key] = [getattr(stage, field) for stage in spec.stages]
    demand: Dict[str, Any] = {"kind": spec.demand.kind.value}
    if spec.demand.kind == DemandKind.CONSTANT:
        demand["value"] = spec.demand.value
    elif spec.demand.kind == DemandKind.EXPLICIT:
        demand["values"] = list(spec.demand.values)
    data["demand"] = demand
    return data


def load_scenario(name_or_path: str) -> ScenarioSpec:
    """按注册名称或 YAML 文件路径加载场景"""
    if name_or_path in SCENARIO_NAMES:
        return scenario(name_or_path)
    if not os.path.isfile(name_or_path):
        raise ConfigurationError(f"未知的场景且文件不存在: {name_or_path}")
    try:
        with open(name_or_path, "r", encoding="UTF-8") as file:
            data = yaml.safe_load(file)
    except OSError as e:
        raise IngestionError(f"无法读取场景文件 {name_or_path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigurationError(f"场景文件 {name_or_path} 格式错误: {e}") from e
    return scenario_from_dict(data)


def save_scenario(spec: ScenarioSpec, path) -> None:
    try:
        with open(path, "w", encoding="UTF-8") as file:
            yaml.safe_dump(scenario_to_dict(spec), file, sort_keys=False, allow_unicode=True)
    except OSError as e:
        raise IngestionError(f"无法写入场景文件 {path}: {e}") from e

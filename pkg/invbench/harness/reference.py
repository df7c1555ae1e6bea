"""
最优值缓存与已发表的参考数值
"""

import importlib.resources
import logging
from typing import Dict, Optional

import yaml

from invbench.harness.registry import SCENARIO_NAMES, scenario
from invbench.objects import Money, ScenarioSpec
from invbench.optimal import solve

__all__ = ["PUBLISHED_OPTIMAL", "PUBLISHED_GAPS", "load_optimal_rewards", "cached_optimal", "optimal_reward",
           "published_gap"]

logger = logging.getLogger(__name__)

# 已发表的集中式最优总收益
PUBLISHED_OPTIMAL: Dict[str, int] = {
    "const-uni": -120,
    "dec-div": 332,
    "dec-uni": -45,
    "inc-div": 242,
    "inc-uni": -132,
}

# 已发表的启发式基线相对差距（百分比）
PUBLISHED_GAPS: Dict[str, Dict[str, float]] = {
    "base-stock": {"const-uni": 146.67, "dec-div": 140.36, "dec-uni": 340.00, "inc-div": 162.81, "inc-uni": 112.12},
    "tracking-demand": {"const-uni": 200.00, "dec-div": 150.30, "dec-uni": 584.44, "inc-div": 205.37,
                        "inc-uni": 243.93},
}

_SOLVED: Dict[ScenarioSpec, Money] = {}


def load_optimal_rewards() -> Dict[str, Money]:
    """读取随包发布的最优值缓存"""
    path = importlib.resources.files("invbench.harness") / "data" / "optimal_rewards.yaml"
    return yaml.safe_load(path.read_text(encoding="UTF-8"))


def cached_optimal(spec: ScenarioSpec) -> Optional[Money]:
    """注册场景（参数未被修改）的缓存最优值"""
    if spec.name in SCENARIO_NAMES and scenario(spec.name) == spec:
        return load_optimal_rewards().get(spec.name)
    return _SOLVED.get(spec)


def optimal_reward(spec: ScenarioSpec, node_limit: Optional[int] = None, time_limit: Optional[float] = None) -> Money:
    """场景的最优值：优先使用缓存，否则调用分支定界求解并缓存在进程内"""
    cached = cached_optimal(spec)
    if cached is not None:
        return cached
    result = solve(spec, node_limit=node_limit, time_limit=time_limit)
    if not result.is_optimal:
        logger.warning("场景 %s 未在预算内证明最优，使用当前最好解 %s 作为参考", spec.name, result.objective)
    else:
        _SOLVED[spec] = result.objective
    return result.objective


def published_gap(agent: str, scenario_name: str) -> Optional[float]:
    return PUBLISHED_GAPS.get(agent, {}).get(scenario_name)

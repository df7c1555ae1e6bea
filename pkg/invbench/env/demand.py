"""
顾客需求
"""

import math
from typing import List, Optional

from invbench.constants import DemandKind
from invbench.exceptions import DomainError
from invbench.objects import DemandModel

__all__ = ["demand_at", "demand_series"]


def demand_at(model: DemandModel, t: int, horizon: Optional[int] = None) -> int:
    """计算周期 t 的顾客需求 D_t

    Parameters
    ----------
    model : DemandModel
        需求模型
    t : int
        周期（从 1 开始）
    horizon : Optional[int], default = None
        周期数 T；给定时校验 t <= T

    Returns
    -------
    int
        非负整数需求
    """
    if t < 1 or (horizon is not None and t > horizon):
        raise DomainError(f"周期 {t} 超出范围 [1, {horizon}]")
    if model.kind == DemandKind.CONSTANT:
        return _as_count(model.value)
    if model.kind == DemandKind.INCREASING:
        return 2 + math.ceil(t / 3)
    if model.kind == DemandKind.DECREASING:
        return max(0, 2 + math.ceil((12 - (t - 1)) / 3))
    if model.kind == DemandKind.EXPLICIT:
        if t > len(model.values):
            raise DomainError(f"周期 {t} 超出需求序列长度 {len(model.values)}")
        return _as_count(model.values[t - 1])
    raise DomainError(f"未知的需求模式: {model.kind}")


def demand_series(model: DemandModel, horizon: int) -> List[int]:
    """周期 1..T 的需求序列"""
    return [demand_at(model, t, horizon) for t in range(1, horizon + 1)]


def _as_count(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DomainError(f"需求必须是非负整数: {value!r}")
    return value

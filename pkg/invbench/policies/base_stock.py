"""
基础库存策略：订货至产能
"""

from invbench.objects import Observation, StageParams

__all__ = ["base_stock_order"]


def base_stock_order(obs: Observation, params: StageParams) -> int:
    """订货量 max(0, c_m - I_{m,t-1})"""
    return max(0, params.capacity - obs.inventory)

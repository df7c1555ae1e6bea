"""
跟踪需求策略
"""

from fractions import Fraction

from invbench.exceptions import ConfigurationError
from invbench.objects import Observation, StageParams
from invbench.policies.rounding import round_half_up

__all__ = ["tracking_demand_order"]


def tracking_demand_order(obs: Observation, params: StageParams, l_max: int) -> int:
    """按最近 L_max 个周期的平均销售量跟踪需求

    目标库存 Ī = S̄·L_m + B_{m,t-1}，其中 S̄ 为最近 L_max 个周期销售量的平均值（回合开始前的销售量按 0 补齐），
    订货量为 max(0, round(Ī - I_{m,t-1}))。

    Parameters
    ----------
    obs : Observation
        阶段观测（使用其中的全部历史销售量）
    params : StageParams
        阶段参数
    l_max : int
        所有阶段提前期的最大值 L_max

    Returns
    -------
    int
        非负整数订货量
    """
    if l_max <= 0:
        raise ConfigurationError(f"L_max 必须为正整数: {l_max}")
    window = list(obs.sales_lookback[-l_max:])
    mean_sales = Fraction(sum(window), l_max)
    target = mean_sales * params.lead_time + obs.backlog
    return max(0, round_half_up(target - obs.inventory))

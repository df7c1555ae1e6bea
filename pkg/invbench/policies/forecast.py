"""
需求预测
"""

from fractions import Fraction
from typing import Tuple

from invbench.env import demand_at
from invbench.exceptions import DomainError
from invbench.objects import ForecastModel

__all__ = ["forecast"]


def forecast(model: ForecastModel, t: int, lead_time: int) -> Tuple[Fraction, Fraction]:
    """预测周期 t 起提前期加 1 个周期窗口内的需求

    确定性需求下 μ̂ 为周期 t..min(t+L, T) 的需求平均值，σ̂ 为 0。

    Returns
    -------
    Tuple[Fraction, Fraction]
        (mu_hat, sigma_hat)
    """
    if not 1 <= t <= model.horizon:
        raise DomainError(f"周期 {t} 超出范围 [1, {model.horizon}]")
    last = min(t + lead_time, model.horizon)
    window = [demand_at(model.demand, tau, model.horizon) for tau in range(t, last + 1)]
    return Fraction(sum(window), len(window)), Fraction(0)

"""
评价指标
"""

from typing import Sequence, Tuple

import numpy as np

from invbench.exceptions import UndefinedMetricError
from invbench.objects import Money

__all__ = ["relative_gap", "summarize"]


def relative_gap(opt: Money, r: Money) -> float:
    """相对最优差距 Δ = |(Opt - r) / Opt| × 100，保留两位小数"""
    if opt == 0:
        raise UndefinedMetricError("最优值为 0 时相对差距没有定义")
    return round(abs((opt - r) / opt) * 100, 2)


def summarize(totals: Sequence[Money]) -> Tuple[float, float]:
    """各回合总收益的平均值与总体标准差"""
    values = np.asarray(totals, dtype=np.float64)
    return float(values.mean()), float(values.std())

"""
取整规则
"""

import math
from fractions import Fraction
from typing import Union

__all__ = ["round_half_up"]


def round_half_up(x: Union[int, float, Fraction]) -> int:
    """四舍五入到整数（.5 向上取整）；浮点数先转换为精确分数"""
    return math.floor(Fraction(x) + Fraction(1, 2))

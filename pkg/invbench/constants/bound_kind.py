"""
分支定界使用的上界类型

- OPTIMISTIC 表示乐观上界：剩余需求全部按售价卖出，且不计任何成本
- LP 表示线性规划松弛上界（同时与乐观上界取最小值）
"""

import enum

__all__ = ["BoundKind"]


class BoundKind(enum.Enum):
    """上界类型"""
    OPTIMISTIC = "optimistic"
    LP = "lp"

"""
求解结果的证明状态

- OPTIMAL 表示已证明最优
- BOUND_ONLY 表示预算耗尽，仅给出当前最好解及剩余上界
"""

import enum

__all__ = ["ProofStatus"]


class ProofStatus(enum.Enum):
    """求解结果的证明状态"""
    OPTIMAL = "optimal"
    BOUND_ONLY = "bound_only"

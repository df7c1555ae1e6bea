"""
安全库存策略的订单上限规则

- SUPPLIER 表示使用上游供应商的产能 c_{m+1}（最上游阶段不限制）
- OWN 表示使用本阶段的产能 c_m
- NONE 表示不限制
"""

import enum

__all__ = ["CapRule"]


class CapRule(enum.Enum):
    """订单上限规则枚举值"""
    SUPPLIER = "supplier"
    OWN = "own"
    NONE = "none"

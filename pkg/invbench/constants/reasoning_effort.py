"""
远程模型推理强度枚举值
"""

import enum

__all__ = ["ReasoningEffort"]


class ReasoningEffort(enum.Enum):
    """推理强度"""
    MEDIUM = "medium"
    HIGH = "high"

"""
需求模式枚举值

- CONSTANT 表示每个周期需求恒定
- INCREASING 表示需求每 3 个周期增加 1（2 + ⌈t/3⌉）
- DECREASING 表示需求每 3 个周期减少 1（2 + ⌈(12-(t-1))/3⌉）
- EXPLICIT 表示逐周期给出的需求序列
"""

import enum

__all__ = ["DemandKind"]


class DemandKind(enum.Enum):
    """需求模式枚举值"""
    CONSTANT = "constant"
    INCREASING = "increasing"
    DECREASING = "decreasing"
    EXPLICIT = "explicit"

"""
记忆记录来源枚举值
"""

import enum

__all__ = ["RecordSource"]


class RecordSource(enum.Enum):
    """记忆记录来源"""
    RL_LOG = "rl_log"  # 离线日志（强化学习评估日志或脚本策略生成的日志）
    LIVE = "live"  # 回合内实时写入

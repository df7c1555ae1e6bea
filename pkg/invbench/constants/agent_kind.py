"""
智能体类型枚举值

- INVAGENT 仅使用决策提示词
- INVAGENT_STEP 决策提示词 + 步骤说明
- INVAGENT_STEP_SS 决策提示词 + 步骤说明 + 安全库存策略说明
- AIMRM 决策提示词 + 步骤说明 + 记忆使用说明（仅使用回合内实时记忆）
- AIMRM_LOG 与 AIMRM 相同，但记忆库预先载入离线日志
- BASE_STOCK、TRACKING_DEMAND、SAFETY_STOCK 为启发式基线策略
- OPTIMAL_REPLAY 回放最优求解器给出的订单矩阵
"""

import enum

__all__ = ["AgentKind"]


class AgentKind(enum.Enum):
    """智能体类型枚举值"""
    INVAGENT = "invagent"
    INVAGENT_STEP = "invagent-step"
    INVAGENT_STEP_SS = "invagent-step-ss"
    AIMRM = "aimrm"
    AIMRM_LOG = "aimrm-log"
    BASE_STOCK = "base-stock"
    TRACKING_DEMAND = "tracking-demand"
    SAFETY_STOCK = "safety-stock"
    OPTIMAL_REPLAY = "optimal-replay"

    @property
    def is_language_agent(self) -> bool:
        """是否为需要语言模型决策后端的智能体"""
        return self in (AgentKind.INVAGENT, AgentKind.INVAGENT_STEP, AgentKind.INVAGENT_STEP_SS,
                        AgentKind.AIMRM, AgentKind.AIMRM_LOG)

    @property
    def uses_memory(self) -> bool:
        """是否启用记忆模块"""
        return self in (AgentKind.AIMRM, AgentKind.AIMRM_LOG)

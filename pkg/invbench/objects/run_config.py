"""
实验运行配置类
"""

import dataclasses
from typing import Optional

from invbench.constants import AgentKind, CapRule
from invbench.objects.decision import BackendConfig

__all__ = ["RunConfig"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class RunConfig:
    """一次实验（N 个回合）的配置"""

    # 注册场景名称或场景文件路径
    scenario: str = dataclasses.field(kw_only=True)

    # 智能体类型
    agent: AgentKind = dataclasses.field(kw_only=True)

    # 回合数 N
    episodes: int = dataclasses.field(kw_only=True, default=5)

    # 近邻数 K
    k: int = dataclasses.field(kw_only=True, default=6)

    # 距离阈值 tau
    tau: float = dataclasses.field(kw_only=True, default=2.0)

    # 决策后端配置（仅语言模型智能体使用）
    backend: BackendConfig = dataclasses.field(kw_only=True, default_factory=BackendConfig)

    # 脚本后端包装的策略名称（语言模型智能体使用脚本后端时）
    backend_policy: str = dataclasses.field(kw_only=True, default="safety-stock")

    # 预先载入的记忆日志
    memory_log: Optional[str] = dataclasses.field(kw_only=True, default=None)

    # 输出目录（None 表示不写文件）
    out_dir: Optional[str] = dataclasses.field(kw_only=True, default=None)

    # 随机种子（保留，当前所有组件均为确定性的）
    seed: Optional[int] = dataclasses.field(kw_only=True, default=None)

    # 安全库存策略的安全系数
    z: float = dataclasses.field(kw_only=True, default=0.0)

    # 安全库存策略的订单上限规则
    cap_rule: CapRule = dataclasses.field(kw_only=True, default=CapRule.SUPPLIER)

    # 跟踪需求策略的窗口长度（None 表示所有阶段提前期的最大值）
    l_max: Optional[int] = dataclasses.field(kw_only=True, default=None)

    # 并行回合数
    workers: int = dataclasses.field(kw_only=True, default=1)

    # 确定性配置是否仍然运行全部 N 个回合
    force_episodes: bool = dataclasses.field(kw_only=True, default=False)

    # 自定义提示词模板目录
    template_dir: Optional[str] = dataclasses.field(kw_only=True, default=None)

    # optimal-replay 回放的订单矩阵文件（None 表示现场求解）
    schedule_path: Optional[str] = dataclasses.field(kw_only=True, default=None)

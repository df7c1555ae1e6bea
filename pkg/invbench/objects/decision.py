"""
决策相关类
"""

import dataclasses
from typing import Callable, Optional, Tuple

from invbench.constants import ReasoningEffort
from invbench.objects.memory_record import SimilarCase
from invbench.objects.observation import Observation
from invbench.objects.scenario import Money

__all__ = ["Decision", "DecisionContext", "DecisionLog", "BackendConfig", "MemoryConfig"]


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class Decision:
    """一次决策输出：订单数量与理由"""

    # 订单数量（非负整数）
    order: int = dataclasses.field(kw_only=True)

    # 决策理由
    reason: str = dataclasses.field(kw_only=True, default="")

    # 是否由降级策略给出
    fallback: bool = dataclasses.field(kw_only=True, default=False)

    # 远程后端的原始回复（脚本后端为 None）
    raw_reply: Optional[str] = dataclasses.field(kw_only=True, default=None)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class DecisionContext:
    """构造提示词与决策所需的上下文"""

    # 当前阶段观测
    observation: Observation = dataclasses.field(kw_only=True)

    # 周期 t
    period: int = dataclasses.field(kw_only=True)

    # 阶段 m
    stage: int = dataclasses.field(kw_only=True)

    # 阶段总数 M
    num_stages: int = dataclasses.field(kw_only=True)

    # 检索到的相似案例（未启用记忆时为空）
    similar_cases: Tuple[SimilarCase, ...] = dataclasses.field(kw_only=True, default=())

    # 下游本周期的订单 O_{m-1,t}；零售商为本周期顾客需求 D_t
    downstream_order: Optional[int] = dataclasses.field(kw_only=True, default=None)

    # 需求说明文本
    demand_description: str = dataclasses.field(kw_only=True, default="")

    # 订单上限（安全库存说明中的产能；None 表示不限制）
    prod_capacity: Optional[int] = dataclasses.field(kw_only=True, default=None)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class DecisionLog:
    """回合内一次决策的记录"""

    # 周期
    period: int = dataclasses.field(kw_only=True)

    # 阶段
    stage: int = dataclasses.field(kw_only=True)

    # 决策前状态向量
    state_vec: Tuple[int, ...] = dataclasses.field(kw_only=True)

    # 决策
    decision: Decision = dataclasses.field(kw_only=True)

    # 该周期实现的收益
    reward: Money = dataclasses.field(kw_only=True)

    # 交给决策后端的相似案例
    similar_cases: Tuple[SimilarCase, ...] = dataclasses.field(kw_only=True, default=())


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class BackendConfig:
    """决策后端配置"""

    # 后端类型："scripted" 或 "remote"
    kind: str = dataclasses.field(kw_only=True, default="scripted")

    # 脚本后端包装的策略（观测 -> 订单）
    policy: Optional[Callable[[Observation], int]] = dataclasses.field(kw_only=True, default=None, compare=False)

    # 远程后端的基础地址
    endpoint: Optional[str] = dataclasses.field(kw_only=True, default=None)

    # 远程模型名称
    model: Optional[str] = dataclasses.field(kw_only=True, default=None)

    # 推理强度
    reasoning_effort: ReasoningEffort = dataclasses.field(kw_only=True, default=ReasoningEffort.MEDIUM)

    # 单次请求超时（秒）
    timeout: float = dataclasses.field(kw_only=True, default=120.0)

    # 最大重试次数（总尝试次数为 max_retries + 1）
    max_retries: int = dataclasses.field(kw_only=True, default=2)

    # 存放访问凭证的环境变量名
    api_key_env: str = dataclasses.field(kw_only=True, default="INVBENCH_API_KEY")

    # 请求失败后重试前的等待时间（秒），每次重试翻倍
    retry_delay: float = dataclasses.field(kw_only=True, default=1.0)

    # 同时进行中的远程请求数上限
    max_concurrency: int = dataclasses.field(kw_only=True, default=4)


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class MemoryConfig:
    """记忆模块配置"""

    # 是否启用记忆
    enabled: bool = dataclasses.field(kw_only=True, default=False)

    # 近邻数 K
    k: int = dataclasses.field(kw_only=True, default=6)

    # 距离阈值 tau（严格小于）
    tau: float = dataclasses.field(kw_only=True, default=2.0)

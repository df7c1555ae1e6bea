"""
多级供应链库存管理基准：仿真环境、基线策略、情景记忆、决策智能体、精确最优求解与实验运行
"""

from invbench.agents import (
    PromptBundle,
    RemoteBackend,
    ScriptedBackend,
    build_prompt,
    decide,
    run_episode,
    run_round
)
from invbench.constants import (
    AgentKind,
    BoundKind,
    CapRule,
    DemandKind,
    ProofStatus,
    ReasoningEffort,
    RecordSource
)
from invbench.env import (
    EnvState,
    advance_period,
    demand_at,
    observe,
    reset,
    submit_order,
    total_reward
)
from invbench.exceptions import (
    BackendError,
    ConfigurationError,
    DomainError,
    Error,
    IngestionError,
    InvBenchError,
    ProtocolError,
    TemplateError,
    UndefinedMetricError
)
from invbench.harness import (
    emit_series,
    load_scenario,
    record_rollout_log,
    relative_gap,
    run_experiment,
    save_scenario,
    scenario
)
from invbench.memory import MemoryStore, export_log, import_log, insert, retrieve
from invbench.objects import (
    BackendConfig,
    Decision,
    DecisionContext,
    DemandModel,
    MemoryRecord,
    MetricsReport,
    Observation,
    OrderSchedule,
    RunConfig,
    ScenarioSpec,
    SimilarCase,
    SolveResult,
    StageParams,
    StepOutcome
)
from invbench.optimal import evaluate_schedule, export_ip, solve, solve_ip
from invbench.policies import base_stock_order, forecast, safety_stock_order, tracking_demand_order

__version__ = "0.1.0"

__all__ = [
    # Env
    "reset",
    "submit_order",
    "advance_period",
    "observe",
    "demand_at",
    "total_reward",
    "EnvState",

    # Policies
    "base_stock_order",
    "tracking_demand_order",
    "safety_stock_order",
    "forecast",

    # Memory
    "MemoryStore",
    "insert",
    "retrieve",
    "import_log",
    "export_log",

    # Agents
    "PromptBundle",
    "ScriptedBackend",
    "RemoteBackend",
    "build_prompt",
    "decide",
    "run_round",
    "run_episode",

    # Optimal
    "evaluate_schedule",
    "solve",
    "export_ip",
    "solve_ip",

    # Harness
    "load_scenario",
    "save_scenario",
    "scenario",
    "run_experiment",
    "relative_gap",
    "record_rollout_log",
    "emit_series",

    # Objects
    "StageParams",
    "DemandModel",
    "ScenarioSpec",
    "Observation",
    "StepOutcome",
    "MemoryRecord",
    "SimilarCase",
    "Decision",
    "DecisionContext",
    "BackendConfig",
    "OrderSchedule",
    "SolveResult",
    "RunConfig",
    "MetricsReport",

    # Constants
    "AgentKind",
    "BoundKind",
    "CapRule",
    "DemandKind",
    "ProofStatus",
    "ReasoningEffort",
    "RecordSource",

    # Exceptions
    "InvBenchError",
    "Error",
    "ConfigurationError",
    "TemplateError",
    "DomainError",
    "UndefinedMetricError",
    "ProtocolError",
    "BackendError",
    "IngestionError",
]

from invbench.constants.agent_kind import AgentKind
from invbench.constants.bound_kind import BoundKind
from invbench.constants.cap_rule import CapRule
from invbench.constants.demand_kind import DemandKind
from invbench.constants.proof_status import ProofStatus
from invbench.constants.reasoning_effort import ReasoningEffort
from invbench.constants.record_source import RecordSource

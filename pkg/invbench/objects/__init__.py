from invbench.objects.decision import BackendConfig, Decision, DecisionContext, DecisionLog, MemoryConfig
from invbench.objects.memory_record import MemoryRecord, SimilarCase
from invbench.objects.observation import Observation, StepOutcome
from invbench.objects.policy_params import ForecastModel, SafetyStockParams
from invbench.objects.results import EpisodeResult, MetricsReport
from invbench.objects.scenario import DemandModel, Money, ScenarioSpec, StageParams
from invbench.objects.schedule import OrderSchedule, SolveResult
from invbench.objects.run_config import RunConfig

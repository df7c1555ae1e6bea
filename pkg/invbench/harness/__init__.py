"""
实验场景、实验运行、评价指标与结果输出
"""

from invbench.harness.metrics import relative_gap, summarize
from invbench.harness.reference import (
    PUBLISHED_GAPS,
    PUBLISHED_OPTIMAL,
    cached_optimal,
    load_optimal_rewards,
    optimal_reward,
    published_gap
)
from invbench.harness.registry import (
    SCENARIO_NAMES,
    load_scenario,
    save_scenario,
    scenario,
    scenario_from_dict,
    scenario_to_dict
)
from invbench.harness.rollout_log import record_rollout_log
from invbench.harness.runner import eval_traces, make_run_backend, run_experiment
from invbench.harness.series import SERIES_PANELS, build_series, emit_series

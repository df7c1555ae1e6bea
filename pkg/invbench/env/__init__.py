"""
供应链仿真环境
"""

from invbench.env.demand import demand_at, demand_series
from invbench.env.state import (
    EnvState,
    advance_period,
    check_scenario,
    observe,
    reset,
    submit_order,
    total_reward
)
from invbench.env.trace import TRACE_COLUMNS, trace_frame, write_trace

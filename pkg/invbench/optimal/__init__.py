"""
集中式精确最优求解
"""

from invbench.optimal.bounds import lp_bound, optimistic_bound
from invbench.optimal.evaluate import evaluate_schedule, rollout_policy, rollout_schedule, schedule_of
from invbench.optimal.lp_export import build_ip_model, export_ip, solve_ip
from invbench.optimal.schedule_io import read_schedule, write_schedule
from invbench.optimal.solver import BranchAndBound, solve

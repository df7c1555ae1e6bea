"""
回合轨迹导出
"""

import pandas as pd

from invbench.env.state import EnvState

__all__ = ["TRACE_COLUMNS", "trace_frame", "write_trace"]

TRACE_COLUMNS = ["t", "m", "D", "O", "R", "S", "B", "I", "P"]


def trace_frame(state: EnvState) -> pd.DataFrame:
    """每个（阶段，周期）一行的轨迹表"""
    rows = []
    for t in range(1, state.period + 1):
        for m in range(state.num_stages):
            rows.append((t, m, state.demand[t], state.orders[m][t], state.shipments[m][t], state.sales[m][t],
                         state.backlog[m][t], state.inventory[m][t], state.profits[m][t]))
    return pd.DataFrame(rows, columns=TRACE_COLUMNS)


def write_trace(state: EnvState, path) -> None:
    trace_frame(state).to_csv(path, index=False)

"""
逐周期序列：库存、缺货、订单、累计相对收益
"""

import os
from typing import Dict, List, Optional

import pandas as pd

from invbench.env import EnvState
from invbench.exceptions import IngestionError
from invbench.objects import MetricsReport, Money

__all__ = ["SERIES_PANELS", "build_series", "emit_series"]

SERIES_PANELS = ("inventory", "backlog", "orders", "relative_reward")


def build_series(state: EnvState, opt: Optional[Money]) -> Dict[str, pd.DataFrame]:
    """从一个回合的轨迹构造各面板的表格，列为 period、stage_0..stage_{M-1}、demand（含周期 0 行）

    relative_reward 面板为各阶段累计收益除以 Opt，另有 total 列为全链累计收益除以 Opt；Opt 缺失或为 0 时不生成。
    """
    periods = range(0, state.period + 1)
    stage_columns = [f"stage_{m}" for m in range(state.num_stages)]

    def panel(values: List[List]) -> pd.DataFrame:
        frame = pd.DataFrame({"period": list(periods)})
        for m, column in enumerate(stage_columns):
            frame[column] = [values[m][tau] for tau in periods]
        frame["demand"] = [state.demand[tau] for tau in periods]
        return frame

    series = {
        "inventory": panel(state.inventory),
        "backlog": panel(state.backlog),
        "orders": panel(state.orders),
    }
    if opt:
        cumulative = [list(pd.Series(profits).cumsum()) for profits in state.profits]
        frame = panel([[value / opt for value in row] for row in cumulative])
        frame.insert(len(stage_columns) + 1, "total", frame[stage_columns].sum(axis=1))
        series["relative_reward"] = frame
    return series


def emit_series(report: MetricsReport, path) -> List[str]:
    """每个面板写出一个 CSV 文件，返回文件路径列表"""
    written = []
    try:
        os.makedirs(path, exist_ok=True)
        for name in SERIES_PANELS:
            if name in report.series:
                target = os.path.join(path, f"{name}.csv")
                report.series[name].to_csv(target, index=False)
                written.append(target)
    except OSError as e:
        raise IngestionError(f"无法写入序列文件 {path}: {e}") from e
    return written

"""
记忆日志读写（JSON Lines）

每行一条记录，字段为 stage、episode、period、state_vec、action、reward、source。
"""

import dataclasses
import json
import logging
import os
from typing import Dict, Iterable, List, Tuple

from invbench.constants import RecordSource
from invbench.exceptions import IngestionError
from invbench.memory.store import MemoryStore
from invbench.objects import MemoryRecord

__all__ = ["LOG_FIELDS", "IngestionSummary", "import_log", "export_log", "write_records", "record_to_json",
           "record_from_json"]

logger = logging.getLogger(__name__)

LOG_FIELDS = ("stage", "episode", "period", "state_vec", "action", "reward", "source")


@dataclasses.dataclass(slots=True, frozen=True, eq=True)
class IngestionSummary:
    """日志导入结果"""

    # 每个阶段导入的记录数
    counts: Dict[int, int] = dataclasses.field(kw_only=True)

    # 被拒绝的行号（从 1 开始）
    rejected: Tuple[int, ...] = dataclasses.field(kw_only=True, default=())


def record_to_json(rec: MemoryRecord) -> str:
    return json.dumps({
        "stage": rec.stage,
        "episode": rec.episode,
        "period": rec.period,
        "state_vec": list(rec.state_vec),
        "action": rec.action,
        "reward": rec.reward,
        "source": rec.source.value,
    }, ensure_ascii=False)


def record_from_json(line: str) -> MemoryRecord:
    """解析一行日志，格式错误时抛出 ValueError"""
    data = json.loads(line)
    if not isinstance(data, dict):
        raise ValueError("记录必须是 JSON 对象")
    missing = [name for name in LOG_FIELDS if name not in data]
    if missing:
        raise ValueError(f"缺少字段: {missing}")
    state_vec = data["state_vec"]
    if not isinstance(state_vec, list) or not all(_is_number(v) for v in state_vec):
        raise ValueError("state_vec 必须是数值列表")
    action = data["action"]
    if isinstance(action, bool) or not isinstance(action, int) or action < 0:
        raise ValueError(f"action 必须是非负整数: {action!r}")
    if not _is_number(data["reward"]):
        raise ValueError(f"reward 必须是数值: {data['reward']!r}")
    for name in ("stage", "episode", "period"):
        if isinstance(data[name], bool) or not isinstance(data[name], int):
            raise ValueError(f"{name} 必须是整数: {data[name]!r}")
    return MemoryRecord(stage=data["stage"], state_vec=tuple(state_vec), action=action, reward=data["reward"],
                        episode=data["episode"], period=data["period"], source=RecordSource(data["source"]))


def import_log(stores: Dict[int, MemoryStore], path, strict: bool = False) -> IngestionSummary:
    """把日志中的记录追加到对应阶段的记忆库

    Parameters
    ----------
    stores : Dict[int, MemoryStore]
        阶段下标到记忆库的映射
    path : str or PathLike
        日志文件路径
    strict : bool, default = False
        为 True 时只要存在错误行就抛出 IngestionError 且不写入任何记录；
        为 False 时保留合法行，错误行记录日志并在结果中返回行号

    Returns
    -------
    IngestionSummary
        每个阶段的导入数量及被拒绝的行号
    """
    if not os.path.isfile(path):
        raise IngestionError(f"记忆日志不存在: {path}")
    accepted: List[MemoryRecord] = []
    rejected: List[int] = []
    try:
        with open(path, "rb") as file:
            for line_no, raw in enumerate(file, start=1):
                if not raw.strip():
                    continue
                try:
                    rec = record_from_json(raw.decode("UTF-8"))
                    store = stores.get(rec.stage)
                    if store is None:
                        raise ValueError(f"没有阶段 {rec.stage} 的记忆库")
                    if len(rec.state_vec) != store.dim:
                        raise ValueError(f"状态向量维度应为 {store.dim}，实际为 {len(rec.state_vec)}")
                except ValueError as e:  # JSONDecodeError 与 UnicodeDecodeError 都是 ValueError
                    logger.warning("记忆日志 %s 第 %d 行被拒绝: %s", path, line_no, e)
                    rejected.append(line_no)
                    continue
                accepted.append(rec)
    except OSError as e:
        raise IngestionError(f"无法读取记忆日志 {path}: {e}") from e

    if strict and rejected:
        raise IngestionError(f"记忆日志 {path} 存在格式错误", bad_lines=rejected)

    counts = {stage: 0 for stage in stores}
    for rec in accepted:
        stores[rec.stage].insert(rec)
        counts[rec.stage] += 1
    logger.info("从 %s 导入 %d 条记忆（拒绝 %d 行）", path, len(accepted), len(rejected))
    return IngestionSummary(counts=counts, rejected=tuple(rejected))


def write_records(records: Iterable[MemoryRecord], path) -> int:
    """把记录写入日志文件，返回记录数"""
    count = 0
    try:
        with open(path, "w", encoding="UTF-8") as file:
            for rec in records:
                file.write(record_to_json(rec) + "\n")
                count += 1
    except OSError as e:
        raise IngestionError(f"无法写入记忆日志 {path}: {e}") from e
    return count


def export_log(stores: Dict[int, MemoryStore], path) -> int:
    """按阶段顺序导出全部记忆库，返回记录数"""
    return write_records((rec for stage in sorted(stores) for rec in stores[stage].records), path)


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)

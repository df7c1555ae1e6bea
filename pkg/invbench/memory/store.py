"""
单阶段情景记忆库：按欧氏距离检索 K 近邻并按阈值过滤
"""

import threading
from typing import Dict, List, Optional, Sequence

import numpy as np

from invbench.exceptions import DomainError
from invbench.objects import MemoryRecord, ScenarioSpec, SimilarCase

__all__ = ["MemoryStore", "make_stores", "insert", "retrieve"]


class MemoryStore:
    """
    阶段 m 的记忆库，记录按插入顺序保存。

    单次检索计算 |M| 个 d 维距离后排序；距离相同时先插入的记录优先。允许多个读者或一个写者。
    """

    def __init__(self, stage: int, dim: int):
        self.stage = stage
        self.dim = dim
        self._records: List[MemoryRecord] = []
        self._rows: List[np.ndarray] = []
        self._matrix: Optional[np.ndarray] = None  # 检索时按需堆叠的向量矩阵
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._records)

    @property
    def records(self) -> List[MemoryRecord]:
        return list(self._records)

    def insert(self, rec: MemoryRecord) -> None:
        """追加一条记录，插入后立即可检索"""
        row = self._as_vector(rec.state_vec)
        with self._lock:
            self._records.append(rec)
            self._rows.append(row)
            self._matrix = None

    def retrieve(self, query: Sequence[float], k: int, tau: float) -> List[SimilarCase]:
        """先取距离最小的 K 条记录，再保留距离严格小于 tau 的记录

        Parameters
        ----------
        query : Sequence[float]
            查询状态向量
        k : int
            近邻数 K（不小于 0）
        tau : float
            距离阈值（不小于 0）

        Returns
        -------
        List[SimilarCase]
            按距离升序排列的相似案例，长度不超过 K
        """
        if k < 0 or tau < 0:
            raise DomainError(f"K 与 tau 必须非负: K={k}, tau={tau}")
        q = self._as_vector(query)
        with self._lock:
            if not self._records or k == 0:
                return []
            if self._matrix is None:
                self._matrix = np.vstack(self._rows)
            matrix = self._matrix
            records = self._records[:matrix.shape[0]]
        distances = np.linalg.norm(matrix - q, axis=1)
        nearest = np.argsort(distances, kind="stable")[:k]
        return [SimilarCase(record=records[i], distance=float(distances[i]))
                for i in nearest if distances[i] < tau]

    def _as_vector(self, values: Sequence[float]) -> np.ndarray:
        vector = np.asarray(values, dtype=np.float64)
        if vector.ndim != 1 or vector.shape[0] != self.dim:
            raise DomainError(f"阶段 {self.stage} 的状态向量维度应为 {self.dim}，实际为 {vector.shape}")
        return vector


def make_stores(spec: ScenarioSpec) -> Dict[int, MemoryStore]:
    """为场景的每个阶段创建维度为 4 + 2L_m 的空记忆库"""
    return {stage.stage_index: MemoryStore(stage.stage_index, 4 + 2 * stage.lead_time) for stage in spec.stages}


def insert(store: MemoryStore, rec: MemoryRecord) -> None:
    store.insert(rec)


def retrieve(store: MemoryStore, query: Sequence[float], k: int, tau: float) -> List[SimilarCase]:
    return store.retrieve(query, k, tau)

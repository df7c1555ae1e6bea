"""
回合对话记录（JSON Lines）
"""

import json
import threading

from invbench.exceptions import IngestionError
from invbench.objects import Decision, DecisionContext

__all__ = ["TranscriptWriter"]


class TranscriptWriter:
    """逐行写入每次决策的提示词、原始回复与解析结果"""

    def __init__(self, path, episode: int = 0):
        self.path = path
        self.episode = episode
        self._lock = threading.Lock()
        try:
            self._file = open(path, "w", encoding="UTF-8")
        except OSError as e:
            raise IngestionError(f"无法写入对话记录 {path}: {e}") from e

    def write(self, ctx: DecisionContext, system_prompt: str, prompt: str, decision: Decision) -> None:
        line = json.dumps({
            "episode": self.episode,
            "period": ctx.period,
            "stage": ctx.stage,
            "system": system_prompt,
            "prompt": prompt,
            "reply": decision.raw_reply,
            "order": decision.order,
            "reason": decision.reason,
            "fallback": decision.fallback,
            "similar_cases": len(ctx.similar_cases),
        }, ensure_ascii=False)
        with self._lock:
            self._file.write(line + "\n")
            self._file.flush()

    def close(self) -> None:
        self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

"""
解析远程模型的回复
"""

import json
import re
from typing import Optional, Tuple

__all__ = ["parse_reply"]

_JSON_OBJECT = re.compile(r"\{.*?\}", re.DOTALL)
_LABELED_ORDER = re.compile(r"order(?:\s+quantity)?\"?\s*(?:[:=]|is|of)?\s*(-?\d+)(?![.\d])", re.IGNORECASE)


def parse_reply(text: Optional[str]) -> Optional[Tuple[int, str]]:
    """从回复中取出（订单，理由）

    先按 JSON 对象解析 "order" 与 "reason" 字段；没有合法订单时取最后一个带 order 标签的非负整数，理由为回复全文。
    都没有时返回 None。
    """
    if not text:
        return None
    for candidate in [text.strip()] + _JSON_OBJECT.findall(text):
        try:
            data = json.loads(candidate)
        except ValueError:
            continue
        if isinstance(data, dict) and "order" in data:
            order = _as_order(data["order"])
            if order is not None:
                return order, str(data.get("reason", ""))
    for match in reversed(_LABELED_ORDER.findall(text)):
        order = _as_order(match)
        if order is not None:
            return order, text.strip()
    return None


def _as_order(value) -> Optional[int]:
    if isinstance(value, bool):
        return None
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if isinstance(value, str) and re.fullmatch(r"\s*-?\d+\s*", value):
        value = int(value)
    if isinstance(value, int) and value >= 0:
        return value
    return None

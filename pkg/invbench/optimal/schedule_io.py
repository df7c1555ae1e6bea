"""
订单矩阵的纯文本读写：每行一个阶段，空格分隔 T 个订单，# 开头的行为注释
"""

from invbench.exceptions import IngestionError
from invbench.objects import OrderSchedule

__all__ = ["read_schedule", "write_schedule"]


def read_schedule(path) -> OrderSchedule:
    rows = []
    try:
        with open(path, "r", encoding="UTF-8") as file:
            for line_no, line in enumerate(file, start=1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    row = [int(token) for token in line.split()]
                except ValueError as e:
                    raise IngestionError(f"订单矩阵 {path} 格式错误: {e}", bad_lines=(line_no,)) from e
                if any(v < 0 for v in row):
                    raise IngestionError(f"订单矩阵 {path} 存在负数订单", bad_lines=(line_no,))
                rows.append(row)
    except OSError as e:
        raise IngestionError(f"无法读取订单矩阵 {path}: {e}") from e
    if len({len(row) for row in rows}) > 1:
        raise IngestionError(f"订单矩阵 {path} 各行长度不一致")
    return OrderSchedule.from_rows(rows)


def write_schedule(sched: OrderSchedule, path) -> None:
    try:
        with open(path, "w", encoding="UTF-8") as file:
            file.write(f"# {sched.num_stages} stages x {sched.horizon} periods\n")
            for row in sched.orders:
                file.write(" ".join(str(v) for v in row) + "\n")
    except OSError as e:
        raise IngestionError(f"无法写入订单矩阵 {path}: {e}") from e

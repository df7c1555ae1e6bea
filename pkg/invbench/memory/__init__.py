"""
情景记忆模块
"""

from invbench.memory.log_io import IngestionSummary, export_log, import_log, write_records
from invbench.memory.store import MemoryStore, insert, make_stores, retrieve

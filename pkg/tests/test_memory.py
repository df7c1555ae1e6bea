import json
import math
import random

import pytest

from invbench.constants import RecordSource
from invbench.exceptions import DomainError, IngestionError
from invbench.memory import MemoryStore, export_log, import_log, insert, make_stores, retrieve
from invbench.objects import MemoryRecord


def _record(vec, action=0, reward=0, stage=0, period=0):
    return MemoryRecord(stage=stage, state_vec=tuple(vec), action=action, reward=reward, period=period)


def _brute_force(records, query, k, tau):
    # 整数向量上比较距离的平方，避免浮点误差影响并列排序
    squared = [sum((a - b) ** 2 for a, b in zip(rec.state_vec, query)) for rec in records]
    order = sorted(range(len(records)), key=lambda i: (squared[i], i))[:k]
    return [(records[i], math.sqrt(squared[i])) for i in order if squared[i] < tau ** 2]


def test_retrieve_matches_brute_force():
    rng = random.Random(7)
    store = MemoryStore(0, 4)
    records = []
    for period in range(200):
        rec = _record([rng.randint(0, 5) for _ in range(4)], action=rng.randint(0, 9), period=period)
        insert(store, rec)
        records.append(rec)
    for _ in range(1000):
        query = [rng.randint(0, 5) for _ in range(4)]
        k = rng.randint(0, 10)
        tau = rng.choice([0.0, 1.0, 1.5, 2.0, 3.0, 100.0])
        got = retrieve(store, query, k, tau)
        expected = _brute_force(records, query, k, tau)
        assert [case.record for case in got] == [rec for rec, _ in expected]
        assert [case.distance for case in got] == pytest.approx([d for _, d in expected])


@pytest.mark.parametrize("size, dim", [(1, 4), (37, 6), (1000, 8), (10000, 10)])
def test_retrieve_matches_brute_force_on_real_vectors(size, dim):
    rng = random.Random(size)
    store = MemoryStore(0, dim)
    records = [_record([rng.uniform(-5, 5) for _ in range(dim)], period=period) for period in range(size)]
    for rec in records:
        store.insert(rec)
    for _ in range(20):
        query = [rng.uniform(-5, 5) for _ in range(dim)]
        k = rng.randint(0, 12)
        tau = rng.uniform(0, 12)
        distances = [math.dist(rec.state_vec, query) for rec in records]
        order = sorted(range(size), key=lambda i: (distances[i], i))[:k]
        expected = [i for i in order if distances[i] < tau]
        got = store.retrieve(query, k, tau)
        assert [case.record.period for case in got] == expected
        assert [case.distance for case in got] == pytest.approx([distances[i] for i in expected])


def test_larger_k_or_tau_never_drops_cases():
    rng = random.Random(3)
    store = MemoryStore(0, 4)
    for period in range(300):
        store.insert(_record([rng.uniform(0, 4) for _ in range(4)], period=period))
    for _ in range(200):
        query = [rng.uniform(0, 4) for _ in range(4)]
        k, tau = rng.randint(0, 8), rng.uniform(0, 3)
        base = {case.record.period for case in store.retrieve(query, k, tau)}
        wider_k = {case.record.period for case in store.retrieve(query, k + rng.randint(0, 5), tau)}
        wider_tau = {case.record.period for case in store.retrieve(query, k, tau + rng.uniform(0, 2))}
        assert base <= wider_k
        assert base <= wider_tau


def test_threshold_is_strict():
    store = MemoryStore(0, 2)
    store.insert(_record([2, 0]))
    assert store.retrieve([0, 0], k=6, tau=2.0) == []
    assert len(store.retrieve([0, 0], k=6, tau=2.0001)) == 1


def test_ties_keep_insertion_order():
    store = MemoryStore(0, 2)
    for action, vec in enumerate([[1, 0], [0, 1], [-1, 0], [0, -1]]):
        store.insert(_record(vec, action=action))
    cases = store.retrieve([0, 0], k=3, tau=2.0)
    assert [case.record.action for case in cases] == [0, 1, 2]


def test_new_records_are_visible_immediately():
    store = MemoryStore(0, 2)
    assert store.retrieve([0, 0], k=6, tau=2.0) == []
    store.insert(_record([0, 0], action=3))
    assert [case.record.action for case in store.retrieve([0, 0], k=6, tau=2.0)] == [3]
    store.insert(_record([0, 1], action=4))
    assert [case.record.action for case in store.retrieve([0, 0], k=6, tau=2.0)] == [3, 4]


def test_invalid_arguments():
    store = MemoryStore(0, 2)
    with pytest.raises(DomainError):
        store.insert(_record([1, 2, 3]))
    with pytest.raises(DomainError):
        store.retrieve([0, 0], k=-1, tau=2.0)
    with pytest.raises(DomainError):
        store.retrieve([0, 0, 0], k=1, tau=2.0)
    assert store.retrieve([0, 0], k=0, tau=2.0) == []


def test_make_stores_dimensions(const_uni):
    stores = make_stores(const_uni)
    assert sorted(stores) == [0, 1, 2, 3]
    assert {store.dim for store in stores.values()} == {8}


def test_export_then_import(tmp_path, const_uni):
    stores = make_stores(const_uni)
    stores[0].insert(_record(range(8), action=4, reward=-3, stage=0, period=1))
    stores[2].insert(_record([1] * 8, action=0, reward=5, stage=2, period=2))
    path = tmp_path / "memory.jsonl"
    assert export_log(stores, path) == 2

    loaded = make_stores(const_uni)
    summary = import_log(loaded, path)
    assert summary.counts == {0: 1, 1: 0, 2: 1, 3: 0}
    assert summary.rejected == ()
    assert loaded[0].records == stores[0].records
    assert loaded[2].records[0].source == RecordSource.LIVE


def _write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="UTF-8")


def _line(stage=0, dim=8, action=1):
    return json.dumps({"stage": stage, "episode": 0, "period": 1, "state_vec": [0] * dim, "action": action,
                       "reward": -1, "source": "rl_log"})


def test_import_skips_bad_lines(tmp_path, const_uni):
    path = tmp_path / "memory.jsonl"
    _write_lines(path, [_line(), "not json", _line(dim=3), _line(action=-2), _line(stage=9), _line(stage=1)])
    stores = make_stores(const_uni)
    summary = import_log(stores, path)
    assert summary.rejected == (2, 3, 4, 5)
    assert summary.counts[0] == 1 and summary.counts[1] == 1
    assert stores[1].records[0].source == RecordSource.RL_LOG


def test_strict_import_inserts_nothing(tmp_path, const_uni):
    path = tmp_path / "memory.jsonl"
    _write_lines(path, [_line(), "{\"stage\": 0}"])
    stores = make_stores(const_uni)
    with pytest.raises(IngestionError) as info:
        import_log(stores, path, strict=True)
    assert info.value.bad_lines == (2,)
    assert len(stores[0]) == 0


def test_missing_log(tmp_path, const_uni):
    with pytest.raises(IngestionError):
        import_log(make_stores(const_uni), tmp_path / "missing.jsonl")


def test_undecodable_line_is_rejected(tmp_path, const_uni):
    path = tmp_path / "memory.jsonl"
    path.write_bytes(_line().encode("UTF-8") + b"\n\xff\xfe garbage\n" + _line(stage=2).encode("UTF-8") + b"\n")
    stores = make_stores(const_uni)
    summary = import_log(stores, path)
    assert summary.rejected == (2,)
    assert summary.counts == {0: 1, 1: 0, 2: 1, 3: 0}

    with pytest.raises(IngestionError) as info:
        import_log(make_stores(const_uni), path, strict=True)
    assert info.value.bad_lines == (2,)

import json

import pytest

from invbench.agents import PromptBundle, ScriptedBackend, bundle_for, run_episode, run_round
from invbench.agents.backends import DecisionBackend
from invbench.agents.transcript import TranscriptWriter
from invbench.constants import AgentKind, RecordSource
from invbench.env import reset
from invbench.exceptions import ConfigurationError, ProtocolError
from invbench.memory import MemoryStore, make_stores
from invbench.objects import Decision, MemoryConfig
from invbench.optimal import rollout_policy
from invbench.policies import make_policy


class _RecordingBackend(DecisionBackend):
    """记录收到的上下文，订单恒为 1"""

    name = "recording"

    def __init__(self):
        self.contexts = []
        self.prompts = []

    def decide(self, prompt, ctx, system_prompt=""):
        self.contexts.append(ctx)
        self.prompts.append(prompt)
        return Decision(order=1, reason="constant", raw_reply='{"order": 1}')


def test_scripted_episode_matches_direct_rollout(const_uni):
    for kind in (AgentKind.BASE_STOCK, AgentKind.TRACKING_DEMAND, AgentKind.SAFETY_STOCK):
        policy = make_policy(kind.value, const_uni)
        result = run_episode(const_uni, ScriptedBackend(policy), PromptBundle.load())
        direct = rollout_policy(const_uni, policy)
        assert result.total_reward == direct.total_reward()
        assert result.state.orders == direct.orders


def test_safety_stock_episode(const_uni):
    backend = ScriptedBackend(make_policy(AgentKind.SAFETY_STOCK.value, const_uni))
    result = run_episode(const_uni, backend, PromptBundle.load())
    assert result.total_reward == -120
    assert sum(result.stage_rewards) == -120
    assert len(result.decisions) == 48
    assert result.fallback_count == 0


def test_memory_grows_by_one_record_per_period(const_uni):
    stores = make_stores(const_uni)
    backend = _RecordingBackend()
    memory = MemoryConfig(enabled=True, k=6, tau=2.0)
    result = run_episode(const_uni, backend, bundle_for(AgentKind.AIMRM), memory=memory, stores=stores)

    assert all(len(store) == const_uni.horizon for store in stores.values())
    assert all(rec.source == RecordSource.LIVE for rec in stores[0].records)
    assert result.retrieval_count == 48
    # 周期 1 的记忆库为空
    assert all(ctx.similar_cases == () for ctx in backend.contexts[:4])
    # 检索到的都是更早周期的记录，且距离严格小于 tau
    for ctx in backend.contexts[4:]:
        assert all(case.record.period < ctx.period and case.distance < 2.0 for case in ctx.similar_cases)
    first = stores[0].records[0]
    assert first.state_vec == (12, 0, 0, 2, 0, 0, 0, 0)
    assert first.action == 1
    assert first.reward == result.state.profits[0][1]


def test_memory_is_shared_across_episodes(const_uni):
    stores = make_stores(const_uni)
    memory = MemoryConfig(enabled=True)
    for episode in range(2):
        run_episode(const_uni, _RecordingBackend(), bundle_for(AgentKind.AIMRM), memory=memory, stores=stores,
                    episode=episode)
    assert len(stores[0]) == 24
    assert {rec.episode for rec in stores[0].records} == {0, 1}


def test_round_order_and_downstream_orders(const_uni):
    env = reset(const_uni)
    backend = _RecordingBackend()
    actions = run_round(env, None, backend, PromptBundle.load(), 1)
    assert actions == {0: 1, 1: 1, 2: 1, 3: 1}
    assert [ctx.stage for ctx in backend.contexts] == [0, 1, 2, 3]
    assert [ctx.downstream_order for ctx in backend.contexts] == [4, 1, 1, 1]
    assert [ctx.prod_capacity for ctx in backend.contexts] == [20, 20, 20, None]
    assert env.period == 1


def test_round_protocol(const_uni):
    env = reset(const_uni)
    with pytest.raises(ProtocolError):
        run_round(env, None, _RecordingBackend(), PromptBundle.load(), 2)
    env.submit_order(0, 1)
    with pytest.raises(ProtocolError):
        run_round(env, None, _RecordingBackend(), PromptBundle.load(), 1)


def test_memory_configuration_errors(const_uni):
    backend = _RecordingBackend()
    with pytest.raises(ConfigurationError):
        run_episode(const_uni, backend, PromptBundle.load(), memory=MemoryConfig(enabled=True, k=-1))
    with pytest.raises(ConfigurationError):
        run_episode(const_uni, backend, PromptBundle.load(), memory=MemoryConfig(enabled=True),
                    stores={0: MemoryStore(0, 3)})
    assert backend.contexts == []


def test_transcript(tmp_path, const_uni):
    path = tmp_path / "transcript.jsonl"
    run_episode(const_uni, _RecordingBackend(), PromptBundle.load(), transcript_path=str(path), episode=3)
    lines = [json.loads(line) for line in path.read_text(encoding="UTF-8").splitlines()]
    assert len(lines) == 48
    assert lines[0]["episode"] == 3
    assert (lines[0]["period"], lines[0]["stage"], lines[0]["order"]) == (1, 0, 1)
    assert lines[0]["system"].startswith("You are the retailer")

    with TranscriptWriter(tmp_path / "other.jsonl") as writer:
        assert writer.episode == 0


def test_retrieved_cases_match_store_snapshot(const_uni):
    stores = make_stores(const_uni)
    backend = _RecordingBackend()
    run_episode(const_uni, backend, bundle_for(AgentKind.AIMRM), memory=MemoryConfig(enabled=True, k=6, tau=2.0),
                stores=stores)
    for ctx in backend.contexts:
        snapshot = MemoryStore(ctx.stage, stores[ctx.stage].dim)
        for rec in stores[ctx.stage].records:
            if rec.period < ctx.period:
                snapshot.insert(rec)
        assert ctx.similar_cases == tuple(snapshot.retrieve(ctx.observation.vector(), 6, 2.0))

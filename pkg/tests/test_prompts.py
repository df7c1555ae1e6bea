import json

import pytest

from invbench.agents import PromptBundle, build_prompt, build_system_prompt, bundle_for, describe_demand, parse_reply
from invbench.agents.prompts import TEMPLATE_NAMES, render_template
from invbench.constants import AgentKind
from invbench.env import reset
from invbench.exceptions import ConfigurationError, TemplateError
from invbench.objects import DecisionContext, DemandModel, MemoryRecord, SimilarCase


def _context(spec, stage=1, cases=()):
    obs = reset(spec).observe(stage)
    return DecisionContext(observation=obs, period=1, stage=stage, num_stages=spec.num_stages, similar_cases=cases,
                           downstream_order=4, demand_description="demand is 4", prod_capacity=20)


def test_builtin_templates_load():
    bundle = PromptBundle.load()
    assert set(bundle.templates) == set(TEMPLATE_NAMES)
    with pytest.raises(ConfigurationError):
        bundle.template("missing")


def test_optional_sections_follow_agent_kind(const_uni):
    ctx = _context(const_uni)
    plain = build_prompt(bundle_for(AgentKind.INVAGENT), ctx)
    step = build_prompt(bundle_for(AgentKind.INVAGENT_STEP), ctx)
    step_ss = build_prompt(bundle_for(AgentKind.INVAGENT_STEP_SS), ctx)
    memory = build_prompt(bundle_for(AgentKind.AIMRM), ctx)

    assert "Lead Time: 2 round(s)" in plain
    assert "Receive delivery" not in plain and "Receive delivery" in step
    assert "safety-stock" not in step and "safety-stock" in step_ss and "(20)" in step_ss
    assert "similar_cases: []" in memory and "similar_cases" not in step_ss
    assert plain.rstrip().endswith("}")


def test_prompt_is_deterministic(const_uni):
    bundle = bundle_for(AgentKind.AIMRM)
    record = MemoryRecord(stage=1, state_vec=(12, 0, 0, 2, 0, 0, 0, 0), action=4, reward=-8)
    ctx = _context(const_uni, cases=(SimilarCase(record=record, distance=0.0),))
    first = build_prompt(bundle, ctx)
    assert first == build_prompt(bundle, ctx)
    listed = first.split("similar_cases: ", 1)[1].splitlines()[0]
    assert json.loads(listed) == [{"state_vec": [12, 0, 0, 2, 0, 0, 0, 0], "action": 4, "reward": -8,
                                   "distance": 0.0}]


def test_downstream_order_wording(const_uni):
    bundle = bundle_for(AgentKind.INVAGENT)
    assert "Customer demand at the retailer in this round is 4" in build_prompt(bundle, _context(const_uni, 0))
    assert "stage 0) ordered 4 unit(s)" in build_prompt(bundle, _context(const_uni, 1))


def test_system_prompt_roles(const_uni):
    bundle = PromptBundle.load()
    text = build_system_prompt(bundle, _context(const_uni, stage=3))
    assert text.startswith("You are the manufacturer, stage 3 of 4")


def test_describe_demand_groups_runs():
    bundle = PromptBundle.load()
    assert describe_demand(bundle, DemandModel.constant(4), 12).endswith("4 units in rounds 1-12.")
    text = describe_demand(bundle, DemandModel.increasing(), 12)
    assert "3 units in rounds 1-3, 4 units in rounds 4-6" in text
    text = describe_demand(bundle, DemandModel.explicit([1, 2]), 2)
    assert text.endswith("1 units in round 1, 2 units in round 2.")


def test_unbound_placeholder():
    with pytest.raises(TemplateError) as info:
        render_template("order {quantity}", {}, "custom")
    assert info.value.placeholder == "quantity"
    assert info.value.template_name == "custom"


def test_custom_template_dir(tmp_path, const_uni):
    (tmp_path / "reply.txt").write_text("Answer with {{\"order\": n}} only.", encoding="UTF-8")
    bundle = PromptBundle.load(str(tmp_path))
    assert build_prompt(bundle, _context(const_uni)).endswith("Answer with {\"order\": n} only.")
    (tmp_path / "reply.txt").write_text("Use {unknown_field}.", encoding="UTF-8")
    with pytest.raises(TemplateError):
        build_prompt(PromptBundle.load(str(tmp_path)), _context(const_uni))


@pytest.mark.parametrize("text, expected", [
    ('{"order": 5, "reason": "cover lead time"}', (5, "cover lead time")),
    ('Sure.\n{"order": "7", "reason": "r"}\nThanks', (7, "r")),
    ('{"order": 3.0}', (3, "")),
    ("My order quantity is 9 units", (9, "My order quantity is 9 units")),
    ('{"order": -1} then again, order is 4', (4, '{"order": -1} then again, order is 4')),
    ("order: 6, no wait, order: -3", (6, "order: 6, no wait, order: -3")),
])
def test_parse_reply(text, expected):
    assert parse_reply(text) == expected


@pytest.mark.parametrize("text", ["", "no number here", '{"order": -2}', '{"order": 1.5}', '{"order": true}'])
def test_parse_reply_rejects(text):
    assert parse_reply(text) is None

"""
提示词组装

模板以文本文件的形式存放在 templates 目录中，组装顺序为：决策提示词、步骤说明、安全库存说明、记忆使用说明、回复格式。
"""

import dataclasses
import importlib.resources
import itertools
import json
import os
import string
from typing import Dict, Iterable, List, Mapping, Optional

from invbench.constants import AgentKind, DemandKind
from invbench.env import demand_series
from invbench.exceptions import ConfigurationError, TemplateError
from invbench.objects import DecisionContext, DemandModel, SimilarCase

__all__ = ["TEMPLATE_NAMES", "PromptBundle", "bundle_for", "build_prompt", "build_system_prompt",
           "describe_demand", "render_template", "render_similar_cases"]

TEMPLATE_NAMES = (
    "system", "decision", "step_description", "safety_stock", "memory_usage", "reply",
    "downstream_order", "customer_order",
    "demand_constant", "demand_increasing", "demand_decreasing", "demand_explicit",
)

# 4 个阶段时各阶段的角色名称
_ROLE_NAMES = ("retailer", "wholesaler", "distributor", "manufacturer")

_FORMATTER = string.Formatter()


@dataclasses.dataclass(slots=True, frozen=True, eq=False)
class PromptBundle:
    """提示词模板集合及各可选部分的开关"""

    # 模板名称 -> 模板文本
    templates: Mapping[str, str] = dataclasses.field(kw_only=True)

    # 是否插入步骤说明
    include_step_description: bool = dataclasses.field(kw_only=True, default=False)

    # 是否插入安全库存说明
    include_safety_stock: bool = dataclasses.field(kw_only=True, default=False)

    # 是否插入记忆使用说明
    include_memory_usage: bool = dataclasses.field(kw_only=True, default=False)

    @classmethod
    def load(cls, template_dir: Optional[str] = None, **flags) -> "PromptBundle":
        """读取模板；template_dir 中存在的同名文件覆盖内置模板"""
        root = importlib.resources.files("invbench.agents") / "templates"
        templates: Dict[str, str] = {}
        for name in TEMPLATE_NAMES:
            custom = os.path.join(template_dir, f"{name}.txt") if template_dir else None
            if custom and os.path.isfile(custom):
                with open(custom, "r", encoding="UTF-8") as file:
                    templates[name] = file.read()
            else:
                templates[name] = (root / f"{name}.txt").read_text(encoding="UTF-8")
        return cls(templates=templates, **flags)

    def template(self, name: str) -> str:
        if name not in self.templates:
            raise ConfigurationError(f"缺少提示词模板: {name}")
        return self.templates[name]


def bundle_for(kind: AgentKind, template_dir: Optional[str] = None) -> PromptBundle:
    """按智能体类型设置提示词的可选部分"""
    return PromptBundle.load(
        template_dir,
        include_step_description=kind not in (AgentKind.INVAGENT,),
        include_safety_stock=kind == AgentKind.INVAGENT_STEP_SS,
        include_memory_usage=kind.uses_memory,
    )


def render_template(template: str, bindings: Mapping[str, object], name: str = "") -> str:
    """替换模板中的全部占位符，存在未绑定的占位符时抛出 TemplateError"""
    for _, field, _, _ in _FORMATTER.parse(template):
        if field is not None and field not in bindings:
            raise TemplateError(field, name)
    return template.format(**bindings).strip()


def render_similar_cases(cases: Iterable[SimilarCase]) -> str:
    return json.dumps([{
        "state_vec": list(case.record.state_vec),
        "action": case.record.action,
        "reward": case.record.reward,
        "distance": round(case.distance, 4),
    } for case in cases])


def describe_demand(bundle: PromptBundle, model: DemandModel, horizon: int) -> str:
    """需求说明：把相同需求的连续周期合并为“x units in rounds a-b”"""
    segments = []
    period = 1
    for value, group in itertools.groupby(demand_series(model, horizon)):
        length = len(list(group))
        last = period + length - 1
        rounds = f"round {period}" if length == 1 else f"rounds {period}-{last}"
        segments.append(f"{value} units in {rounds}")
        period = last + 1
    name = {
        DemandKind.CONSTANT: "demand_constant",
        DemandKind.INCREASING: "demand_increasing",
        DemandKind.DECREASING: "demand_decreasing",
        DemandKind.EXPLICIT: "demand_explicit",
    }[model.kind]
    return render_template(bundle.template(name), {"demand_schedule": ", ".join(segments)}, name)


def _context_bindings(bundle: PromptBundle, ctx: DecisionContext) -> Dict[str, object]:
    obs = ctx.observation
    bindings: Dict[str, object] = {
        "period": ctx.period,
        "stage": ctx.stage,
        "num_stages": ctx.num_stages,
        "lead_time": obs.lead_time,
        "inventory": obs.inventory,
        "backlog": obs.backlog,
        "upstream_backlog": obs.upstream_backlog,
        "sales": list(obs.sales_history),
        "deliveries": list(obs.deliveries),
        "demand_description": ctx.demand_description,
        "similar_cases": render_similar_cases(ctx.similar_cases),
        "prod_capacity": "unlimited" if ctx.prod_capacity is None else ctx.prod_capacity,
    }
    if ctx.downstream_order is None:
        bindings["downstream_order_description"] = ""
    else:
        name = "customer_order" if ctx.stage == 0 else "downstream_order"
        bindings["downstream_order_description"] = render_template(
            bundle.template(name), {"downstream_stage": ctx.stage - 1, "downstream_order": ctx.downstream_order},
            name)
    return bindings


def build_prompt(bundle: PromptBundle, ctx: DecisionContext) -> str:
    """组装用户提示词（相同输入总是得到相同文本）"""
    bindings = _context_bindings(bundle, ctx)
    names: List[str] = ["decision"]
    if bundle.include_step_description:
        names.append("step_description")
    if bundle.include_safety_stock:
        names.append("safety_stock")
    if bundle.include_memory_usage:
        names.append("memory_usage")
    names.append("reply")
    return "\n\n".join(render_template(bundle.template(name), bindings, name) for name in names)


def build_system_prompt(bundle: PromptBundle, ctx: DecisionContext) -> str:
    """角色提示词"""
    if ctx.num_stages == len(_ROLE_NAMES):
        roles = list(_ROLE_NAMES)
    else:
        roles = [f"stage {m}" for m in range(ctx.num_stages)]
    bindings = {
        "role": roles[ctx.stage],
        "stage": ctx.stage,
        "num_stages": ctx.num_stages,
        "chain": ", ".join(roles),
    }
    return render_template(bundle.template("system"), bindings, "system")

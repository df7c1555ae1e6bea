"""
决策智能体：提示词组装、决策后端与单周期决策流程
"""

from invbench.agents.backends import DecisionBackend, RemoteBackend, ScriptedBackend, decide, make_backend
from invbench.agents.loop import run_episode, run_round
from invbench.agents.prompts import (
    PromptBundle,
    build_prompt,
    build_system_prompt,
    bundle_for,
    describe_demand,
    render_template
)
from invbench.agents.reply_parser import parse_reply
from invbench.agents.transcript import TranscriptWriter

"""
决策后端：脚本策略包装与远程语言模型客户端
"""

import logging
import os
import threading
import time
from typing import Callable, Optional

import openai

from invbench.agents.reply_parser import parse_reply
from invbench.exceptions import BackendError, ConfigurationError, DomainError
from invbench.objects import BackendConfig, Decision, DecisionContext, Observation

__all__ = ["DecisionBackend", "ScriptedBackend", "RemoteBackend", "make_backend", "decide"]

logger = logging.getLogger(__name__)


class DecisionBackend:
    """决策后端的基类"""

    name: str = "backend"

    def decide(self, prompt: str, ctx: DecisionContext, system_prompt: str = "") -> Decision:
        raise NotImplementedError()

    def close(self) -> None:
        """释放后端持有的资源"""


class ScriptedBackend(DecisionBackend):
    """把策略（观测 -> 订单）包装为决策后端，忽略提示词"""

    def __init__(self, policy: Callable[[Observation], int], name: Optional[str] = None):
        self.policy = policy
        self.name = name or getattr(policy, "name", None) or getattr(policy, "__name__", "scripted")

    def decide(self, prompt: str, ctx: DecisionContext, system_prompt: str = "") -> Decision:
        order = self.policy(ctx.observation)
        if isinstance(order, bool) or not isinstance(order, int) or order < 0:
            raise DomainError(f"策略 {self.name} 给出了非法订单: {order!r}")
        return Decision(order=order, reason=self.name)


class RemoteBackend(DecisionBackend):
    """
    OpenAI 兼容的对话补全接口。

    每次决策最多尝试 max_retries + 1 次；请求失败或回复无法解析时重试，全部失败后使用降级策略并标记 fallback。
    所有实例共享同一个后端配置时，通过信号量限制同时进行中的请求数。
    """

    def __init__(self, config: BackendConfig, fallback: Callable[[Observation], int],
                 client: Optional[openai.OpenAI] = None):
        self._check_config(config)
        self.config = config
        self.fallback = fallback
        self.name = f"remote:{config.model}"
        if client is None:
            api_key = os.environ.get(config.api_key_env)
            if not api_key:
                raise BackendError(f"缺少远程后端的访问凭证：环境变量 {config.api_key_env} 未设置")
            client = openai.OpenAI(base_url=config.endpoint, api_key=api_key, timeout=config.timeout,
                                   max_retries=0)
        self.client = client
        self._semaphore = threading.BoundedSemaphore(config.max_concurrency)

    def decide(self, prompt: str, ctx: DecisionContext, system_prompt: str = "") -> Decision:
        messages = []
        if system_prompt:
            messages.append({"role": "system", "content": system_prompt})
        messages.append({"role": "user", "content": prompt})

        reply: Optional[str] = None
        for attempt in range(self.config.max_retries + 1):
            try:
                with self._semaphore:
                    response = self.client.chat.completions.create(
                        model=self.config.model,
                        messages=messages,
                        reasoning_effort=self.config.reasoning_effort.value,
                    )
                reply = _reply_text(response)
            except openai.APIError as e:
                logger.warning("远程请求失败（阶段 %d，周期 %d，第 %d 次）: %s", ctx.stage, ctx.period, attempt + 1, e)
                if attempt < self.config.max_retries and self.config.retry_delay > 0:
                    time.sleep(self.config.retry_delay * 2 ** attempt)
                continue
            parsed = parse_reply(reply) if reply is not None else None
            if parsed is not None:
                order, reason = parsed
                return Decision(order=order, reason=reason, raw_reply=reply)
            logger.warning("无法解析远程回复（阶段 %d，周期 %d，第 %d 次）: %.200s", ctx.stage, ctx.period, attempt + 1,
                           reply)

        order = self.fallback(ctx.observation)
        logger.warning("阶段 %d 周期 %d 使用降级策略，订单 %d", ctx.stage, ctx.period, order)
        return Decision(order=order, reason=f"fallback: {getattr(self.fallback, 'name', 'policy')}", fallback=True,
                        raw_reply=reply)

    def close(self) -> None:
        self.client.close()

    @staticmethod
    def _check_config(config: BackendConfig) -> None:
        if not config.endpoint or not config.model:
            raise ConfigurationError("远程后端需要同时配置 endpoint 与 model")
        if config.max_retries < 0 or config.max_concurrency < 1:
            raise ConfigurationError("max_retries 必须非负，max_concurrency 必须为正整数")


def make_backend(config: BackendConfig, fallback: Optional[Callable[[Observation], int]] = None) -> DecisionBackend:
    """按配置构造决策后端

    Parameters
    ----------
    config : BackendConfig
        后端配置
    fallback : Optional[Callable[[Observation], int]], default = None
        远程后端的降级策略
    """
    if config.kind == "scripted":
        if config.policy is None:
            raise ConfigurationError("脚本后端需要绑定策略")
        return ScriptedBackend(config.policy)
    if config.kind == "remote":
        if fallback is None:
            raise BackendError("远程后端需要降级策略")
        return RemoteBackend(config, fallback)
    raise ConfigurationError(f"未知的后端类型: {config.kind}")


def decide(backend: DecisionBackend, prompt: str, ctx: DecisionContext, system_prompt: str = "") -> Decision:
    return backend.decide(prompt, ctx, system_prompt)


def _reply_text(response) -> Optional[str]:
    """取第一条回复的文本；choices 为空或缺少 message 时返回 None，按无法解析处理"""
    choices = getattr(response, "choices", None)
    if not choices:
        return None
    message = getattr(choices[0], "message", None)
    if message is None:
        return None
    return message.content or ""

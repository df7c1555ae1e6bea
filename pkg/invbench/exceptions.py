"""
invbench 异常类

所有异常均继承自 InvBenchError；每个异常类携带命令行退出码 exit_code。

InvBenchError
|__Error
   |__ConfigurationError
   |  |__TemplateError
   |__DomainError
   |  |__UndefinedMetricError
   |__ProtocolError
   |__BackendError
   |__IngestionError
"""

__all__ = [
    "InvBenchError",
    "Error",
    "ConfigurationError",
    "TemplateError",
    "DomainError",
    "UndefinedMetricError",
    "ProtocolError",
    "BackendError",
    "IngestionError",
]


class InvBenchError(Exception):
    """invbench 异常的基类"""

    exit_code: int = 1


class Error(InvBenchError):
    """所有错误类异常的基类，可以使用一个 except 子句捕获全部错误"""


class ConfigurationError(Error):
    """配置错误：场景参数不合法、场景名称未知、运行配置不合法等"""

    exit_code = 2


class TemplateError(ConfigurationError):
    """提示词模板错误：模板中存在没有绑定取值的占位符"""

    def __init__(self, placeholder: str, template_name: str = ""):
        self.placeholder = placeholder
        self.template_name = template_name
        where = f"（模板 {template_name}）" if template_name else ""
        super().__init__(f"占位符 {{{placeholder}}} 没有绑定取值{where}")


class DomainError(Error):
    """取值域错误：订单为负数或非整数、向量维度不匹配、周期超出范围等"""

    exit_code = 2


class UndefinedMetricError(DomainError):
    """指标无定义：最优值为 0 时相对差距没有定义"""


class ProtocolError(Error):
    """调用顺序错误：重复提交订单、未提交全部订单时推进周期、回合未结束时计算总收益等"""

    exit_code = 3


class BackendError(Error):
    """决策后端错误：远程后端不可用且无法降级"""

    exit_code = 4


class IngestionError(Error):
    """读写错误：记忆日志缺失或格式错误、场景文件读写失败等"""

    exit_code = 5

    def __init__(self, message: str, bad_lines: tuple = ()):
        self.bad_lines = tuple(bad_lines)
        if self.bad_lines:
            message = f"{message}（错误行号：{', '.join(str(n) for n in self.bad_lines)}）"
        super().__init__(message)

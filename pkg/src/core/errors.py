"""
错误码与异常层级。

约定：
- 所有领域异常继承 TopologyError（本身是 ValueError），CLI 按类型映射退出码；
- witness 字段携带可机读的反例（点集、单形对、胞腔等），用于报告与复查；
- LemmaViolation / ConjectureAlarm 表示"检查跑完但发现违例"，其余表示"无法运行"。
"""

from __future__ import annotations

from enum import Enum
from typing import Any


class KitErrorCode(Enum):
    """领域错误码。"""

    EMPTY_INPUT = "empty_input"  # 空点集 / 空链
    DIMENSION_MISMATCH = "dimension_mismatch"  # 环境维数或链维数不一致
    CAP_EXCEEDED = "cap_exceeded"  # 超过枚举上限
    DEGENERATE = "degenerate"  # 退化单形 / 退化锥
    NON_TRANSVERSAL = "non_transversal"  # 交点不横截
    POSITION = "position"  # 一般位置条件不满足
    PRECONDITION = "precondition"  # 其他前置条件
    LEMMA_HYPOTHESIS = "lemma_hypothesis"  # 多面体链引理的假设不成立
    CONJECTURE_ALARM = "conjecture_alarm"  # 猜想反例警报
    PARAMETER_RANGE = "parameter_range"  # 参数超出定理范围
    PLAN = "plan"  # 连接方案引用错误
    MALFORMED_FILE = "malformed_file"  # 输入文件格式错误


class TopologyError(ValueError):
    """领域异常基类。"""

    code: KitErrorCode = KitErrorCode.PRECONDITION

    def __init__(self, message: str, *, witness: Any = None) -> None:
        super().__init__(message)
        self.message = message
        self.witness = witness


class CapExceededError(TopologyError):
    code = KitErrorCode.CAP_EXCEEDED


class DegenerateError(TopologyError):
    code = KitErrorCode.DEGENERATE


class NonTransversalError(TopologyError):
    code = KitErrorCode.NON_TRANSVERSAL


class PositionError(TopologyError):
    code = KitErrorCode.POSITION


class PreconditionError(TopologyError):
    code = KitErrorCode.PRECONDITION


class DimensionMismatchError(TopologyError):
    code = KitErrorCode.DIMENSION_MISMATCH


class EmptyInputError(TopologyError):
    code = KitErrorCode.EMPTY_INPUT


class LemmaViolation(TopologyError):
    """
    多面体链引理假设不成立。

    hypothesis=1：两胞腔的交不是落在双方边界里的低维多面体，witness 为胞腔对；
    hypothesis=2：某个 (c-1) 胞腔的边界关联数为奇数，witness 为该胞腔。
    """

    code = KitErrorCode.LEMMA_HYPOTHESIS

    def __init__(self, message: str, *, hypothesis: int, witness: Any = None) -> None:
        super().__init__(message, witness=witness)
        self.hypothesis = hypothesis


class ConjectureAlarm(TopologyError):
    code = KitErrorCode.CONJECTURE_ALARM


class ParameterRangeError(TopologyError):
    code = KitErrorCode.PARAMETER_RANGE


class PlanError(TopologyError):
    code = KitErrorCode.PLAN


class MalformedFileError(TopologyError):
    """输入文件无法解析：记录文件路径、字段位置与（若有）行号。"""

    code = KitErrorCode.MALFORMED_FILE

    def __init__(self, message: str, *, path: str, location: str | None = None, line: int | None = None) -> None:
        super().__init__(message)
        self.path = path
        self.location = location
        self.line = line

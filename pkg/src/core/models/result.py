"""命令执行结果。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

CommandStatus = Literal["ok", "violation", "error"]
"""命令状态：ok=成功，violation=检查运行完毕但不成立，error=无法运行"""

EXIT_CODES: dict[str, int] = {"ok": 0, "violation": 2, "error": 1}


@dataclass(slots=True)
class CommandResult:
    """
    CLI 子命令结果。

    - payload: 子命令相关的 JSON 数据（写入 --out 或 stdout）；
    - witness: violation 时的可复查反例（与对应检查子命令的输入格式一致）；
    - transcript: 确定性的日志行；
    - extras: 附加输出（文件后缀 -> JSON），如 reduce 的 provenance。
    """

    status: CommandStatus
    payload: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, Any] | None = None
    transcript: list[str] = field(default_factory=list)
    extras: dict[str, dict[str, Any]] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

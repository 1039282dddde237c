from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager

from rich.console import Console

# 关闭 markup/高亮：输出逐字节稳定；日志走 stderr，stdout 只留 JSON 结果
console = Console(stderr=True, markup=False, highlight=False, soft_wrap=True)

_transcript: list[str] | None = None


def log(msg: str) -> None:
    """轻量日志封装：打印到控制台，并在 capture_transcript() 内同步记录。"""

    console.print(msg)
    if _transcript is not None:
        _transcript.extend(msg.splitlines() or [""])


@contextmanager
def capture_transcript() -> Iterator[list[str]]:
    """
    收集 with 块内所有 log() 行，供 CommandResult.transcript 使用。

    示例：
        with capture_transcript() as lines:
            log("[Job:boundary] 开始")
        # lines == ["[Job:boundary] 开始"]
    """
    global _transcript
    previous = _transcript
    lines: list[str] = []
    _transcript = lines
    try:
        yield lines
    finally:
        _transcript = previous

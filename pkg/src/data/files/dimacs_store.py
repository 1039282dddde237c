from __future__ import annotations

from pathlib import Path

from src.core.errors import MalformedFileError
from src.core.models.reduce import CnfFormula
from src.core.rules.reduce import format_dimacs, parse_dimacs


class CnfFileStore:
    """DIMACS CNF 文件仓储：读取（带行号诊断）与写出。"""

    def read(self, path: str | Path) -> CnfFormula:
        """
        Raises:
            MalformedFileError: 文件不可读或 DIMACS 格式错误。
        """
        p = Path(path)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedFileError(f"无法读取文件：{e.strerror or e}", path=str(p)) from None
        return parse_dimacs(text, path=str(p))

    def write(self, path: str | Path, phi: CnfFormula) -> Path:
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(format_dimacs(phi), encoding="utf-8")
        return p

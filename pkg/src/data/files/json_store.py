from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from src.core.errors import MalformedFileError

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class JsonFileStore:
    """
    JSON 文件仓储。

    职责：按 Schema 读取并校验输入文件、以规范格式写出结果。
    输出固定 indent=2、ensure_ascii=False、末尾换行，相同内容逐字节一致。
    """

    def read(self, path: str | Path, model: type[M]) -> M:
        """
        读取并校验 JSON 文件。

        Raises:
            MalformedFileError: 文件不存在、JSON 语法错误（带行号）或字段校验失败（带字段路径）。
        """
        p = Path(path)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as e:
            raise MalformedFileError(f"无法读取文件：{e.strerror or e}", path=str(p)) from None
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedFileError(f"JSON 语法错误：{e.msg}", path=str(p), line=e.lineno) from None
        try:
            return model.model_validate(raw)
        except ValidationError as e:
            first = e.errors()[0]
            location = ".".join(str(part) for part in first["loc"]) or "<root>"
            logger.error(f"[JsonStore] 校验失败: {p} {location} - {first['msg']}")
            raise MalformedFileError(f"字段 {location} 不合法：{first['msg']}", path=str(p), location=location) from None

    def dumps(self, data: BaseModel | dict[str, Any]) -> str:
        """规范 JSON 文本。"""
        if isinstance(data, BaseModel):
            data = data.model_dump(mode="json")
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def write(self, path: str | Path, data: BaseModel | dict[str, Any]) -> Path:
        """写出 JSON 文件（自动创建上级目录），返回路径。"""
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(self.dumps(data), encoding="utf-8")
        logger.debug(f"[JsonStore] 写出 {p}")
        return p

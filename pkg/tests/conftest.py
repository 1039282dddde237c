from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest

from src.data.files.json_store import JsonFileStore


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("PLKIT_SGP_CAP", "PLKIT_ARRANGEMENT_CAP", "PLKIT_APEX_BASE", "PLKIT_APEX_RETRIES", "PLKIT_SEED"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def store() -> JsonFileStore:
    return JsonFileStore()


@pytest.fixture
def write_json(tmp_path: Path):
    def _write(name: str, data: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")
        return str(path)

    return _write

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

from src.core.config import KitSettings
from src.core.dependency import dependency, override, registered_names
from src.core.errors import CapExceededError, NonTransversalError
from src.core.rules.link import remark_a_config
from src.data.files.codec import borromean_to_file
from src.data.files.json_store import JsonFileStore
from src.flows.chain import lemma_eq
from src.flows.link import borromean_check, compute_linking
from src.flows.position import check_sgp


def test_container_registers_stores_and_settings() -> None:
    assert registered_names() == ["cnf_store", "file_store", "kit_settings"]


def test_dependency_injects_only_missing_keyword_arguments() -> None:
    @dependency
    def injected(*, file_store: JsonFileStore | None = None, kit_settings: KitSettings | None = None):
        return file_store, kit_settings

    store, settings = injected()
    assert isinstance(store, JsonFileStore)
    assert settings.sgp_cap == 12

    mine = JsonFileStore()
    assert injected(file_store=mine)[0] is mine


def test_settings_follow_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    @dependency
    def injected(*, kit_settings: KitSettings | None = None) -> KitSettings:
        return kit_settings

    monkeypatch.setenv("PLKIT_SGP_CAP", "5")
    monkeypatch.setenv("PLKIT_APEX_BASE", "3/2")
    settings = injected()
    assert settings.sgp_cap == 5
    assert settings.apex_base == Fraction(3, 2)


def test_override_replaces_factory_temporarily(write_json) -> None:
    path = write_json("points.json", {"dim": 2, "points": [[str(i), str(i * i)] for i in range(5)]})
    tight = KitSettings(sgp_cap=4, arrangement_cap=256, apex_base=Fraction(1009, 7), apex_retries=32, seed=0)
    with override("kit_settings", lambda: tight):
        with pytest.raises(CapExceededError):
            check_sgp(path=path)
    assert check_sgp(path=path).status == "ok"


def test_override_unknown_name() -> None:
    with pytest.raises(KeyError):
        with override("nav_service", lambda: None):
            pass


# ========== 配置下传到规则层 ==========


def settings(**changes) -> KitSettings:
    base = KitSettings(sgp_cap=12, arrangement_cap=256, apex_base=Fraction(1009, 7), apex_retries=32, seed=0)
    return replace(base, **changes)


def test_arrangement_cap_reaches_lemma(write_json) -> None:
    corners = [[0, 0], [1, 0], [1, 1], [0, 1]]
    cells = [[corners[i], corners[(i + 1) % 4]] for i in range(4)]
    path = write_json("square.json", {"dim": 1, "ambient": 2, "cells": cells})
    with pytest.raises(CapExceededError):
        lemma_eq(path=path, kit_settings=settings(arrangement_cap=3))
    with pytest.raises(CapExceededError):
        lemma_eq(path=path, arrangement_cap=3)
    assert lemma_eq(path=path).status == "ok"


def test_apex_base_and_retries_reach_linking(write_json) -> None:
    # R^1 中 {0, 3} 与 {1, 5}：锥顶 1 恰好落在 Y 的点上，锥顶 2 与 10 都是一般的
    x = write_json("x.json", {"dim": 0, "ambient": 1, "simplices": [[[0]], [[3]]]})
    y = write_json("y.json", {"dim": 0, "ambient": 1, "simplices": [[[1]], [[5]]]})
    with pytest.raises(NonTransversalError):
        compute_linking(x_path=x, y_path=y, kit_settings=settings(apex_base=Fraction(1), apex_retries=1))
    retried = compute_linking(x_path=x, y_path=y, kit_settings=settings(apex_base=Fraction(1), apex_retries=2))
    assert retried.payload == {"lk": 1}
    far = compute_linking(x_path=x, y_path=y, kit_settings=settings(apex_base=Fraction(10), apex_retries=1))
    assert far.payload == {"lk": 1}


def test_apex_retries_reach_borromean_check(write_json) -> None:
    path = write_json("remark.json", borromean_to_file(remark_a_config(1)).model_dump(mode="json"))
    with pytest.raises(NonTransversalError):
        borromean_check(path=path, kit_settings=settings(apex_retries=0))
    assert borromean_check(path=path).payload["bits"] == [1, 0, 1, 0]

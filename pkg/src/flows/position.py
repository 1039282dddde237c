"""位置相关流程：一般位置、强一般位置与重新单纯化。"""

from __future__ import annotations

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.result import CommandResult
from src.core.rules.geom import general_position_witness, strong_general_position_witness
from src.core.rules.plmap import resimplicialize
from src.data.files.codec import (
    chain_from_file,
    chain_to_file,
    points_from_file,
    points_to_file,
)
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import ChainFile, PointSetFile


@dependency
def check_gp(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """
    一般位置检查。

    不成立时 witness 为仿射相关的那组点（points 格式）。
    """
    data = file_store.read(path, PointSetFile)
    points = points_from_file(data)
    bad = general_position_witness(points, data.dim)
    if bad is None:
        log(f"[Position:check-gp] {len(points)} 个点处于一般位置（R^{data.dim}）")
        return CommandResult("ok", payload={"kind": "general", "holds": True})

    log(f"[Position:check-gp] {len(bad)} 个点仿射相关")
    return CommandResult(
        "violation",
        payload={"kind": "general", "holds": False},
        witness=points_to_file(bad, data.dim).model_dump(mode="json"),
    )


@dependency
def check_sgp(
    *,
    path: str,
    cap: int | None = None,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    强一般位置检查。

    Args:
        path: points 格式输入。
        cap: 点数上限（默认取配置 sgp_cap）。

    Raises:
        CapExceededError: 点数超过上限。
    """
    data = file_store.read(path, PointSetFile)
    points = points_from_file(data)
    limit = kit_settings.sgp_cap if cap is None else cap
    blocks = strong_general_position_witness(points, data.dim, limit)
    if blocks is None:
        log(f"[Position:check-sgp] {len(points)} 个点处于强一般位置（R^{data.dim}）")
        return CommandResult("ok", payload={"kind": "strong", "holds": True})

    log(f"[Position:check-sgp] {len(blocks)} 个不交子集的仿射包交维数过大")
    merged = [p for block in blocks for p in block]
    return CommandResult(
        "violation",
        payload={"kind": "strong", "holds": False, "blocks": [len(b) for b in blocks]},
        witness=points_to_file(merged, data.dim).model_dump(mode="json"),
    )


@dependency
def resimplicialize_chain(
    *,
    chain_path: str,
    points_path: str,
    cap: int | None = None,
    arrangement_cap: int | None = None,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    重新单纯化：输入链 + 点集，输出单纯链 C′。

    Raises:
        PositionError: 点集相对链不满足强一般位置。
        ConjectureAlarm: 后置条件不成立。
    """
    # 1. 读取
    chain = chain_from_file(file_store.read(chain_path, ChainFile))
    points = points_from_file(file_store.read(points_path, PointSetFile))
    limit = kit_settings.sgp_cap if cap is None else cap

    # 2. 剖分
    arrangement_limit = kit_settings.arrangement_cap if arrangement_cap is None else arrangement_cap
    result = resimplicialize(chain, points, limit, arrangement_limit)
    log(f"[Position:resimplicialize] {len(chain)} 个单形 → {len(result)} 个单形")
    return CommandResult("ok", payload=chain_to_file(result).model_dump(mode="json"))

"""复形生成与删积流程。"""

from __future__ import annotations

import random

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.complex import AbstractComplex
from src.core.models.result import CommandResult
from src.core.rules.complex import (
    boundary_sphere,
    euler_characteristic,
    f_vector,
    torus_gadget,
)
from src.core.rules.complex import deleted_product as build_deleted_product
from src.core.rules.plmap import random_plmap
from src.data.files.codec import complex_from_file, complex_to_file, deleted_product_to_file, plmap_to_file
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import ComplexFile


def _emit(k: AbstractComplex, tag: str, d: int | None, seed: int | None, kit_settings: KitSettings) -> CommandResult:
    """给出 d 时输出随机有理像点的 PL 映射，否则输出复形本身。"""
    log(f"[Complex:{tag}] f = {f_vector(k)}，χ = {euler_characteristic(k)}")
    if d is None:
        return CommandResult("ok", payload=complex_to_file(k).model_dump(mode="json"))
    used_seed = kit_settings.seed if seed is None else seed
    f = random_plmap(k, d, random.Random(used_seed))
    log(f"[Complex:{tag}] 随机 PL 映射到 R^{d}（seed={used_seed}，MT19937）")
    return CommandResult("ok", payload=plmap_to_file(f).model_dump(mode="json"))


@dependency
def gen_sphere(
    *,
    n: int,
    d: int | None = None,
    seed: int | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    生成 n 维球面 ∂Δ^{n+1}。

    Args:
        n: 球面维数。
        d: 给出时输出到 R^d 的随机 PL 映射。
        seed: 随机种子（默认取配置）。
    """
    return _emit(boundary_sphere(n), "gen-sphere", d, seed, kit_settings)


@dependency
def gen_torus(
    *,
    l: int,
    d: int | None = None,
    seed: int | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """生成 2l 维环面小工具（标记 m、p），可选随机 PL 映射。"""
    return _emit(torus_gadget(l), "gen-torus", d, seed, kit_settings)


@dependency
def deleted_product(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """单纯删积：全部不交单形对与双维数统计。"""
    k = complex_from_file(file_store.read(path, ComplexFile))
    dp = build_deleted_product(k)
    census = ", ".join(f"({i},{j}):{n}" for (i, j), n in dp.census().items())
    log(f"[Complex:deleted-product] {len(dp.cells)} 个积胞腔 {census}")
    return CommandResult("ok", payload=deleted_product_to_file(dp).model_dump(mode="json"))

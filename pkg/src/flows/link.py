"""环绕数流程：构造性注记配置、模 2 环绕数、Borromean 检查与 Leibniz 三项。"""

from __future__ import annotations

import random

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.result import CommandResult
from src.core.rules.link import borromean_check as run_borromean_check
from src.core.rules.link import (
    leibniz_terms,
    linking_mod2,
    product_torus_config,
    remark_a_config,
)
from src.data.files.codec import (
    borromean_from_file,
    borromean_report_to_file,
    borromean_to_file,
    chain_from_file,
    leibniz_to_file,
)
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import BorromeanConfigFile, ChainFile


@dependency
def gen_remark_a(*, k: int) -> CommandResult:
    """l = 0 的显式 Borromean 配置（R^{k+1}）。"""
    cfg = remark_a_config(k)
    log(f"[Link:gen-remark-a] k={k} l=0，目标 R^{cfg.ambient}")
    return CommandResult("ok", payload=borromean_to_file(cfg).model_dump(mode="json"))


@dependency
def compute_linking(
    *,
    x_path: str,
    y_path: str,
    kit_settings: KitSettings | None = None,
    file_store: JsonFileStore | None = None,
) -> CommandResult:
    """
    两条不交闭链的模 2 环绕数。

    Raises:
        PreconditionError: 不是闭链或支撑相交。
        NonTransversalError: 锥顶用尽仍退化。
    """
    x = chain_from_file(file_store.read(x_path, ChainFile))
    y = chain_from_file(file_store.read(y_path, ChainFile))
    lk = linking_mod2(x, y, retries=kit_settings.apex_retries, base=kit_settings.apex_base)
    log(f"[Link:linking] dim {x.dim} + {y.dim}（R^{x.ambient}）：lk = {lk}")
    return CommandResult("ok", payload={"lk": lk})


@dependency
def borromean_check(
    *,
    path: str,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    奇异 Borromean 环三条性质检查。

    状态：像相交或 l >= 1 时三条同时成立（警报）→ violation，witness 为输入配置本身；
    其余为 ok。
    """
    data = file_store.read(path, BorromeanConfigFile)
    cfg = borromean_from_file(data)
    report = run_borromean_check(cfg, retries=kit_settings.apex_retries, base=kit_settings.apex_base)
    for line in report.transcript:
        log(f"[Link:borromean-check] {line}")
    payload = borromean_report_to_file(report).model_dump(mode="json")
    if not report.disjoint or report.alarm:
        return CommandResult("violation", payload=payload, witness=data.model_dump(mode="json"))
    return CommandResult("ok", payload=payload)


@dependency
def leibniz(
    *,
    path: str | None = None,
    k: int | None = None,
    l: int | None = None,
    seed: int | None = None,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    Leibniz 三项。

    Args:
        path: borromean-config 输入；不给时按 (k, l, seed) 生成乘积环面配置。

    Returns:
        ok：三项之和为偶数且不是 (1,0,0)；否则 violation，witness 为配置。
    """
    # 1. 配置
    if path is not None:
        data = file_store.read(path, BorromeanConfigFile)
        cfg = borromean_from_file(data)
    else:
        used_seed = kit_settings.seed if seed is None else seed
        cfg = product_torus_config(k if k is not None else 2, l if l is not None else 1, random.Random(used_seed))
        data = borromean_to_file(cfg)
        log(f"[Link:leibniz] 生成配置 k={cfg.k} l={cfg.l} seed={used_seed}")

    # 2. 计算
    terms = leibniz_terms(cfg, retries=kit_settings.apex_retries, base=kit_settings.apex_base)
    log(f"[Link:leibniz] 三项 {terms.terms}，和 {terms.total}（第 {terms.attempts} 组锥顶）")
    payload = leibniz_to_file(terms).model_dump(mode="json")
    if terms.alarm:
        log("[Link:leibniz] 警报：出现 (1,0,0) 模式或奇数和")
        return CommandResult("violation", payload=payload, witness=data.model_dump(mode="json"))
    return CommandResult("ok", payload=payload)

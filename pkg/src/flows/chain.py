"""链相关流程：边界、闭链检查、单纯性检查与多面体链引理。"""

from __future__ import annotations

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.chain import PolytopeChain
from src.core.models.geometry import Polytope
from src.core.models.result import CommandResult
from src.core.rules.chain import (
    boundary,
    make_chain,
    odd_faces_witness,
    simplicial_witness,
)
from src.core.rules.chain import lemma_eq_cycle as run_lemma
from src.core.rules.polytope import contains
from src.core.rules.precision import format_point
from src.data.files.codec import chain_from_file, chain_to_file, polytope_chain_from_file
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import ChainFile, PolytopeChainFile


@dependency
def compute_boundary(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """
    计算链的模 2 边界。

    Args:
        path: chain 格式输入文件。
        file_store: JSON 仓储（可选，自动注入）。

    Returns:
        payload 为边界链（chain 格式）。
    """
    chain = chain_from_file(file_store.read(path, ChainFile))
    result = boundary(chain)
    log(f"[Chain:boundary] {len(chain)} 个 {chain.dim} 维单形 → {len(result)} 个 {result.dim} 维单形")
    return CommandResult("ok", payload=chain_to_file(result).model_dump(mode="json"))


@dependency
def check_cycle(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """
    检查链是否为闭链。

    不是闭链时 witness 为与奇数面相邻的子链，对它再跑 check-cycle 仍然失败。
    """
    chain = chain_from_file(file_store.read(path, ChainFile))
    odd = boundary(chain)
    if not odd.simplices:
        log(f"[Chain:check-cycle] 闭链（{len(chain)} 个单形）")
        return CommandResult("ok", payload={"is_cycle": True, "odd_faces": 0})

    log(f"[Chain:check-cycle] 不是闭链：{len(odd)} 个奇数面")
    witness = odd_faces_witness(chain)
    return CommandResult(
        "violation",
        payload={"is_cycle": False, "odd_faces": len(odd)},
        witness=chain_to_file(witness).model_dump(mode="json"),
    )


@dependency
def check_simplicial(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """检查链中任两单形的交是否为公共面；不成立时 witness 为违例的两个单形。"""
    chain = chain_from_file(file_store.read(path, ChainFile))
    pair = simplicial_witness(chain)
    if pair is None:
        log(f"[Chain:check-simplicial] 单纯链（{len(chain)} 个单形）")
        return CommandResult("ok", payload={"is_simplicial": True})

    log("[Chain:check-simplicial] 存在交集不是公共面的单形对")
    witness = make_chain(pair, dim=chain.dim, ambient=chain.ambient)
    return CommandResult(
        "violation",
        payload={"is_simplicial": False},
        witness=chain_to_file(witness).model_dump(mode="json"),
    )


def _lemma_witness(chain: PolytopeChain, hypothesis: int | None, cells: tuple[Polytope, ...]) -> PolytopeChainFile:
    """
    引理违例的可复查子族。

    - 假设 1：违例的两个胞腔；
    - 假设 2：包含违例 (c−1) 胞腔的全部胞腔（关联数随之保持为奇数）。
    """
    if hypothesis == 1:
        chosen = list(cells)
    else:
        face = cells[0]
        chosen = [tau for tau in chain.cells if all(contains(tau, v) for v in face.vertices)]
    return PolytopeChainFile(
        dim=chain.dim,
        ambient=chain.ambient,
        cells=[[format_point(v) for v in cell.vertices] for cell in chosen],
    )


@dependency
def lemma_eq(
    *,
    path: str,
    arrangement_cap: int | None = None,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    多面体链引理：假设成立时输出支撑在 ∪P 上的单纯闭链。

    arrangement_cap 为排列细分的输入上限（默认取配置），超过即 CapExceededError。

    Returns:
        ok：payload 为闭链（chain 格式）；
        violation：payload 给出不成立的假设编号，witness 为可复查的多面体链。
    """
    # 1. 读取
    chain = polytope_chain_from_file(file_store.read(path, PolytopeChainFile))
    log(f"[Chain:lemma-eq] {len(chain.cells)} 个 {chain.dim} 维胞腔（R^{chain.ambient}）")

    # 2. 检查并构造
    limit = kit_settings.arrangement_cap if arrangement_cap is None else arrangement_cap
    outcome = run_lemma(chain, limit)
    if outcome.cycle is not None:
        log(f"[Chain:lemma-eq] 得到 {len(outcome.cycle)} 个单形的单纯闭链")
        return CommandResult("ok", payload=chain_to_file(outcome.cycle).model_dump(mode="json"))

    # 3. 违例
    log(f"[Chain:lemma-eq] 假设 {outcome.hypothesis} 不成立")
    payload = {"hypothesis": outcome.hypothesis, "incidence": outcome.incidence}
    witness = _lemma_witness(chain, outcome.hypothesis, outcome.witness)
    return CommandResult("violation", payload=payload, witness=witness.model_dump(mode="json"))

"""PL 映射流程：闭链原像与几乎嵌入检查。"""

from __future__ import annotations

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.result import CommandResult
from src.core.rules.chain import is_cycle
from src.core.rules.complex import make_complex
from src.core.rules.plmap import find_almost_embedding_violation, make_plmap, preimage_cycle
from src.data.files.codec import chain_from_file, chain_to_file, plmap_from_file, plmap_to_file
from src.data.files.json_store import JsonFileStore
from src.data.files.schemas import ChainFile, PLMapFile


@dependency
def compute_preimage(
    *,
    map_path: str,
    chain_path: str,
    cap: int | None = None,
    arrangement_cap: int | None = None,
    file_store: JsonFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    f⁻¹(C) 的单纯闭链。

    Args:
        map_path: plmap 格式（定义域需带几何实现）。
        chain_path: chain 格式，R^d 中的 c-闭链。
        cap: 强一般位置点数上限（默认取配置）。
        arrangement_cap: 排列细分的输入上限（默认取配置）。

    Raises:
        PositionError / PreconditionError / DimensionMismatchError: 无法运行。
        ConjectureAlarm: 原像组装中的断言失败。
    """
    f = plmap_from_file(file_store.read(map_path, PLMapFile))
    chain = chain_from_file(file_store.read(chain_path, ChainFile))
    limit = kit_settings.sgp_cap if cap is None else cap
    log(f"[PLMap:preimage] n={f.n} d={f.d} c={chain.dim}：{len(f.domain.facets)} 个极大面，{len(chain)} 个单形")

    arrangement_limit = kit_settings.arrangement_cap if arrangement_cap is None else arrangement_cap
    result = preimage_cycle(f, chain, limit, arrangement_limit)
    log(f"[PLMap:preimage] 原像为 {len(result)} 个 {result.dim} 维单形，闭链：{is_cycle(result)}")
    return CommandResult("ok", payload=chain_to_file(result).model_dump(mode="json"))


@dependency
def check_almost_embedding(*, path: str, file_store: JsonFileStore | None = None) -> CommandResult:
    """
    几乎嵌入检查：不交单形的像两两不交。

    不成立时 witness 为限制在违例单形对上的映射（plmap 格式，可直接复查）。
    """
    f = plmap_from_file(file_store.read(path, PLMapFile))
    pair = find_almost_embedding_violation(f)
    if pair is None:
        log(f"[PLMap:check-almost-embedding] 几乎嵌入（{len(f.domain.facets)} 个极大面）")
        return CommandResult("ok", payload={"almost_embedding": True})

    sigma, tau = pair
    log(f"[PLMap:check-almost-embedding] 不交单形 {sigma} 与 {tau} 的像相交")
    restricted = make_plmap(make_complex(f.domain.vertex_count, [sigma, tau]), f.vertex_images)
    return CommandResult(
        "violation",
        payload={"almost_embedding": False, "pair": [list(sigma), list(tau)]},
        witness=plmap_to_file(restricted).model_dump(mode="json"),
    )

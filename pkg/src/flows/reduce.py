"""硬度实例生成流程：CNF → K(Φ)，附 provenance。"""

from __future__ import annotations

import random
from dataclasses import asdict

from src.core.config import KitSettings
from src.core.dependency import dependency
from src.core.log import log
from src.core.models.result import CommandResult
from src.core.rules.reduce import (
    PLACEHOLDER_LABEL,
    assemble_k_phi,
    build_gadget_kit,
    default_plan,
    random_cnf,
    size_bound,
)
from src.data.files.codec import complex_to_file
from src.data.files.dimacs_store import CnfFileStore
from src.data.files.schemas import ProvenanceFile

# 不给 --in 时随机公式的规模
RANDOM_VARIABLES = 4
RANDOM_CLAUSES = 3
RANDOM_WIDTH = 3


@dependency
def reduce_formula(
    *,
    k: int,
    d: int,
    path: str | None = None,
    seed: int | None = None,
    cnf_store: CnfFileStore | None = None,
    kit_settings: KitSettings | None = None,
) -> CommandResult:
    """
    组装 K(Φ)。

    Args:
        k: 复形维数（k >= 2）。
        d: 目标维数（k+2 ≤ d ≤ 3k/2+1）。
        path: DIMACS 输入；不给时按 seed 生成随机 3-CNF。
        seed: 随机种子（默认取配置）。

    Returns:
        payload 为 complex 格式的 K(Φ)；extras["provenance"] 为来源说明。

    Raises:
        ParameterRangeError: (k, d) 超出范围。
        MalformedFileError: DIMACS 格式错误。
    """
    # 1. 公式
    if path is not None:
        phi = cnf_store.read(path)
        source = path
    else:
        used_seed = kit_settings.seed if seed is None else seed
        phi = random_cnf(RANDOM_VARIABLES, RANDOM_CLAUSES, RANDOM_WIDTH, random.Random(used_seed))
        source = f"random seed={used_seed}"
    log(f"[Reduce] Φ：{phi.variable_count} 个变量，{len(phi.clauses)} 个子句（{source}）")

    # 2. 方案与组装
    kit = build_gadget_kit(k, d)
    plan = default_plan(phi)
    result = assemble_k_phi(phi, k, d, plan)
    bound = size_bound(kit, plan)
    log(f"[Reduce] (k, d, l) = ({k}, {d}, {kit.l})：{len(result.facets)} 个极大面 ≤ {bound}")

    # 3. 来源说明
    provenance = ProvenanceFile(
        k=k,
        d=d,
        l=kit.l,
        label=plan.label,
        convention=plan.tori[0].convention if plan.tori else "identify-boundary-sphere",
        spheres=list(plan.spheres),
        tori=[{key: str(value) for key, value in asdict(t).items()} for t in plan.tori],
        size_bound={"c1": len(kit.sphere.facets), "c2": len(kit.torus.facets), "bound": bound},
        formula={
            "variables": phi.variable_count,
            "clauses": len(phi.clauses),
            "source": source,
            "placeholder": plan.label == PLACEHOLDER_LABEL,
        },
    )
    return CommandResult(
        "ok",
        payload=complex_to_file(result).model_dump(mode="json"),
        extras={"provenance": provenance.model_dump(mode="json")},
    )

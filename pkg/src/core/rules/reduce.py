"""
硬度实例生成：CNF 读写、小工具集与 K(Φ) 组装。

默认连接方案是占位约定（输出元数据标注 placeholder-convention）：
- 每个文字出现一个 k 维球面，id 为 "S{子句}_{位置}"；
- 每对互补文字出现一个环面，id 为 "T{序号}"。
"""

from __future__ import annotations

import logging
import random
from itertools import combinations

from src.core.errors import MalformedFileError, ParameterRangeError, PlanError
from src.core.models.complex import AbstractComplex, Simplex
from src.core.models.reduce import SUPPORTED_CONVENTIONS, CnfFormula, GadgetKit, LinkagePlan, TorusLink
from src.core.rules.complex import boundary_sphere, make_complex, torus_gadget
from src.core.rules.unionfind import UnionFind

logger = logging.getLogger(__name__)

PLACEHOLDER_LABEL = "placeholder-convention"


# ========== DIMACS ==========


def parse_dimacs(text: str, path: str = "<text>") -> CnfFormula:
    """
    解析 DIMACS CNF（c 注释行、p cnf V C 头、以 0 结束的子句，子句可跨行）。

    Raises:
        MalformedFileError: 缺少头部、变量越界、子句数不符或出现空子句。
    """
    comments: list[str] = []
    header: tuple[int, int] | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "%":
            continue
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise MalformedFileError(f"非法头部：{line!r}", path=path, line=lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise MalformedFileError(f"非法头部：{line!r}", path=path, line=lineno) from None
            continue
        if header is None:
            raise MalformedFileError("子句出现在 p cnf 头部之前", path=path, line=lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise MalformedFileError(f"非法文字 {token!r}", path=path, line=lineno) from None
            if lit == 0:
                if not current:
                    raise MalformedFileError("空子句", path=path, line=lineno)
                clauses.append(current)
                current = []
                continue
            if abs(lit) > header[0]:
                raise MalformedFileError(f"变量 {abs(lit)} 超出范围 1..{header[0]}", path=path, line=lineno)
            current.append(lit)
    if header is None:
        raise MalformedFileError("缺少 p cnf 头部", path=path)
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise MalformedFileError(f"头部声明 {header[1]} 个子句，实际 {len(clauses)} 个", path=path)
    return CnfFormula(variable_count=header[0], clauses=clauses, comments=comments)


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"c {c}" for c in phi.comments]
    lines.append(f"p cnf {phi.variable_count} {len(phi.clauses)}")
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in phi.clauses)
    return "\n".join(lines) + "\n"


def random_cnf(variables: int, clauses: int, width: int, rng: random.Random) -> CnfFormula:
    """随机 CNF：每个子句取 width 个不同变量，符号随机。"""
    if width > variables:
        raise ParameterRangeError(f"子句宽度 {width} 大于变量数 {variables}")
    out: list[list[int]] = []
    for _ in range(clauses):
        chosen = sorted(rng.sample(range(1, variables + 1), width))
        out.append([v if rng.random() < 0.5 else -v for v in chosen])
    return CnfFormula(variable_count=variables, clauses=out, comments=[f"random {width}-cnf"])


# ========== 小工具 ==========


def build_gadget_kit(k: int, d: int) -> GadgetKit:
    """
    (k, d) 的小工具：球面 ∂Δ^{k+1} 与 2l 维环面，l = d − k − 1。

    Raises:
        ParameterRangeError: 不满足 k >= 2 且 k+2 ≤ d ≤ 3k/2+1。
    """
    if k < 2 or not (k + 2 <= d and 2 * d <= 3 * k + 2):
        raise ParameterRangeError(f"参数 (k, d) = ({k}, {d}) 超出范围：要求 k >= 2 且 k+2 ≤ d ≤ 3k/2+1")
    l = d - k - 1
    return GadgetKit(k=k, d=d, l=l, sphere=boundary_sphere(k), torus=torus_gadget(l))


def default_plan(phi: CnfFormula) -> LinkagePlan:
    """
    占位连接方案（元数据 label = "placeholder-convention"）。

    - 每个文字出现（子句 ci 的第 pos 个文字）各占一个 k 维球面，id 为 "S{ci}_{pos}"；
      同一变量在不同子句里出现几次就有几个球面，按出现而不是按变量计数；
    - 每一对互补的文字出现（x 的某次出现与 ¬x 的某次出现）连一个环面，
      id 按枚举顺序为 "T0", "T1", …，sphere_q 为先出现的一端；
    - 同号的重复出现之间不连环面。
    """
    occurrences: list[tuple[str, int]] = []
    for ci, clause in enumerate(phi.clauses):
        for pos, lit in enumerate(clause):
            occurrences.append((f"S{ci}_{pos}", lit))
    tori: list[TorusLink] = []
    for (a, la), (b, lb) in combinations(occurrences, 2):
        if la == -lb:
            tori.append(TorusLink(torus_id=f"T{len(tori)}", sphere_q=a, sphere_r=b))
    return LinkagePlan(spheres=[name for name, _ in occurrences], tori=tori, label=PLACEHOLDER_LABEL)


def validate_plan(plan: LinkagePlan) -> None:
    """
    Raises:
        PlanError: 重复 id、引用缺失、同一球面自连或未知粘接约定。
    """
    if len(set(plan.spheres)) != len(plan.spheres):
        raise PlanError("球面 id 重复")
    known = set(plan.spheres)
    seen: set[str] = set()
    for t in plan.tori:
        if t.torus_id in seen or t.torus_id in known:
            raise PlanError(f"环面 id 重复：{t.torus_id}")
        seen.add(t.torus_id)
        for ref in (t.sphere_q, t.sphere_r):
            if ref not in known:
                raise PlanError(f"环面 {t.torus_id} 引用了不存在的球面 {ref}", witness=t.torus_id)
        if t.sphere_q == t.sphere_r:
            raise PlanError(f"环面 {t.torus_id} 两端是同一个球面 {t.sphere_q}")
        if t.convention not in SUPPORTED_CONVENTIONS:
            raise PlanError(f"未知的粘接约定 {t.convention!r}")


def size_bound(kit: GadgetKit, plan: LinkagePlan) -> int:
    """极大面个数上界 c₁·(球面数) + c₂·(环面数)。"""
    return len(kit.sphere.facets) * len(plan.spheres) + len(kit.torus.facets) * len(plan.tori)


def assemble_k_phi(phi: CnfFormula, k: int, d: int, plan: LinkagePlan) -> AbstractComplex:
    """
    按连接方案组装 K(Φ)。

    粘接约定 identify-boundary-sphere：
    - 环面顶点 (i, 0) 与球面 S_q 的顶点 i 等同，(0, j) 与 S_r 的顶点 j 等同；
    - 于是经线 m 成为 S_q 中顶点 0..l+1 张成的 (l+1) 面的边界，纬线 p 同理落在 S_r 上
      （l+1 ≤ k，这个面已在球面里，填充随之完成）。

    标记："S…" 为各球面，"Tn" / "Tn.m" / "Tn.p" 为环面及其经纬线。

    Raises:
        ParameterRangeError: (k, d) 超出范围。
        PlanError: 方案引用错误。
    """
    kit = build_gadget_kit(k, d)
    validate_plan(plan)
    for clause in phi.clauses:
        if not clause or any(lit == 0 or abs(lit) > phi.variable_count for lit in clause):
            raise PlanError("CNF 含空子句或越界文字")

    sphere_n = kit.sphere.vertex_count
    torus_n = kit.torus.vertex_count
    side = kit.l + 2
    sphere_base = {name: i * sphere_n for i, name in enumerate(plan.spheres)}
    torus_origin = len(plan.spheres) * sphere_n
    torus_base = {t.torus_id: torus_origin + i * torus_n for i, t in enumerate(plan.tori)}
    total = torus_origin + len(plan.tori) * torus_n

    # 1. 粘接
    uf = UnionFind(total)
    for t in plan.tori:
        base = torus_base[t.torus_id]
        for i in range(side):
            uf.union(base + i * side, sphere_base[t.sphere_q] + i)
            uf.union(base + i, sphere_base[t.sphere_r] + i)

    # 2. 收集极大面（全局下标）
    pieces: dict[str, list[tuple[int, ...]]] = {}
    for name in plan.spheres:
        pieces[name] = [tuple(sphere_base[name] + v for v in f) for f in kit.sphere.facets]
    for t in plan.tori:
        base = torus_base[t.torus_id]
        pieces[t.torus_id] = [tuple(base + v for v in f) for f in kit.torus.facets]
        for mark in ("m", "p"):
            pieces[f"{t.torus_id}.{mark}"] = [tuple(base + v for v in f) for f in kit.torus.marks[mark]]

    # 3. 紧凑重编号
    relabel: dict[int, int] = {}

    def label(v: int) -> int:
        root = uf.find(v)
        if root not in relabel:
            relabel[root] = len(relabel)
        return relabel[root]

    marks: dict[str, list[Simplex]] = {}
    for name in sorted(pieces):
        mapped: list[Simplex] = []
        for f in pieces[name]:
            image = tuple(sorted(label(v) for v in f))
            if len(set(image)) != len(image):
                raise PlanError(f"粘接使 {name} 的单形 {f} 退化")
            mapped.append(image)
        marks[name] = mapped

    facets = [f for name in plan.spheres for f in marks[name]]
    facets.extend(f for t in plan.tori for f in marks[t.torus_id])
    result = make_complex(len(relabel), facets, marks=marks)

    # 4. 断言
    bound = size_bound(kit, plan)
    if len(result.facets) > bound:
        raise AssertionError(f"极大面 {len(result.facets)} 超过上界 {bound}")
    if plan.spheres or plan.tori:
        if result.dim != k:
            raise AssertionError(f"K(Φ) 维数为 {result.dim}，期望 {k}")
    logger.info(
        f"[Reduce] {len(plan.spheres)} 个球面 + {len(plan.tori)} 个环面 → "
        f"{result.vertex_count} 顶点 / {len(result.facets)} 极大面"
    )
    return result

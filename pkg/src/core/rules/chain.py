"""
模 2 链运算与多面体链引理。

- 链采用集合语义：重复单形抵消，加法即对称差；
- 面按规范顶点元组精确匹配；
- lemma_eq_cycle：检查两条假设，成立时经"排列细分 + 拉点剖分"产出单纯闭链。
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from itertools import combinations

from src.core.errors import DegenerateError, DimensionMismatchError, PreconditionError
from src.core.models.chain import Chain, LemmaOutcome, PolytopeChain
from src.core.models.geometry import GeomSimplex, Point, Polytope
from src.core.rules.arrangement import refine_with_coverage
from src.core.rules.geom import ambient_of, is_affinely_independent
from src.core.rules.linalg import dot
from src.core.rules.polytope import (
    boxes_meet,
    contains,
    halfspaces,
    intersect_polytopes,
    placing_triangulation,
    simplex_polytope,
)

logger = logging.getLogger(__name__)


# ========== 单形与链 ==========


def make_simplex(points: Sequence[Point]) -> GeomSimplex:
    """
    构造几何单形（顶点按字典序存放）。

    Raises:
        DegenerateError: 顶点仿射相关（含重复点）。
    """
    ambient_of(points)
    if not is_affinely_independent(points):
        raise DegenerateError(f"单形顶点仿射相关：{len(points)} 个点", witness=tuple(points))
    return GeomSimplex(vertices=tuple(sorted(points)))


def make_chain(simplices: Iterable[GeomSimplex], dim: int | None = None, ambient: int | None = None) -> Chain:
    """
    由单形构造链（模 2：出现偶数次的单形抵消）。

    空链需要显式给出 dim 与 ambient。
    """
    counts = Counter(simplices)
    kept = frozenset(s for s, n in counts.items() if n % 2 == 1)
    items = list(counts)
    if items:
        dim = items[0].dim if dim is None else dim
        ambient = items[0].ambient if ambient is None else ambient
    if dim is None or ambient is None:
        raise PreconditionError("空链需要显式给出维数与环境维数")
    for s in items:
        if s.dim != dim or s.ambient != ambient:
            raise DimensionMismatchError(f"链中单形维数不一致：期望 ({dim}, {ambient})，实际 ({s.dim}, {s.ambient})")
    return Chain(dim=dim, ambient=ambient, simplices=kept)


def vertices_of(chain: Chain) -> set[Point]:
    """V(C)：链中所有单形的顶点。"""
    return {v for s in chain.simplices for v in s.vertices}


def faces_of(simplex: GeomSimplex) -> list[GeomSimplex]:
    """单形的全部余维 1 面（顶点已排序，删去一个顶点仍有序）。"""
    vs = simplex.vertices
    return [GeomSimplex(vertices=vs[:i] + vs[i + 1 :]) for i in range(len(vs))]


def boundary(chain: Chain) -> Chain:
    """
    链的边界：被奇数个单形用作面的 (c−1) 面。

    0-链的边界约定为空的 (−1)-链。
    """
    if chain.dim <= 0:
        return Chain(dim=-1, ambient=chain.ambient, simplices=frozenset())
    counts = Counter(f for s in chain.simplices for f in faces_of(s))
    odd = frozenset(f for f, n in counts.items() if n % 2 == 1)
    return Chain(dim=chain.dim - 1, ambient=chain.ambient, simplices=odd)


def is_cycle(chain: Chain) -> bool:
    return not boundary(chain).simplices


def odd_faces_witness(chain: Chain) -> Chain:
    """边界非空时的可复查子链：与奇数面相邻的全部单形。"""
    odd = boundary(chain).simplices
    touching = [s for s in chain.simplices if any(f in odd for f in faces_of(s))]
    return Chain(dim=chain.dim, ambient=chain.ambient, simplices=frozenset(touching))


def simplicial_witness(chain: Chain) -> tuple[GeomSimplex, GeomSimplex] | None:
    """
    单纯性反例：第一对交集不是公共面的单形。

    判定：交为空，或交的极点恰为两者公共顶点（公共顶点的凸包是两者的公共面）。
    """
    items = chain.sorted_simplices()
    polys = [simplex_polytope(s) for s in items]
    for i, j in combinations(range(len(items)), 2):
        if not boxes_meet(polys[i], polys[j]):
            continue
        meet = intersect_polytopes(polys[i], polys[j])
        if meet is None:
            continue
        common = tuple(sorted(set(items[i].vertices) & set(items[j].vertices)))
        if meet.vertices != common:
            return items[i], items[j]
    return None


def is_simplicial(chain: Chain) -> bool:
    """任两单形的交是两者的公共面。"""
    return simplicial_witness(chain) is None


# ========== 多面体链 ==========


def make_polytope_chain(cells: Sequence[Polytope], dim: int | None = None) -> PolytopeChain:
    """
    构造多面体链（每个胞腔的仿射维数一致）。

    Raises:
        DimensionMismatchError: 胞腔维数或环境维数不一致。
    """
    if not cells:
        raise PreconditionError("多面体链为空")
    c = cells[0].affine_dim if dim is None else dim
    d = cells[0].ambient_dim
    for cell in cells:
        if cell.affine_dim != c or cell.ambient_dim != d:
            raise DimensionMismatchError(f"胞腔维数不一致：期望 {c}，实际 {cell.affine_dim}", witness=cell)
    return PolytopeChain(dim=c, ambient=d, cells=tuple(cells))


def lies_in_facet(cell: Polytope, points: Sequence[Point]) -> bool:
    """points 是否全部落在 cell 的同一个刻面上（即含于 ∂cell 的凸集）。"""
    return any(all(dot(f.normal, p) == f.offset for p in points) for f in halfspaces(cell).facets)


def incidence_counts(chain: PolytopeChain, s: Polytope) -> tuple[int, int]:
    """
    ([P:s], [P:s]^inc) 模 2。

    - [τ:s] = 1 当 s 是 τ 的刻面（顶点集相同）；
    - [s ⊂ ∂τ] = 1 当 s ⊆ τ 且 s 全部顶点落在 τ 的同一刻面上。

    Raises:
        PreconditionError: s 的维数不是 P.dim − 1。
    """
    if s.affine_dim != chain.dim - 1:
        raise PreconditionError(f"关联数要求 {chain.dim - 1} 维胞腔，实际 {s.affine_dim} 维")
    face = 0
    inc = 0
    target = set(s.vertices)
    for tau in chain.cells:
        facets = halfspaces(tau).facets
        if any(set(f.vertices) == target for f in facets):
            face += 1
        if all(contains(tau, v) for v in s.vertices) and lies_in_facet(tau, s.vertices):
            inc += 1
    return face % 2, inc % 2


def _hypothesis_one_witness(chain: PolytopeChain) -> tuple[Polytope, Polytope] | None:
    """假设 1：任两胞腔的交为 <= c−1 维多面体且含于双方边界。"""
    cells = chain.cells
    for i, j in combinations(range(len(cells)), 2):
        a, b = cells[i], cells[j]
        if not boxes_meet(a, b):
            continue
        meet = intersect_polytopes(a, b)
        if meet is None:
            continue
        if meet.affine_dim > chain.dim - 1:
            return a, b
        if not (lies_in_facet(a, meet.vertices) and lies_in_facet(b, meet.vertices)):
            return a, b
    return None


def triangulate_cells(cells: Sequence[Polytope], dim: int, ambient: int) -> Chain:
    """
    用同一组全局点（胞腔顶点 + 两两交的顶点）逐胞腔拉点剖分，得到相容的单纯链。
    """
    global_points: set[Point] = {v for cell in cells for v in cell.vertices}
    for a, b in combinations(cells, 2):
        if boxes_meet(a, b):
            meet = intersect_polytopes(a, b)
            if meet is not None:
                global_points.update(meet.vertices)
    simplices: list[GeomSimplex] = []
    for cell in cells:
        simplices.extend(placing_triangulation(cell, points=global_points))
    return make_chain(simplices, dim=dim, ambient=ambient)


def lemma_eq_cycle(chain: PolytopeChain, arrangement_cap: int | None = None) -> LemmaOutcome:
    """
    多面体链引理：在两条假设下，∪P 是某个单纯 c-闭链的支撑。

    arrangement_cap 为排列细分的输入上限（默认读取 PLKIT_ARRANGEMENT_CAP），超过即 CapExceededError。

    1. 假设 1 逐对检查，失败返回违例胞腔对；
    2. 排列细分，保留覆盖次数为奇数的胞腔；
    3. 用全局点拉点剖分得到单纯链；
    4. 边界非空即假设 2 不成立：取字典序第一个奇数面，报告其关联数；
    5. 成功时复核 is_cycle 与 is_simplicial。
    """
    c, d = chain.dim, chain.ambient
    if not chain.cells:
        return LemmaOutcome(cycle=Chain(dim=c, ambient=d, simplices=frozenset()))

    # 1. 假设 1
    pair = _hypothesis_one_witness(chain)
    if pair is not None:
        logger.info(f"[Lemma] 假设 1 不成立：{pair[0].vertices} ∩ {pair[1].vertices}")
        return LemmaOutcome(cycle=None, hypothesis=1, witness=pair)

    # 2. 排列细分（模 2 覆盖）
    refined = [
        rc.cell
        for rc in refine_with_coverage(chain.cells, arrangement_cap)
        if rc.coverage % 2 == 1 and rc.cell.affine_dim == c
    ]

    # 3. 拉点剖分
    result = triangulate_cells(refined, c, d)

    # 4. 假设 2
    odd = boundary(result).sorted_simplices()
    if odd:
        for face in odd:
            poly = simplex_polytope(face)
            _, inc = incidence_counts(chain, poly)
            if inc == 1:
                logger.info(f"[Lemma] 假设 2 不成立：{face.vertices} 的关联数为奇数")
                return LemmaOutcome(cycle=None, hypothesis=2, witness=(poly,), incidence=inc)
        raise RuntimeError("剖分结果边界非空，但没有找到关联数为奇数的胞腔")

    # 5. 复核
    if not is_simplicial(result):
        raise RuntimeError("剖分结果不是单纯链")
    logger.debug(f"[Lemma] 得到 {len(result)} 个 {c} 维单形的闭链")
    return LemmaOutcome(cycle=result)

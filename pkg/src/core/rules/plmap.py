"""
分片线性映射：求值、相对链的位置、重新单纯化与闭链原像。

原像流程：
1. 前置检查（c < d、定义域闭、f 避开 ∂C、强一般位置）；
2. 对像点集重新单纯化 C → C′；
3. 对每个定义域极大面 γ 与 σ ∈ C′，在 γ 的重心坐标里求 γ ∩ f⁻¹(σ)；
4. 检查碎片两两相交：维数上界，且交落在双方边界里；
5. 检查墙计数：定义域余维 1 面上的墙恰属于两个碎片，其余墙属于偶数个碎片；
6. 碎片组成多面体链，交给 lemma_eq_cycle 产出闭链。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from src.core.errors import (
    ConjectureAlarm,
    DimensionMismatchError,
    PositionError,
    PreconditionError,
)
from src.core.models.chain import Chain, PolytopeChain
from src.core.models.complex import AbstractComplex, Simplex
from src.core.models.geometry import Point, Polytope, Vector
from src.core.models.plmap import PLMap, PositionKind, PositionReport
from src.core.rules.arrangement import refine_with_coverage
from src.core.rules.chain import (
    boundary,
    is_simplicial,
    lemma_eq_cycle,
    lies_in_facet,
    make_chain,
    make_simplex,
    simplicial_witness,
    triangulate_cells,
    vertices_of,
)
from src.core.rules.complex import all_simplices, is_closed_pseudomanifold
from src.core.rules.geom import general_position_witness, strong_general_position_witness
from src.core.rules.linalg import ONE, ZERO, combine, dot, solve_unique
from src.core.rules.polytope import (
    boxes_meet,
    contains,
    enumerate_vertices,
    halfspaces,
    intersect_polytopes,
    make_polytope,
    simplex_polytope,
)

logger = logging.getLogger(__name__)


def make_plmap(domain: AbstractComplex, images: Sequence[Point]) -> PLMap:
    """
    构造 PL 映射并校验像点个数与维数。

    Raises:
        PreconditionError: 像点个数与顶点数不符。
        DimensionMismatchError: 像点维数不一致。
    """
    if len(images) != domain.vertex_count:
        raise PreconditionError(f"像点 {len(images)} 个，定义域顶点 {domain.vertex_count} 个")
    if images and any(len(p) != len(images[0]) for p in images):
        raise DimensionMismatchError("像点维数不一致")
    return PLMap(domain=domain, vertex_images=tuple(images))


def image_polytope(f: PLMap, simplex: Simplex) -> Polytope:
    """定义域单形的像（可能退化，按凸包计算）。"""
    return make_polytope(f.vertex_images[v] for v in simplex)


def image_chain(f: PLMap, facets: Sequence[Simplex] | None = None) -> Chain:
    """
    极大面（或给定面）像组成的链；像退化时报错。

    Raises:
        DegenerateError: 某个面的像仿射相关。
    """
    chosen = f.domain.facets if facets is None else facets
    simplices = [make_simplex([f.vertex_images[v] for v in s]) for s in chosen]
    dim = len(chosen[0]) - 1 if chosen else f.n
    return make_chain(simplices, dim=dim, ambient=f.d)


def _barycentric(points: Sequence[Point], x: Point) -> tuple[Fraction, ...] | None:
    """x 在仿射无关点组 points 上的重心坐标；x 不在仿射包内时返回 None。"""
    d = len(x)
    equations = [(tuple(p[i] for p in points), x[i]) for i in range(d)]
    equations.append((tuple(ONE for _ in points), ONE))
    return solve_unique(equations, len(points))


def evaluate(f: PLMap, x: Point) -> Point:
    """
    在 x 处求值（取第一个包含 x 的极大面做仿射延拓）。

    Raises:
        PreconditionError: 定义域无几何实现，或 x 不在定义域内。
    """
    realization = f.domain.realization
    if realization is None:
        raise PreconditionError("求值需要定义域的几何实现")
    for facet in f.domain.facets:
        lam = _barycentric([realization[v] for v in facet], x)
        if lam is not None and all(t >= 0 for t in lam):
            return combine(lam, [f.vertex_images[v] for v in facet])
    raise PreconditionError(f"点 {x} 不在定义域内")


# ========== 位置 ==========


def position_wrt_chain(f: PLMap, chain: Chain, kind: PositionKind, cap: int | None = None) -> PositionReport:
    """
    像点集 W 相对链 C 的位置。

    - strong：W ∩ V(C) = ∅ 且 W ⊔ V(C) 强一般位置；
    - general：对每个 σ ∈ C，W 不含 σ 的顶点，且 V(σ) ∪ W 一般位置。
    """
    return points_position(list(f.vertex_images), chain, kind, cap)


def points_position(points: Sequence[Point], chain: Chain, kind: PositionKind, cap: int | None = None) -> PositionReport:
    """position_wrt_chain 的点集版本（重新单纯化的前置/后置检查共用）。"""
    if chain.simplices and points and len(points[0]) != chain.ambient:
        raise DimensionMismatchError(f"点在 R^{len(points[0])}，链在 R^{chain.ambient}")
    if kind == "strong":
        chain_vertices = sorted(vertices_of(chain))
        vset = set(chain_vertices)
        for w in points:
            if w in vset:
                return PositionReport(kind, False, ((w,),))
        witness = strong_general_position_witness(list(points) + chain_vertices, chain.ambient, cap)
        return PositionReport(kind, witness is None, witness)

    for sigma in chain.sorted_simplices():
        vs = set(sigma.vertices)
        for w in points:
            if w in vs:
                return PositionReport(kind, False, ((w,), sigma.vertices))
        bad = general_position_witness(list(sigma.vertices) + list(points), chain.ambient)
        if bad is not None:
            return PositionReport(kind, False, (bad,))
    return PositionReport(kind, True)


# ========== 重新单纯化 ==========


def resimplicialize(
    chain: Chain,
    points: Sequence[Point],
    cap: int | None = None,
    arrangement_cap: int | None = None,
) -> Chain:
    """
    把链重新剖分成单纯链 C′，使 ∪C′ 与 ∪C 的模 2 支撑相同。

    - 前置：points 相对 C 强一般位置；
    - C 已是单纯链时原样返回；
    - 否则排列细分、保留奇数覆盖的胞腔并拉点剖分；
    - 后置：C′ 单纯且 points 相对 C′ 一般位置，不成立即为猜想反例。

    cap 为强一般位置的点数上限，arrangement_cap 为排列细分的输入上限。

    Raises:
        PositionError: 前置条件不成立。
        ConjectureAlarm: 后置条件不成立（附复现数据）。
    """
    before = points_position(points, chain, "strong", cap)
    if not before.holds:
        raise PositionError("点集相对链不满足强一般位置", witness=before.witness)
    if not chain.simplices or is_simplicial(chain):
        result = chain
    else:
        cells = [simplex_polytope(s) for s in chain.sorted_simplices()]
        refined = [
            rc.cell
            for rc in refine_with_coverage(cells, arrangement_cap)
            if rc.coverage % 2 == 1 and rc.cell.affine_dim == chain.dim
        ]
        result = triangulate_cells(refined, chain.dim, chain.ambient)
        logger.debug(f"[Resimplicialize] {len(chain)} 个单形 → {len(result)} 个单形")

    pair = simplicial_witness(result)
    if pair is not None:
        logger.warning(f"[Resimplicialize] 结果不是单纯链：{pair[0].vertices} / {pair[1].vertices}")
        raise ConjectureAlarm("重新单纯化结果不是单纯链", witness={"chain": chain, "points": list(points), "pair": pair})
    after = points_position(points, result, "general")
    if not after.holds:
        logger.warning(f"[Resimplicialize] 一般位置后置条件不成立：{after.witness}")
        raise ConjectureAlarm(
            "重新单纯化后点集相对新链不满足一般位置",
            witness={"chain": chain, "points": list(points), "violation": after.witness},
        )
    return result


# ========== 原像 ==========


def _piece(f: PLMap, facet: Simplex, sigma_poly: Polytope) -> Polytope | None:
    """γ ∩ f⁻¹(σ)：在 γ 的重心坐标里列半空间，枚举顶点后映回 R^m。"""
    realization = f.domain.realization
    assert realization is not None
    images = [f.vertex_images[v] for v in facet]
    size = len(facet)
    hs = halfspaces(sigma_poly)

    def pull(a: Vector) -> Vector:
        return tuple(dot(a, y) for y in images)

    equations = [(tuple(ONE for _ in range(size)), ONE)]
    equations.extend((pull(a), b) for a, b in hs.equalities)
    inequalities: list[tuple[Vector, Fraction]] = []
    for i in range(size):
        inequalities.append((tuple(-ONE if j == i else ZERO for j in range(size)), ZERO))
    inequalities.extend((pull(fc.normal), fc.offset) for fc in hs.facets)
    lambdas = enumerate_vertices(equations, inequalities, size)
    if not lambdas:
        return None
    domain_points = [realization[v] for v in facet]
    return make_polytope(combine(lam, domain_points) for lam in lambdas)


def preimage_pieces(f: PLMap, chain: Chain) -> list[tuple[Simplex, int, Polytope]]:
    """
    对单纯链 chain 的每个 σ 与定义域每个极大面 γ 求非空碎片 γ ∩ f⁻¹(σ)。

    Returns:
        (γ, σ 在 chain.sorted_simplices() 中的下标, 碎片) 列表。

    Raises:
        ConjectureAlarm: 某个碎片的维数不是 c + n − d。
    """
    target = chain.dim + f.n - f.d
    pieces: list[tuple[Simplex, int, Polytope]] = []
    sigmas = chain.sorted_simplices()
    for facet in f.domain.facets:
        for si, sigma in enumerate(sigmas):
            piece = _piece(f, facet, simplex_polytope(sigma))
            if piece is None:
                continue
            if piece.affine_dim != target:
                logger.warning(f"[Preimage] 碎片维数 {piece.affine_dim} != {target}：γ={facet}")
                raise ConjectureAlarm(
                    f"γ ∩ f⁻¹(σ) 的维数为 {piece.affine_dim}，期望 {target}",
                    witness={"facet": facet, "sigma": sigma.vertices},
                )
            pieces.append((facet, si, piece))
    return pieces


def _on_domain_face(points: Sequence[Point], corners: Sequence[Point]) -> bool:
    """points 是否全部落在单形 corners 的同一个余维 1 面上（某个重心坐标同为 0）。"""
    coords = [_barycentric(corners, p) for p in points]
    if any(lam is None for lam in coords):
        return False
    return any(all(lam[i] == 0 for lam in coords) for i in range(len(corners)))


def wall_count_witness(f: PLMap, pieces: Sequence[tuple[Simplex, int, Polytope]]) -> dict[str, object] | None:
    """
    碎片的墙计数检查（墙 = 某个碎片的刻面）。

    - 墙落在所在极大面 γ 的余维 1 面上：恰好属于两个碎片（γ 一侧、相邻极大面一侧各一个）；
    - 墙穿过 γ 内部：它的像落在 C′ 的某个 (c−1) 维面 κ 上，所属碎片数 = 含 κ 的 c 维单形数，须为偶数。

    Args:
        pieces: (γ, σ 下标, γ ∩ f⁻¹(σ)) 列表。

    Returns:
        第一面计数不符的墙：{"wall", "facet", "count", "kind"}；全部成立时返回 None。
    """
    realization = f.domain.realization
    assert realization is not None
    walls: dict[tuple[Point, ...], Simplex] = {}
    for facet, _, piece in pieces:
        for fc in halfspaces(piece).facets:
            walls.setdefault(fc.vertices, facet)

    for vertices in sorted(walls):
        facet = walls[vertices]
        count = sum(1 for _, _, p in pieces if all(contains(p, v) for v in vertices))
        if _on_domain_face(vertices, [realization[v] for v in facet]):
            if count != 2:
                return {"wall": vertices, "facet": facet, "count": count, "kind": "domain-face"}
        elif count % 2 == 1:
            return {"wall": vertices, "facet": facet, "count": count, "kind": "interior"}
    return None


def preimage_cycle(
    f: PLMap,
    chain: Chain,
    cap: int | None = None,
    arrangement_cap: int | None = None,
) -> Chain:
    """
    闭链原像：f⁻¹(C) 是 |T_N| 中某个 (c+n−d) 维闭链的支撑。

    Raises:
        DimensionMismatchError: c >= d、c + n < d 或维数不一致。
        PreconditionError: 定义域无几何实现 / 非闭 / f 碰到 ∂C。
        PositionError: 像点相对 C 不满足强一般位置。
        ConjectureAlarm: 碎片维数、交的位置、墙计数或引理检查失败（witness 给出违例碎片或墙）。
    """
    c, d, n = chain.dim, f.d, f.n
    if chain.ambient != d:
        raise DimensionMismatchError(f"链在 R^{chain.ambient}，映射目标为 R^{d}")
    if c >= d:
        raise DimensionMismatchError(f"要求 c < d，实际 c={c}, d={d}")
    target = c + n - d
    if target < 0:
        raise DimensionMismatchError(f"c + n − d = {target} < 0，原像一般为空")
    realization = f.domain.realization
    if realization is None or f.m is None:
        raise PreconditionError("原像计算需要定义域的几何实现")
    if not is_closed_pseudomanifold(f.domain):
        raise PreconditionError("定义域不是闭流形（存在不恰好属于两个极大面的余维 1 面）")

    # 1. f 避开 ∂C
    rim = [simplex_polytope(s) for s in boundary(chain).sorted_simplices()]
    if rim:
        for facet in f.domain.facets:
            img = image_polytope(f, facet)
            for edge in rim:
                if boxes_meet(img, edge) and intersect_polytopes(img, edge) is not None:
                    raise PreconditionError("f 的像与 ∂C 相交", witness=(facet, edge.vertices))

    # 2. 强一般位置 + 重新单纯化
    report = position_wrt_chain(f, chain, "strong", cap)
    if not report.holds:
        raise PositionError("像点相对 C 不满足强一般位置", witness=report.witness)
    resimplified = resimplicialize(chain, f.vertex_images, cap, arrangement_cap)

    # 3. 逐 (γ, σ) 求碎片
    pieces = preimage_pieces(f, resimplified)

    # 4. 碎片两两相交：维数上界 + 交落在双方边界里
    for (g1, s1, p1), (g2, s2, p2) in combinations(pieces, 2):
        if not boxes_meet(p1, p2):
            continue
        meet = intersect_polytopes(p1, p2)
        if meet is None:
            continue
        bound = target - 1 if (g1 == g2 or s1 == s2) else target - 2
        if meet.affine_dim > bound:
            logger.warning(f"[Preimage] 碎片交维数 {meet.affine_dim} 超过 {bound}")
            raise ConjectureAlarm(
                f"碎片交的维数 {meet.affine_dim} 超过 {bound}",
                witness={"pieces": (p1.vertices, p2.vertices)},
            )
        if not (lies_in_facet(p1, meet.vertices) and lies_in_facet(p2, meet.vertices)):
            logger.warning(f"[Preimage] 碎片交 {meet.vertices} 不在双方边界里")
            raise ConjectureAlarm(
                "碎片交不在双方边界里",
                witness={"pieces": (p1.vertices, p2.vertices), "meet": meet.vertices},
            )

    # 5. 墙计数
    bad_wall = wall_count_witness(f, pieces)
    if bad_wall is not None:
        logger.warning(f"[Preimage] 墙 {bad_wall['wall']} 属于 {bad_wall['count']} 个碎片（{bad_wall['kind']}）")
        raise ConjectureAlarm(f"墙的碎片计数为 {bad_wall['count']}（{bad_wall['kind']}）", witness=bad_wall)

    # 6. 多面体链引理
    if not pieces:
        return Chain(dim=target, ambient=f.m, simplices=frozenset())
    poly_chain = PolytopeChain(dim=target, ambient=f.m, cells=tuple(p for _, _, p in pieces))
    outcome = lemma_eq_cycle(poly_chain, arrangement_cap)
    if outcome.cycle is None:
        logger.warning(f"[Preimage] 引理假设 {outcome.hypothesis} 不成立")
        raise ConjectureAlarm(
            f"原像碎片不满足引理假设 {outcome.hypothesis}",
            witness={"hypothesis": outcome.hypothesis, "cells": [w.vertices for w in outcome.witness]},
        )
    logger.info(f"[Preimage] {len(pieces)} 个碎片 → {len(outcome.cycle)} 个 {target} 维单形")
    return outcome.cycle


# ========== 几乎嵌入 ==========


def find_almost_embedding_violation(f: PLMap) -> tuple[Simplex, Simplex] | None:
    """
    几乎嵌入检查：返回第一对像相交的不交单形 (σ, τ)，成立时返回 None。
    """
    simplices = all_simplices(f.domain)
    images = {s: image_polytope(f, s) for s in simplices}
    for sigma, tau in combinations(simplices, 2):
        if not set(sigma).isdisjoint(tau):
            continue
        a, b = images[sigma], images[tau]
        if boxes_meet(a, b) and intersect_polytopes(a, b) is not None:
            return sigma, tau
    return None


# ========== 场景与随机生成 ==========


def concurrent_diameters_scenario() -> tuple[Chain, list[Point]]:
    """
    三条过原点直径的有理化场景：C 为两条直径，U 为第三条直径的端点。

    U ∪ V(C) 不满足强一般位置（三线共点）。
    """
    F = Fraction
    p = [(F(1), F(0)), (F(-1), F(0)), (F(0), F(1)), (F(0), F(-1))]
    chain = make_chain([make_simplex([p[0], p[1]]), make_simplex([p[2], p[3]])])
    points = [(F(3, 5), F(4, 5)), (F(-3, 5), F(-4, 5))]
    return chain, points


def random_point(rng: random.Random, d: int, radius: int = 10**6, denominator: int = 1000) -> Point:
    """大网格上的随机有理点：Fraction(randint(−R, R), Q)。"""
    return tuple(Fraction(rng.randint(-radius, radius), denominator) for _ in range(d))


def random_plmap(domain: AbstractComplex, d: int, rng: random.Random, radius: int = 10**6, denominator: int = 1000) -> PLMap:
    """顶点像随机取自大网格的 PL 映射。"""
    images = [random_point(rng, d, radius, denominator) for _ in range(domain.vertex_count)]
    return make_plmap(domain, images)

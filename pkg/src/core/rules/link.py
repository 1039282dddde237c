"""
模 2 环绕数：锥、横截交点计数、奇异 Borromean 环检查与 Leibniz 三项。

lk(X, Y) := 一般位置锥 cone(a, X) 与 Y 的横截交点数模 2。
锥顶取矩曲线上的点 (q, q², …, q^d)，q = M + t；遇到退化依次换下一个 t。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from fractions import Fraction
from itertools import product

from src.core.config import ApexConfig
from src.core.errors import (
    DegenerateError,
    DimensionMismatchError,
    EmptyInputError,
    NonTransversalError,
    PreconditionError,
)
from src.core.models.chain import Chain
from src.core.models.geometry import GeomSimplex, Point
from src.core.models.link import BorromeanConfig, BorromeanReport, Cone, LeibnizTerms
from src.core.rules.chain import is_cycle, make_chain, make_simplex
from src.core.rules.complex import boundary_sphere, make_complex, staircase_product
from src.core.rules.linalg import ONE, ZERO, solve_affine
from src.core.rules.plmap import image_chain, make_plmap
from src.core.rules.polytope import bounding_box, boxes_meet, intersect_polytopes, simplex_polytope

logger = logging.getLogger(__name__)


def apex_point(t: int, d: int, base: Fraction | None = None) -> Point:
    """第 t 个锥顶：矩曲线点 (q, q², …, q^d)，q = M + t。"""
    q = (ApexConfig.get_base() if base is None else base) + t
    return tuple(q**i for i in range(1, d + 1))


def cone(apex: Point, base: Chain) -> Cone:
    """
    以 apex 为顶点的锥：每个底单形与 apex 联结。

    Raises:
        EmptyInputError: 底为空链。
        DegenerateError: apex 落在某个底单形的仿射包里（联结退化）。
    """
    if not base.simplices:
        raise EmptyInputError("锥的底为空链")
    if len(apex) != base.ambient:
        raise DimensionMismatchError(f"锥顶在 R^{len(apex)}，底在 R^{base.ambient}")
    cells = [make_simplex((apex, *s.vertices)) for s in base.sorted_simplices()]
    return Cone(apex=apex, base=base, cells=make_chain(cells, dim=base.dim + 1, ambient=base.ambient))


# ========== 横截交点 ==========


def meet_point(simplices: Sequence[GeomSimplex]) -> Point | None:
    """
    r 个单形（维数和 = d(r−1)）的横截交点。

    未知量为各单形的重心坐标，方程为"各单形上的点相等 + 每组坐标和为 1"，恰为方阵：
    - 唯一解且全部坐标 > 0：交于一点（所有单形内部）；
    - 唯一解但有坐标 < 0：不交；有坐标 = 0 而无负坐标：碰到边界，非横截；
    - 奇异：方程矛盾则不交；否则退回多面体求交，非空即非横截。

    Raises:
        NonTransversalError: 交非空但不是内部孤立点。
    """
    d = simplices[0].ambient
    sizes = [len(s.vertices) for s in simplices]
    total = sum(sizes)
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]

    equations: list[tuple[tuple[Fraction, ...], Fraction]] = []
    first = simplices[0]
    for k in range(1, len(simplices)):
        other = simplices[k]
        for coord in range(d):
            row = [ZERO] * total
            for i, v in enumerate(first.vertices):
                row[offsets[0] + i] = v[coord]
            for j, w in enumerate(other.vertices):
                row[offsets[k] + j] = -w[coord]
            equations.append((tuple(row), ZERO))
    for k, size in enumerate(sizes):
        row = [ZERO] * total
        for i in range(size):
            row[offsets[k] + i] = ONE
        equations.append((tuple(row), ONE))

    solution = solve_affine(equations, total)
    if solution is None:
        return None
    if not solution.basis:
        lam = solution.origin
        if any(x < 0 for x in lam):
            return None
        if any(x == 0 for x in lam):
            raise NonTransversalError("交点落在单形边界上", witness=tuple(s.vertices for s in simplices))
        weights = lam[: sizes[0]]
        return tuple(sum((w * v[c] for w, v in zip(weights, first.vertices)), ZERO) for c in range(d))

    meet = simplex_polytope(simplices[0])
    for s in simplices[1:]:
        meet = intersect_polytopes(meet, simplex_polytope(s))
        if meet is None:
            return None
    raise NonTransversalError("交集不是孤立点", witness=tuple(s.vertices for s in simplices))


def _boxes(chain: Chain) -> list[tuple[GeomSimplex, tuple[Point, Point]]]:
    return [(s, bounding_box(simplex_polytope(s))) for s in chain.sorted_simplices()]


def _boxes_overlap(boxes: Sequence[tuple[Point, Point]]) -> bool:
    d = len(boxes[0][0])
    return all(max(b[0][i] for b in boxes) <= min(b[1][i] for b in boxes) for i in range(d))


def intersection_parity(chains: Sequence[Chain]) -> int:
    """
    r 个链横截交点数模 2（维数和须为 d(r−1)）。

    Raises:
        DimensionMismatchError: 维数和不符。
        NonTransversalError: 某组单形非横截相交。
    """
    d = chains[0].ambient
    r = len(chains)
    if sum(c.dim for c in chains) != d * (r - 1):
        raise DimensionMismatchError(f"维数和 {sum(c.dim for c in chains)} != {d * (r - 1)}")
    boxed = [_boxes(c) for c in chains]
    count = 0
    for combo in product(*boxed):
        if not _boxes_overlap([b for _, b in combo]):
            continue
        if meet_point([s for s, _ in combo]) is not None:
            count += 1
    return count % 2


def transversal_parity(a: Chain, b: Chain) -> int:
    """dim A + dim B = d 时的横截交点数模 2。"""
    return intersection_parity([a, b])


def supports_witness(a: Chain, b: Chain) -> tuple[GeomSimplex, GeomSimplex] | None:
    """两链支撑相交时返回第一对相交单形。"""
    pa = [(s, simplex_polytope(s)) for s in a.sorted_simplices()]
    pb = [(s, simplex_polytope(s)) for s in b.sorted_simplices()]
    for (s, ps), (t, pt) in product(pa, pb):
        if boxes_meet(ps, pt) and intersect_polytopes(ps, pt) is not None:
            return s, t
    return None


def linking_mod2(
    x: Chain,
    y: Chain,
    apex_start: int = 0,
    retries: int | None = None,
    base: Fraction | None = None,
) -> int:
    """
    模 2 环绕数 lk(X, Y)。

    Args:
        x, y: 闭链，dim X + dim Y = d − 1，支撑不交（0-链要求点数为偶数）。
        apex_start: 锥顶序列起点。
        retries: 退化时最多换几次锥顶（默认读取 PLKIT_APEX_RETRIES）。
        base: 矩曲线基数 M（默认读取 PLKIT_APEX_BASE）。

    Raises:
        PreconditionError: 不是闭链 / 0-链点数为奇数 / 支撑相交。
        DimensionMismatchError: 维数条件不成立。
        NonTransversalError: 锥顶用尽仍退化。
    """
    d = x.ambient
    if y.ambient != d:
        raise DimensionMismatchError(f"两链的环境维数不同：{d} vs {y.ambient}")
    if x.dim + y.dim != d - 1:
        raise DimensionMismatchError(f"要求 dim X + dim Y = d − 1，实际 {x.dim} + {y.dim} vs {d - 1}")
    for name, ch in (("X", x), ("Y", y)):
        if not is_cycle(ch):
            raise PreconditionError(f"{name} 不是闭链")
        if ch.dim == 0 and len(ch) % 2 == 1:
            raise PreconditionError(f"{name} 是点数为奇数的 0-链")
    if not x.simplices or not y.simplices:
        return 0
    pair = supports_witness(x, y)
    if pair is not None:
        raise PreconditionError("两链支撑相交", witness=pair)

    attempts = ApexConfig.get_retries() if retries is None else retries
    for t in range(apex_start, apex_start + attempts):
        apex = apex_point(t, d, base)
        try:
            c = cone(apex, x)
            parity = transversal_parity(c.cells, y)
        except (DegenerateError, NonTransversalError) as exc:
            logger.debug(f"[Linking] 锥顶 t={t} 退化：{exc}")
            continue
        logger.debug(f"[Linking] 锥顶 t={t}：lk = {parity}")
        return parity
    raise NonTransversalError(f"连续 {attempts} 个锥顶均退化")


# ========== Borromean 环 ==========


def _component_chains(cfg: BorromeanConfig) -> dict[str, Chain]:
    torus = cfg.torus_map
    return {
        "T": image_chain(torus),
        "S_p": image_chain(cfg.sphere_p_map),
        "S_m": image_chain(cfg.sphere_m_map),
        "m": image_chain(torus, torus.domain.marks[cfg.meridian]),
        "p": image_chain(torus, torus.domain.marks[cfg.parallel]),
    }


def disjointness_witness(cfg: BorromeanConfig) -> tuple[GeomSimplex, GeomSimplex] | None:
    """性质 1：三个分支的像两两不交（逐对单形穷举）。"""
    chains = _component_chains(cfg)
    for a, b in (("T", "S_p"), ("T", "S_m"), ("S_p", "S_m")):
        pair = supports_witness(chains[a], chains[b])
        if pair is not None:
            return pair
    return None


def _validate_config(cfg: BorromeanConfig) -> None:
    d = cfg.ambient
    for name, f in (("torus", cfg.torus_map), ("sphere_p", cfg.sphere_p_map), ("sphere_m", cfg.sphere_m_map)):
        if f.d != d:
            raise DimensionMismatchError(f"{name} 的像在 R^{f.d}，期望 R^{d}")
    for mark in (cfg.meridian, cfg.parallel):
        if mark not in cfg.torus_map.domain.marks:
            raise PreconditionError(f"环面缺少标记 {mark!r}")


def borromean_check(
    cfg: BorromeanConfig,
    apex_start: int = 0,
    retries: int | None = None,
    base: Fraction | None = None,
) -> BorromeanReport:
    """
    逐条检查奇异 Borromean 环的三条性质。

    - 性质 1：像两两不交；不成立时不再计算环绕数；
    - 性质 2：lk(fS_p, fp) = 1 且 lk(fS_p, fm) = 0；
    - 性质 3：lk(fS_m, fm) = 1 且 lk(fS_m, fp) = 0；
    - l >= 1 时三条同时成立即为反例警报。

    retries / base 原样传给四次 linking_mod2。
    """
    _validate_config(cfg)
    lines: list[str] = []
    pair = disjointness_witness(cfg)
    if pair is not None:
        lines.append("性质 1：不成立（像相交）")
        return BorromeanReport(disjoint=False, witness=pair, transcript=lines)
    lines.append("性质 1：成立（像两两不交）")

    chains = _component_chains(cfg)
    report = BorromeanReport(
        disjoint=True,
        lk_pp=linking_mod2(chains["S_p"], chains["p"], apex_start, retries, base),
        lk_pm=linking_mod2(chains["S_p"], chains["m"], apex_start, retries, base),
        lk_mm=linking_mod2(chains["S_m"], chains["m"], apex_start, retries, base),
        lk_mp=linking_mod2(chains["S_m"], chains["p"], apex_start, retries, base),
        transcript=lines,
    )
    _, second, third = report.properties
    lines.append(f"性质 2：lk(S_p, p)={report.lk_pp} lk(S_p, m)={report.lk_pm} → {'成立' if second else '不成立'}")
    lines.append(f"性质 3：lk(S_m, m)={report.lk_mm} lk(S_m, p)={report.lk_mp} → {'成立' if third else '不成立'}")
    if all(report.properties) and cfg.l >= 1:
        report.alarm = True
        logger.warning(f"[Borromean] k={cfg.k} l={cfg.l} 时三条性质同时成立")
        lines.append("警报：l >= 1 时三条性质同时成立")
    return report


def cone_triple_parities(cycles: Sequence[Chain], apexes: Sequence[Point]) -> tuple[int, int, int]:
    """
    三个闭链 (X, Y, Z) 各自取锥后的三项交点奇偶：
        |X ∩ C_Y ∩ C_Z|、|C_X ∩ Y ∩ C_Z|、|C_X ∩ C_Y ∩ Z|。

    要求 dim X + dim Y + dim Z = 2d − 2；三项之和恒为偶数。

    Raises:
        DimensionMismatchError: 维数和不符。
        DegenerateError / NonTransversalError: 锥顶选得不一般。
    """
    x, y, z = cycles
    c_x, c_y, c_z = (cone(a, ch).cells for a, ch in zip(apexes, cycles))
    return (
        intersection_parity([x, c_y, c_z]),
        intersection_parity([c_x, y, c_z]),
        intersection_parity([c_x, c_y, z]),
    )


def leibniz_terms(
    cfg: BorromeanConfig,
    apex_start: int = 0,
    retries: int | None = None,
    base: Fraction | None = None,
) -> LeibnizTerms:
    """
    Leibniz 恒等式三项（模 2）：
        |f(T) ∩ C_p ∩ C_m|、|C_T ∩ f(S_p) ∩ C_m|、|C_T ∩ C_p ∩ f(S_m)|。

    每次尝试取三个相邻锥顶 (C_T, C_p, C_m)；任何退化都整体换下一组。
    三项之和是一维交 C_T ∩ C_p ∩ C_m 的边界点数，应为偶数；(1,0,0) 或奇数和即警报。

    Raises:
        PreconditionError: 性质 1 不成立或 (k, l) 不满足 k > l >= 1。
        NonTransversalError: 锥顶用尽仍退化。
    """
    _validate_config(cfg)
    if not (cfg.k > cfg.l >= 1):
        raise PreconditionError(f"Leibniz 三项要求 k > l >= 1，实际 k={cfg.k}, l={cfg.l}")
    if disjointness_witness(cfg) is not None:
        raise PreconditionError("三个分支的像相交，性质 1 不成立")

    chains = _component_chains(cfg)
    d = cfg.ambient
    attempts = ApexConfig.get_retries() if retries is None else retries
    for attempt in range(attempts):
        t0 = apex_start + 3 * attempt
        apexes = (apex_point(t0, d, base), apex_point(t0 + 1, d, base), apex_point(t0 + 2, d, base))
        try:
            terms = cone_triple_parities((chains["T"], chains["S_p"], chains["S_m"]), apexes)
        except (DegenerateError, NonTransversalError) as exc:
            logger.debug(f"[Leibniz] 第 {attempt + 1} 组锥顶退化：{exc}")
            continue
        result = LeibnizTerms(terms=terms, apexes=apexes, attempts=attempt + 1)
        if result.alarm:
            logger.warning(f"[Leibniz] 三项 {terms} 触发反例警报")
        return result
    raise NonTransversalError(f"连续 {attempts} 组锥顶均退化")


# ========== 构造 ==========


def _inverse_stereographic(u: Sequence[Fraction]) -> Point:
    """σ⁻¹(u) = (2u, |u|² − 1) / (1 + |u|²)：有理点落在单位球面上。"""
    norm = sum((x * x for x in u), ZERO)
    scale = ONE / (ONE + norm)
    return tuple(2 * x * scale for x in u) + ((norm - ONE) * scale,)


def unit_sphere_vertices(k: int) -> list[Point]:
    """∂Δ^{k+1} 在单位球面 S^k ⊂ R^{k+1} 上的有理顶点（包住原点）。"""
    us: list[tuple[Fraction, ...]] = []
    for j in range(k):
        us.append(tuple(Fraction(1, 2) if i == j else ZERO for i in range(k)))
    us.append(tuple(Fraction(-1, 2 * k) for _ in range(k)))
    points = [_inverse_stereographic(u) for u in us]
    points.append(tuple(ZERO for _ in range(k)) + (ONE,))
    return points


def _translate(points: Sequence[Point], shift: Sequence[Fraction]) -> list[Point]:
    return [tuple(a + b for a, b in zip(p, shift)) for p in points]


def remark_a_config(k: int) -> BorromeanConfig:
    """
    l = 0 的显式构造（R^{k+1}）：
    - T = {±1}×{±1}，像为 x 后补零；m = {±1}×{1}，p = {1}×{±1}；
    - S_p、S_m 为单位球面上的 ∂Δ^{k+1}，分别平移 (1, −1, 0, …) 与 (−1, 1, 0, …)。
    """
    if k < 1:
        raise PreconditionError(f"要求 k >= 1，实际 {k}")
    d = k + 1
    pad = tuple(ZERO for _ in range(d - 2))
    corners = [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    torus = make_complex(4, [(i,) for i in range(4)], marks={"m": [(1,), (3,)], "p": [(2,), (3,)]})
    torus_images = [(Fraction(a), Fraction(b)) + pad for a, b in corners]

    sphere = boundary_sphere(k)
    base = unit_sphere_vertices(k)
    shift_p = (ONE, -ONE) + pad
    shift_m = (-ONE, ONE) + pad
    return BorromeanConfig(
        k=k,
        l=0,
        torus_map=make_plmap(torus, torus_images),
        sphere_p_map=make_plmap(sphere, _translate(base, shift_p)),
        sphere_m_map=make_plmap(sphere, _translate(base, shift_m)),
    )


def _jitter(rng: random.Random, d: int, amount: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-amount, amount), 1000) for _ in range(d))


def product_torus_config(k: int, l: int, rng: random.Random, jitter: int = 20) -> BorromeanConfig:
    """
    随机的不交配置：环面为 ∂a × ∂b（a、b 为 R^{l+1} 中边长 6 的单形），
    两个小球面以 (a 的重心, b 的重心) 与 (a 的重心, b 的重心 + 8) 为中心；
    全部顶点加 ±jitter/1000 的扰动。

    要求 k > l >= 1（环面在 R^{2l+2} ⊂ R^d，球面在 R^{k+1} ⊂ R^d）。
    """
    if not (k > l >= 1):
        raise PreconditionError(f"要求 k > l >= 1，实际 k={k}, l={l}")
    d = k + l + 1
    side = Fraction(6)
    simplex = [tuple(ZERO for _ in range(l + 1))] + [
        tuple(side if i == j else ZERO for i in range(l + 1)) for j in range(l + 1)
    ]
    centroid = tuple(sum((p[i] for p in simplex), ZERO) / (l + 2) for i in range(l + 1))

    factor = make_complex(l + 2, boundary_sphere(l).facets, realization=simplex)
    torus_complex = staircase_product(factor, factor)
    tail = tuple(ZERO for _ in range(d - 2 * (l + 1)))
    torus_images = [
        tuple(a + b for a, b in zip(p + tail, _jitter(rng, d, jitter))) for p in torus_complex.realization or ()
    ]
    marked = make_complex(
        torus_complex.vertex_count,
        torus_complex.facets,
        marks={
            "m": [tuple(v * (l + 2) for v in f) for f in factor.facets],
            "p": list(factor.facets),
        },
    )

    sphere = boundary_sphere(k)
    small = [tuple(x / 2 for x in p) + tuple(ZERO for _ in range(d - k - 1)) for p in unit_sphere_vertices(k)]
    offset = tuple(Fraction(8) for _ in range(l + 1))
    centre_p = centroid + centroid + tuple(ZERO for _ in range(d - 2 * (l + 1)))
    centre_m = centroid + tuple(a + b for a, b in zip(centroid, offset)) + tuple(ZERO for _ in range(d - 2 * (l + 1)))
    sphere_p = [tuple(a + b + c for a, b, c in zip(p, centre_p, _jitter(rng, d, jitter))) for p in small]
    sphere_m = [tuple(a + b + c for a, b, c in zip(p, centre_m, _jitter(rng, d, jitter))) for p in small]
    return BorromeanConfig(
        k=k,
        l=l,
        torus_map=make_plmap(marked, torus_images),
        sphere_p_map=make_plmap(sphere, sphere_p),
        sphere_m_map=make_plmap(sphere, sphere_m),
    )


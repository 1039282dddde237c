"""
有界凸多面体：顶点/半空间两种表示的互转、求交、裁剪与拉点三角剖分。

约定：
- Polytope 只存极点（字典序）；半空间表示按需计算并缓存；
- 半空间表示 = 仿射包方程 + 仿射包内的刻面不等式 normal·x <= offset，
  normal 以第一个非零分量的绝对值归一化；
- 顶点枚举为桌面规模的暴力法：在仿射包参数空间里枚举 e 个约束取等号的子集。
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from src.core.errors import DimensionMismatchError
from src.core.models.geometry import Facet, GeomSimplex, HalfSpaces, Point, Polytope, Vector
from src.core.rules.geom import Equation, affine_dim, affine_equations, ambient_of
from src.core.rules.linalg import add, dot, nullspace, rank, solve_affine, solve_unique, sub

logger = logging.getLogger(__name__)


def _normalize(normal: Vector, offset: Fraction) -> tuple[Vector, Fraction]:
    lead = next(abs(x) for x in normal if x != 0)
    return tuple(x / lead for x in normal), offset / lead


def _supporting_facets(points: Sequence[Point], equations: list[Equation], k: int) -> list[Facet]:
    """暴力枚举 k 维点集的刻面：每个刻面由 k 个仿射无关的点张成。"""
    d = len(points[0])
    eq_rows = [n for n, _ in equations]
    seen: dict[tuple[Vector, Fraction], Facet] = {}
    for subset in combinations(points, k):
        base = subset[0]
        rows = [sub(p, base) for p in subset[1:]] + eq_rows
        normals = nullspace(rows, d)
        if len(normals) != 1:
            continue
        normal = normals[0]
        offset = dot(normal, base)
        values = [dot(normal, p) for p in points]
        if all(v <= offset for v in values):
            key = _normalize(normal, offset)
        elif all(v >= offset for v in values):
            key = _normalize(tuple(-x for x in normal), -offset)
        else:
            continue
        if key in seen:
            continue
        tight = tuple(sorted(p for p in points if dot(key[0], p) == key[1]))
        seen[key] = Facet(normal=key[0], offset=key[1], vertices=tight)
    return sorted(seen.values(), key=lambda f: (f.normal, f.offset))


def make_polytope(points: Iterable[Point]) -> Polytope:
    """
    由点集构造多面体（凸包），仅保留极点。

    判定极点：点所在刻面的法向量与仿射包方程合起来满秩（= d）。

    Raises:
        EmptyInputError: 空点集。
        DimensionMismatchError: 维数不一致。
    """
    pts = sorted(set(points))
    d = ambient_of(pts)
    k = affine_dim(pts)
    if k == 0:
        return Polytope(vertices=(pts[0],), affine_dim=0, ambient_dim=d)
    equations = affine_equations(pts)
    facets = _supporting_facets(pts, equations, k)
    eq_rows = [n for n, _ in equations]
    extreme: list[Point] = []
    for p in pts:
        tight_rows = [f.normal for f in facets if dot(f.normal, p) == f.offset]
        if rank(eq_rows + tight_rows) == d:
            extreme.append(p)
    return Polytope(vertices=tuple(extreme), affine_dim=k, ambient_dim=d)


def simplex_polytope(simplex: GeomSimplex) -> Polytope:
    """几何单形的顶点即极点，直接构造。"""
    return Polytope(vertices=simplex.vertices, affine_dim=simplex.dim, ambient_dim=simplex.ambient)


@lru_cache(maxsize=4096)
def halfspaces(p: Polytope) -> HalfSpaces:
    """多面体的半空间表示（缓存）。"""
    pts = list(p.vertices)
    equations = affine_equations(pts)
    facets = _supporting_facets(pts, equations, p.affine_dim) if p.affine_dim > 0 else []
    return HalfSpaces(equalities=tuple(equations), facets=tuple(facets))


def contains(p: Polytope, x: Point) -> bool:
    """x ∈ p（闭集，精确判定）。"""
    hs = halfspaces(p)
    if any(dot(n, x) != b for n, b in hs.equalities):
        return False
    return all(dot(f.normal, x) <= f.offset for f in hs.facets)


def bounding_box(p: Polytope) -> tuple[Point, Point]:
    lo = tuple(min(v[i] for v in p.vertices) for i in range(p.ambient_dim))
    hi = tuple(max(v[i] for v in p.vertices) for i in range(p.ambient_dim))
    return lo, hi


def boxes_meet(a: Polytope, b: Polytope) -> bool:
    """包围盒是否相交（相交检查的快速排除）。"""
    alo, ahi = bounding_box(a)
    blo, bhi = bounding_box(b)
    return all(alo[i] <= bhi[i] and blo[i] <= ahi[i] for i in range(a.ambient_dim))


# ========== 顶点枚举 ==========


def enumerate_vertices(
    equations: Sequence[Equation],
    inequalities: Sequence[tuple[Vector, Fraction]],
    d: int,
) -> list[Point]:
    """
    {a·x = b} ∩ {n·x <= β} 的顶点（假定有界）。

    1. 解方程组，得到参数化 x = x0 + B·t（t ∈ R^e）；
    2. 不等式化为 t 空间的约束 (n·B)·t <= β − n·x0；
    3. 枚举 e 个约束取等号的子集，唯一解且满足全部约束即为顶点。

    Returns:
        顶点列表（去重、字典序）；不可行时返回空列表。
    """
    solution = solve_affine(equations, d)
    if solution is None:
        return []
    x0, basis = solution.origin, solution.basis
    e = len(basis)
    reduced: list[tuple[Vector, Fraction]] = []
    for n, beta in inequalities:
        row = tuple(dot(n, b) for b in basis)
        rhs = beta - dot(n, x0)
        if all(x == 0 for x in row):
            if rhs < 0:
                return []
            continue
        reduced.append((row, rhs))

    def lift(t: Sequence[Fraction]) -> Point:
        point = x0
        for coef, b in zip(t, basis):
            point = add(point, tuple(coef * x for x in b))
        return point

    if e == 0:
        return [x0]
    found: set[Point] = set()
    for subset in combinations(reduced, e):
        t = solve_unique(list(subset), e)
        if t is None:
            continue
        if all(dot(row, t) <= rhs for row, rhs in reduced):
            found.add(lift(t))
    return sorted(found)


def intersect_polytopes(a: Polytope, b: Polytope) -> Polytope | None:
    """
    精确求交 a ∩ b。

    Returns:
        交多面体（极点表示）；交为空时返回 None。

    Raises:
        DimensionMismatchError: 环境维数不同。
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"环境维数不同：{a.ambient_dim} vs {b.ambient_dim}")
    if a == b:
        return a
    if not boxes_meet(a, b):
        return None
    ha, hb = halfspaces(a), halfspaces(b)
    equations = list(ha.equalities) + list(hb.equalities)
    inequalities = [(f.normal, f.offset) for f in ha.facets + hb.facets]
    vertices = enumerate_vertices(equations, inequalities, a.ambient_dim)
    if not vertices:
        return None
    return make_polytope(vertices)


def clip(p: Polytope, normal: Vector, offset: Fraction) -> Polytope | None:
    """p ∩ {normal·x <= offset}；为空时返回 None。"""
    values = [dot(normal, v) for v in p.vertices]
    if all(v <= offset for v in values):
        return p
    if all(v > offset for v in values):
        return None
    hs = halfspaces(p)
    inequalities = [(f.normal, f.offset) for f in hs.facets] + [(normal, offset)]
    vertices = enumerate_vertices(list(hs.equalities), inequalities, p.ambient_dim)
    return make_polytope(vertices) if vertices else None


# ========== 拉点三角剖分 ==========


def placing_triangulation(
    p: Polytope,
    order: Callable[[Point], object] | None = None,
    points: Iterable[Point] | None = None,
) -> list[GeomSimplex]:
    """
    按给定全序逐点"拉"出三角剖分。

    过程：
    - 初始胞腔为 p，带着落在 p 中的全部点（顶点 + 额外点）；
    - 按序取点 v：每个含 v 的胞腔 X 替换为 conv(v ∪ F)，F 取遍 X 中不含 v 的刻面；
    - 胞腔为单形且只含自身顶点时定型。

    面的诱导剖分等于该面在诱导序下的剖分，因此共享面的相邻胞腔给出相容剖分
    （前提是两侧使用同一组点）。

    Args:
        p: 待剖分多面体。
        order: 点的排序键，默认字典序。
        points: 额外点（落在 p 外的点被忽略），默认只用 p 的顶点。

    Returns:
        affine_dim(p) 维单形列表（规范序）。
    """
    key = order or (lambda x: x)
    pool = set(p.vertices)
    if points is not None:
        pool.update(x for x in points if contains(p, x))
    k = p.affine_dim
    cells: list[tuple[Polytope, frozenset[Point]]] = [(p, frozenset(pool))]

    for v in sorted(pool, key=key):
        next_cells: list[tuple[Polytope, frozenset[Point]]] = []
        for cell, cell_points in cells:
            if v not in cell_points or (len(cell.vertices) == k + 1 and len(cell_points) == k + 1):
                next_cells.append((cell, cell_points))
                continue
            if k == 0:
                next_cells.append((cell, cell_points))
                continue
            for facet in halfspaces(cell).facets:
                if dot(facet.normal, v) == facet.offset:
                    continue
                on_facet = [x for x in cell_points if dot(facet.normal, x) == facet.offset]
                piece = make_polytope([v, *on_facet])
                piece_points = frozenset(x for x in cell_points if contains(piece, x))
                next_cells.append((piece, piece_points))
        cells = next_cells

    simplices: set[GeomSimplex] = set()
    for cell, cell_points in cells:
        if len(cell.vertices) != k + 1 or len(cell_points) != k + 1:
            raise RuntimeError(f"拉点剖分未收敛：胞腔 {cell.vertices} 含 {len(cell_points)} 个点")
        simplices.add(GeomSimplex(vertices=cell.vertices))
    logger.debug(f"[Triangulate] {len(p.vertices)} 顶点 / {len(pool)} 点 → {len(simplices)} 个单形")
    return sorted(simplices)

"""
多面体族的公共细分（排列细分）。

每个输入多面体 X 沿同一连通分量内其他多面体的"平面"递归切分：
平面取 Aff(Y) 与 Y 的各刻面仿射包；只有在 Aff(X) 内的迹恰为超平面、
且 X 的当前碎片顶点严格分居两侧时才切。

输出胞腔按顶点去重；coverage 记录每个胞腔被多少个输入完整覆盖（模 2 支撑用）。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.core.config import get_arrangement_cap
from src.core.errors import CapExceededError, DimensionMismatchError
from src.core.models.geometry import Point, Polytope, Vector
from src.core.rules.geom import Equation
from src.core.rules.linalg import dot, rref, solve_affine
from src.core.rules.polytope import boxes_meet, clip, halfspaces, intersect_polytopes
from src.core.rules.unionfind import UnionFind

logger = logging.getLogger(__name__)


@dataclass(slots=True, frozen=True)
class RefinedCell:
    """细分胞腔及其覆盖次数。"""

    cell: Polytope
    coverage: int


def _flats(p: Polytope) -> list[list[Equation]]:
    """多面体的切分平面：仿射包本身 + 每个刻面的仿射包。"""
    hs = halfspaces(p)
    base = list(hs.equalities)
    flats = [base] if base else []
    flats.extend(base + [(f.normal, f.offset)] for f in hs.facets)
    return flats


def _trace_hyperplane(x: Polytope, flat: list[Equation]) -> tuple[Vector, Fraction] | None:
    """
    平面在 Aff(X) 内的迹：恰为超平面时返回 (n, β)（n·x = β 在 Aff(X) 上与迹一致）。

    1. 参数化 Aff(X)：x = p0 + B·t；
    2. 迹方程 (A·B)·t = c − A·p0，相容且秩为 1 时为超平面；
    3. 由化简后的单行 g·t = h 解 Bᵀn = g，β = n·p0 + h。
    """
    d = x.ambient_dim
    p0 = x.vertices[0]
    basis = solve_affine(list(halfspaces(x).equalities), d)
    if basis is None:
        return None
    directions = basis.basis
    k = len(directions)
    if k == 0:
        return None
    rows = [[dot(a, b) for b in directions] + [c - dot(a, p0)] for a, c in flat]
    reduced, pivots = rref(rows, k)
    if any(row[k] != 0 for row in reduced[len(pivots) :]):
        return None
    if len(pivots) != 1:
        return None
    g, h = reduced[0][:k], reduced[0][k]
    # Bᵀn = g
    system = [(b, g[i]) for i, b in enumerate(directions)]
    n_sol = solve_affine(system, d)
    if n_sol is None:
        return None
    n = n_sol.origin
    return n, dot(n, p0) + h


def _split(pieces: list[Polytope], cut: tuple[Vector, Fraction]) -> list[Polytope]:
    n, beta = cut
    out: list[Polytope] = []
    for piece in pieces:
        values = [dot(n, v) - beta for v in piece.vertices]
        if not (any(v > 0 for v in values) and any(v < 0 for v in values)):
            out.append(piece)
            continue
        for side in (clip(piece, n, beta), clip(piece, tuple(-c for c in n), -beta)):
            if side is not None and side.affine_dim == piece.affine_dim:
                out.append(side)
    return out


def _components(ps: Sequence[Polytope]) -> list[list[int]]:
    uf = UnionFind(len(ps))
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if uf.find(i) == uf.find(j):
                continue
            if boxes_meet(ps[i], ps[j]) and intersect_polytopes(ps[i], ps[j]) is not None:
                uf.union(i, j)
    return uf.groups()


def refine_with_coverage(ps: Sequence[Polytope], cap: int | None = None) -> list[RefinedCell]:
    """
    排列细分并统计覆盖次数。

    Args:
        ps: 输入多面体（环境维数一致）。
        cap: 输入个数上限（默认读取 PLKIT_ARRANGEMENT_CAP）。

    Returns:
        按顶点规范序排列的胞腔及覆盖次数。

    Raises:
        CapExceededError: 输入超过上限。
        DimensionMismatchError: 环境维数不一致。
    """
    limit = get_arrangement_cap() if cap is None else cap
    if len(ps) > limit:
        raise CapExceededError(f"排列细分输入 {len(ps)} 个多面体，超过上限 {limit}")
    if not ps:
        return []
    ambient = ps[0].ambient_dim
    if any(p.ambient_dim != ambient for p in ps):
        raise DimensionMismatchError("排列细分的输入环境维数不一致")

    coverage: dict[tuple[Point, ...], int] = {}
    cells: dict[tuple[Point, ...], Polytope] = {}
    for group in _components(ps):
        flats = {i: _flats(ps[i]) for i in group}
        for i in group:
            pieces = [ps[i]]
            for j in group:
                if j == i:
                    continue
                for flat in flats[j]:
                    cut = _trace_hyperplane(ps[i], flat)
                    if cut is not None:
                        pieces = _split(pieces, cut)
            for piece in pieces:
                cells[piece.vertices] = piece
                coverage[piece.vertices] = coverage.get(piece.vertices, 0) + 1
    result = [RefinedCell(cell=cells[key], coverage=coverage[key]) for key in sorted(cells)]
    logger.debug(f"[Arrangement] {len(ps)} 个输入 → {len(result)} 个胞腔")
    return result


def refine_arrangement(ps: Sequence[Polytope], cap: int | None = None) -> list[Polytope]:
    """公共细分：胞腔相对内部两两不交，并集等于输入并集。"""
    return [rc.cell for rc in refine_with_coverage(ps, cap)]

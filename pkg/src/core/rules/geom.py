"""
点集的仿射维数与（强）一般位置谓词。

全部判定基于精确有理秩计算；强一般位置需要枚举互不相交子集族，
点数超过上限直接报错（不做抽样）。
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from src.core.config import get_sgp_cap
from src.core.errors import CapExceededError, DimensionMismatchError, EmptyInputError
from src.core.models.geometry import Point, Vector
from src.core.rules.linalg import dot, nullspace, rank, solve_affine, sub

logger = logging.getLogger(__name__)

Equation = tuple[Vector, Fraction]
"""仿射方程 (a, b)，表示 a·x = b。"""


def ambient_of(points: Sequence[Point]) -> int:
    """
    校验点集非空且维数一致，返回环境维数。

    Raises:
        EmptyInputError: 空点集。
        DimensionMismatchError: 坐标长度不一致。
    """
    if not points:
        raise EmptyInputError("点集为空")
    d = len(points[0])
    for p in points:
        if len(p) != d:
            raise DimensionMismatchError(f"点的维数不一致：期望 {d}，实际 {len(p)}", witness=p)
    return d


def affine_dim(points: Sequence[Point]) -> int:
    """
    仿射包 Aff(V) 的维数。

    单点返回 0；空集是错误而不是 −∞。
    """
    ambient_of(points)
    base = points[0]
    return rank([sub(p, base) for p in points[1:]])


def is_affinely_independent(points: Sequence[Point]) -> bool:
    return affine_dim(points) == len(points) - 1


def affine_equations(points: Sequence[Point]) -> list[Equation]:
    """Aff(V) 的方程组（行数 = d − dim Aff(V)）。"""
    d = ambient_of(points)
    base = points[0]
    normals = nullspace([sub(p, base) for p in points[1:]], d) if len(points) > 1 else nullspace([], d)
    return [(n, dot(n, base)) for n in normals]


def general_position_witness(points: Sequence[Point], d: int) -> tuple[Point, ...] | None:
    """
    一般位置反例：返回第一个仿射相关的子集，成立时返回 None。

    判定口径：大小为 min(|V|, d+1) 的子集全部仿射无关
    （大子集无关蕴含其所有子集无关）。
    """
    if not points:
        return None
    if ambient_of(points) != d:
        raise DimensionMismatchError(f"点集不在 R^{d} 中")
    size = min(len(points), d + 1)
    for subset in combinations(points, size):
        if not is_affinely_independent(subset):
            return subset
    return None


def in_general_position(points: Sequence[Point], d: int) -> bool:
    """任一 i 维平面（1 <= i < d）不含 i+2 个点。"""
    return general_position_witness(points, d) is None


# ========== 强一般位置 ==========


def strong_general_position_witness(
    points: Sequence[Point],
    d: int,
    cap: int | None = None,
) -> tuple[tuple[Point, ...], ...] | None:
    """
    强一般位置反例搜索。

    对所有 r >= 2 个两两不交非空子集 V_1..V_r，要求
        dim ⋂ Aff(V_i) <= ∑ dim Aff(V_i) − d(r−1)，
    交为空时视为 −∞（恒成立）。

    枚举化简：
    - 相关子集与其仿射基有相同的仿射包，只需枚举仿射无关的块（大小 1..d）；
    - 满维块（d+1 个点）的仿射包是 R^d，去掉后两边同减 d，可跳过；
    - 块按最小下标递增排列，每个子集族只枚举一次；
    - 前缀交为空则整棵子树恒成立，剪枝。

    Args:
        points: 点列表（允许重复点，重复点本身即反例）。
        d: 环境维数。
        cap: 点数上限（默认读取 PLKIT_SGP_CAP）。

    Returns:
        违例子集族；成立时返回 None。

    Raises:
        CapExceededError: 点数超过上限。
    """
    if not points:
        return None
    if ambient_of(points) != d:
        raise DimensionMismatchError(f"点集不在 R^{d} 中")
    limit = get_sgp_cap() if cap is None else cap
    if len(points) > limit:
        raise CapExceededError(f"强一般位置检查点数 {len(points)} 超过上限 {limit}")

    # 1. 预计算所有仿射无关块及其仿射包方程
    blocks: list[tuple[tuple[int, ...], int, list[Equation]]] = []
    for size in range(1, min(len(points), d) + 1):
        for idx in combinations(range(len(points)), size):
            subset = [points[i] for i in idx]
            if is_affinely_independent(subset):
                blocks.append((idx, size - 1, affine_equations(subset)))
    blocks.sort(key=lambda b: b[0])

    # 2. 深度优先枚举子集族
    found: list[tuple[tuple[int, ...], ...]] = []

    def search(start: int, used: frozenset[int], chosen: list[int], equations: list[Equation], dim_sum: int) -> bool:
        for bi in range(start, len(blocks)):
            idx, dim, eqs = blocks[bi]
            if used.intersection(idx):
                continue
            if chosen and idx[0] < blocks[chosen[-1]][0][0]:
                continue
            stacked = equations + eqs
            solution = solve_affine(stacked, d)
            if solution is None:
                continue
            r = len(chosen) + 1
            total = dim_sum + dim
            if r >= 2 and len(solution.basis) > total - d * (r - 1):
                found.append(tuple(blocks[c][0] for c in chosen) + (idx,))
                return True
            if search(bi + 1, used.union(idx), chosen + [bi], stacked, total):
                return True
        return False

    if not search(0, frozenset(), [], [], 0):
        return None
    witness = tuple(tuple(points[i] for i in block) for block in found[0])
    logger.debug(f"[Geom] 强一般位置不成立：{len(witness)} 个子集")
    return witness


def in_strong_general_position(points: Sequence[Point], d: int, cap: int | None = None) -> bool:
    """强一般位置判定（见 strong_general_position_witness）。"""
    return strong_general_position_witness(points, d, cap) is None

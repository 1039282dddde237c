"""
精确有理线性代数（Gauss-Jordan 消元）。

只服务桌面规模（维数 <= 十几）：秩、零空间、仿射解空间、方阵唯一解。
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.core.models.geometry import Point, Vector

Row = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def scale(c: Fraction, a: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in a)


def combine(weights: Sequence[Fraction], points: Sequence[Point]) -> Point:
    """∑ w_i p_i。"""
    dim = len(points[0])
    return tuple(sum((w * p[i] for w, p in zip(weights, points)), ZERO) for i in range(dim))


def rref(rows: Sequence[Sequence[Fraction]], n_cols: int) -> tuple[list[Row], list[int]]:
    """
    化为行最简形。

    Args:
        rows: 矩阵行（可为增广矩阵）。
        n_cols: 参与选主元的列数（增广列不选主元）。

    Returns:
        (非零行, 主元列下标)。
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        lead = m[r][col]
        if lead != 1:
            m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r] + [row for row in m[r:] if any(row)], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    _, pivots = rref(rows, len(rows[0]))
    return len(pivots)


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> list[Vector]:
    """齐次方程组 rows·x = 0 的一组基（行为空时返回标准基）。"""
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(n_cols)) for j in range(n_cols)]
    reduced, pivots = rref(rows, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


@dataclass(slots=True, frozen=True)
class AffineSolution:
    """仿射解空间 {origin + ∑ t_i basis_i}。"""

    origin: Vector
    basis: tuple[Vector, ...]


def solve_affine(
    equations: Sequence[tuple[Sequence[Fraction], Fraction]],
    n_cols: int,
) -> AffineSolution | None:
    """
    求解 a·x = b 方程组的全部解。

    Returns:
        仿射解空间；方程组矛盾时返回 None。
    """
    if not equations:
        return AffineSolution(tuple([ZERO] * n_cols), tuple(nullspace([], n_cols)))
    aug = [list(a) + [b] for a, b in equations]
    reduced, pivots = rref(aug, n_cols)
    # 主元落在增广列之外却出现 0 = b≠0 的行即矛盾
    for row in reduced[len(pivots) :]:
        if row[n_cols] != 0:
            return None
    origin = [ZERO] * n_cols
    for row, pc in zip(reduced, pivots):
        origin[pc] = row[n_cols]
    basis = nullspace([row[:n_cols] for row in reduced[: len(pivots)]], n_cols) if pivots else nullspace([], n_cols)
    return AffineSolution(tuple(origin), tuple(basis))


def solve_unique(
    equations: Sequence[tuple[Sequence[Fraction], Fraction]],
    n_cols: int,
) -> Vector | None:
    """方程组有唯一解时返回该解，否则（无解或无穷多解）返回 None。"""
    sol = solve_affine(equations, n_cols)
    if sol is None or sol.basis:
        return None
    return sol.origin

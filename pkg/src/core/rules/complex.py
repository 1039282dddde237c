"""
抽象单纯复形：球面、阶梯积、环面小工具、删积与常用统计。
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from itertools import combinations

from src.core.errors import ParameterRangeError, PreconditionError
from src.core.models.complex import AbstractComplex, DeletedProduct, ProductCell, Simplex


def make_complex(
    vertex_count: int,
    facets: Iterable[Sequence[int]],
    realization: Sequence | None = None,
    marks: dict[str, Iterable[Sequence[int]]] | None = None,
) -> AbstractComplex:
    """
    规范化构造复形：极大面排序去重、去掉被包含的面、校验下标范围。

    Raises:
        PreconditionError: 下标越界或实现点数与顶点数不符。
    """
    cleaned = sorted({tuple(sorted(f)) for f in facets})
    for f in cleaned:
        if not f or f[0] < 0 or f[-1] >= vertex_count or len(set(f)) != len(f):
            raise PreconditionError(f"极大面 {f} 的顶点下标不合法（顶点数 {vertex_count}）", witness=f)
    as_sets = [set(f) for f in cleaned]
    maximal = tuple(f for f, s in zip(cleaned, as_sets) if not any(s < other for other in as_sets))
    if realization is not None and len(realization) != vertex_count:
        raise PreconditionError(f"几何实现有 {len(realization)} 个点，顶点数为 {vertex_count}")
    normalized_marks = {name: tuple(sorted({tuple(sorted(f)) for f in fs})) for name, fs in (marks or {}).items()}
    return AbstractComplex(
        vertex_count=vertex_count,
        facets=maximal,
        realization=tuple(realization) if realization is not None else None,
        marks=normalized_marks,
    )


# ========== 统计 ==========


def all_simplices(k: AbstractComplex) -> list[Simplex]:
    """全部非空单形（向下封闭），按 (维数, 顶点) 排序。"""
    out: set[Simplex] = set()
    for f in k.facets:
        for size in range(1, len(f) + 1):
            out.update(combinations(f, size))
    return sorted(out, key=lambda s: (len(s), s))


def faces(k: AbstractComplex, i: int) -> list[Simplex]:
    """全部 i 维单形。"""
    return [s for s in all_simplices(k) if len(s) == i + 1]


def f_vector(k: AbstractComplex) -> tuple[int, ...]:
    counts = Counter(len(s) - 1 for s in all_simplices(k))
    return tuple(counts.get(i, 0) for i in range(k.dim + 1))


def euler_characteristic(k: AbstractComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(f_vector(k)))


def subcomplex(k: AbstractComplex, mark: str) -> AbstractComplex:
    """按标记取子复形（保留原顶点下标）。"""
    if mark not in k.marks:
        raise PreconditionError(f"复形没有标记 {mark!r}")
    return make_complex(k.vertex_count, k.marks[mark], realization=k.realization)


def is_boundary_of_simplex(k: AbstractComplex) -> bool:
    """是否同构于 ∂Δ^{n+1}：恰好 n+2 个顶点上的全部 n 维面。"""
    if not k.facets:
        return False
    n = k.dim
    used = sorted({v for f in k.facets for v in f})
    if len(used) != n + 2:
        return False
    return set(k.facets) == set(combinations(used, n + 1))


def is_closed_pseudomanifold(k: AbstractComplex) -> bool:
    """纯 n 维且每个 (n−1) 维面恰在两个极大面中（n = 0 时恰有两个点）。"""
    if not k.facets:
        return False
    n = k.dim
    if any(len(f) != n + 1 for f in k.facets):
        return False
    if n == 0:
        return len(k.facets) == 2
    counts = Counter(face for f in k.facets for face in combinations(f, n))
    return all(c == 2 for c in counts.values())


# ========== 生成器 ==========


def boundary_sphere(n: int) -> AbstractComplex:
    """∂Δ^{n+1}：n+2 个顶点上的全部 n 维面。"""
    if n < 0:
        raise ParameterRangeError(f"球面维数必须 >= 0，实际 {n}")
    return make_complex(n + 2, combinations(range(n + 2), n + 1))


def _staircase_paths(i: int, j: int) -> list[list[tuple[int, int]]]:
    """(0,0) 到 (i,j) 的单调格路（每步 +1 行或 +1 列）。"""
    paths: list[list[tuple[int, int]]] = []
    for rows in combinations(range(i + j), i):
        p, q = 0, 0
        path = [(0, 0)]
        for step in range(i + j):
            if step in rows:
                p += 1
            else:
                q += 1
            path.append((p, q))
        paths.append(path)
    return paths


def staircase_product(a: AbstractComplex, b: AbstractComplex) -> AbstractComplex:
    """
    |A|×|B| 的阶梯三角剖分。

    顶点 (i, j) 编号 i·|B| + j；每对极大面 (a: i 维, b: j 维) 贡献 C(i+j, i) 个顶层单形。
    两者都有几何实现时，(i, j) 实现为两坐标拼接。
    """
    nb = b.vertex_count
    facets: set[Simplex] = set()
    for fa in a.facets:
        for fb in b.facets:
            for path in _staircase_paths(len(fa) - 1, len(fb) - 1):
                facets.add(tuple(fa[p] * nb + fb[q] for p, q in path))
    realization = None
    if a.realization is not None and b.realization is not None:
        realization = [pa + pb for pa in a.realization for pb in b.realization]
    return make_complex(a.vertex_count * nb, facets, realization=realization)


def torus_gadget(l: int) -> AbstractComplex:
    """
    2l 维环面 ∂Δ^{l+1} × ∂Δ^{l+1}，标记经线 m = A×{v0} 与纬线 p = {v0}×B。

    Raises:
        ParameterRangeError: l < 1。
    """
    if l < 1:
        raise ParameterRangeError(f"环面小工具要求 l >= 1，实际 {l}")
    sphere = boundary_sphere(l)
    torus = staircase_product(sphere, sphere)
    nb = sphere.vertex_count
    meridian = [tuple(v * nb for v in f) for f in sphere.facets]
    parallel = [tuple(f) for f in sphere.facets]
    return make_complex(torus.vertex_count, torus.facets, marks={"m": meridian, "p": parallel})


def deleted_product(k: AbstractComplex) -> DeletedProduct:
    """
    单纯删积：全部有序不交单形对 (σ, τ)，按字典序排列。
    """
    simplices = all_simplices(k)
    cells: list[ProductCell] = []
    for sigma in simplices:
        s = set(sigma)
        cells.extend((sigma, tau) for tau in simplices if s.isdisjoint(tau))
    return DeletedProduct(cells=tuple(sorted(cells)))

"""抽象单纯复形与删积。"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .geometry import Point

Simplex = tuple[int, ...]
"""抽象单形：升序顶点下标元组。"""

ProductCell = tuple[Simplex, Simplex]
"""删积胞腔 σ×τ，σ ∩ τ = ∅。"""


@dataclass(slots=True)
class AbstractComplex:
    """
    有限抽象单纯复形（以极大面表示，向下封闭隐含）。

    - vertex_count: 顶点数，顶点记为 0..vertex_count-1；
    - facets: 极大面，升序元组且整体排序；任一极大面不含于另一极大面；
    - realization: 可选几何实现（顶点 → R^m 中的点）；
    - marks: 具名子复形（以极大面列表给出），如环面的经线 m、纬线 p。
    """

    vertex_count: int
    facets: tuple[Simplex, ...]
    realization: tuple[Point, ...] | None = None
    marks: dict[str, tuple[Simplex, ...]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        """复形维数（空复形为 -1）。"""
        return max((len(f) - 1 for f in self.facets), default=-1)

    @property
    def realization_dim(self) -> int | None:
        """几何实现所在空间的维数 m。"""
        if not self.realization:
            return None
        return len(self.realization[0])


@dataclass(slots=True)
class DeletedProduct:
    """
    单纯删积 K̃：所有不交单形对 (σ, τ) 组成的积胞腔复形，带交换对合。

    cells 按 (σ, τ) 字典序排列；对合 (σ, τ) ↔ (τ, σ) 无不动点。
    """

    cells: tuple[ProductCell, ...]

    @staticmethod
    def swap(cell: ProductCell) -> ProductCell:
        """交换对合。"""
        return cell[1], cell[0]

    @staticmethod
    def bidimension(cell: ProductCell) -> tuple[int, int]:
        return len(cell[0]) - 1, len(cell[1]) - 1

    def census(self) -> dict[tuple[int, int], int]:
        """按双维数 (dim σ, dim τ) 统计胞腔数。"""
        counts = Counter(self.bidimension(c) for c in self.cells)
        return dict(sorted(counts.items()))

    def cell_boundary(self, cell: ProductCell) -> list[ProductCell]:
        """积胞腔的模 2 边界：∂σ×τ ∪ σ×∂τ。"""
        sigma, tau = cell
        faces: list[ProductCell] = []
        if len(sigma) > 1:
            faces.extend((sigma[:i] + sigma[i + 1 :], tau) for i in range(len(sigma)))
        if len(tau) > 1:
            faces.extend((sigma, tau[:j] + tau[j + 1 :]) for j in range(len(tau)))
        return sorted(faces)

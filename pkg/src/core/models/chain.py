"""模 2 链：单形链、多面体链与多面体链引理的检查结果。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .geometry import GeomSimplex, Polytope


@dataclass(slots=True, frozen=True)
class Chain:
    """
    R^ambient 中的 c-链（系数模 2）。

    simplices 用集合语义：重复插入即抵消，链的加法是对称差。
    维数为 -1 的空链是 0-链的边界。
    """

    dim: int
    ambient: int
    simplices: frozenset[GeomSimplex]

    def __xor__(self, other: Chain) -> Chain:
        return Chain(self.dim, self.ambient, self.simplices ^ other.simplices)

    def __len__(self) -> int:
        return len(self.simplices)

    def sorted_simplices(self) -> list[GeomSimplex]:
        """按规范序返回单形（输出与序列化使用）。"""
        return sorted(self.simplices)


@dataclass(slots=True, frozen=True)
class PolytopeChain:
    """c 维多面体的有限族（每个胞腔的 affine_dim 都等于 dim）。"""

    dim: int
    ambient: int
    cells: tuple[Polytope, ...]


LemmaHypothesis = Literal[1, 2]


@dataclass(slots=True)
class LemmaOutcome:
    """
    多面体链引理检查结果。

    - 成功：cycle 为支撑在 ∪P 上的单纯 c-闭链；
    - 失败：hypothesis 指明哪条假设不成立，witness 为违例胞腔（对）；
      假设 2 不成立时 incidence 为该胞腔的边界关联数（模 2）。
    """

    cycle: Chain | None
    hypothesis: LemmaHypothesis | None = None
    witness: tuple[Polytope, ...] = ()
    incidence: int | None = None

    @property
    def ok(self) -> bool:
        return self.cycle is not None

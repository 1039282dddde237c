"""几何基础类型：有理点、多面体、半空间表示、几何单形。"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Point = tuple[Fraction, ...]
"""R^d 中的有理点；元组比较即字典序（全局规范序）。"""

Vector = tuple[Fraction, ...]


@dataclass(slots=True, frozen=True)
class Polytope:
    """
    有界凸多面体（顶点表示）。

    不变量：
    - vertices 恰为凸包的极点，按字典序排列；
    - affine_dim 为顶点集的仿射维数，且 affine_dim <= ambient_dim。

    由 rules.polytope.make_polytope 构造，不直接实例化。
    """

    vertices: tuple[Point, ...]
    affine_dim: int
    ambient_dim: int


@dataclass(slots=True, frozen=True)
class Facet:
    """多面体的一个刻面：normal·x <= offset，vertices 为落在刻面上的顶点。"""

    normal: Vector
    offset: Fraction
    vertices: tuple[Point, ...]


@dataclass(slots=True, frozen=True)
class HalfSpaces:
    """
    多面体的半空间表示。

    - equalities: 仿射包方程 a·x = b；
    - facets: 仿射包内的刻面不等式。
    """

    equalities: tuple[tuple[Vector, Fraction], ...]
    facets: tuple[Facet, ...]


@dataclass(slots=True, frozen=True, order=True)
class GeomSimplex:
    """
    R^d 中的几何 c-单形。

    vertices 按字典序存放且仿射无关；由 rules.chain.make_simplex 构造。
    """

    vertices: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])

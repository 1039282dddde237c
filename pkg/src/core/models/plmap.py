"""分片线性映射与位置报告。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .complex import AbstractComplex
from .geometry import Point

PositionKind = Literal["general", "strong"]
"""位置条件类型：general=一般位置，strong=强一般位置"""


@dataclass(slots=True)
class PLMap:
    """
    在三角剖分 T_N 的每个单形上线性的映射 f: |T_N| → R^d。

    - domain: T_N（几何实现可选；求原像时必须提供，位于 R^m）；
    - vertex_images: 每个定义域顶点的像点，按顶点下标排列。
    """

    domain: AbstractComplex
    vertex_images: tuple[Point, ...]

    @property
    def n(self) -> int:
        """定义域流形维数。"""
        return self.domain.dim

    @property
    def d(self) -> int:
        """目标空间维数。"""
        return len(self.vertex_images[0])

    @property
    def m(self) -> int | None:
        """定义域几何实现所在空间维数。"""
        return self.domain.realization_dim


@dataclass(slots=True)
class PositionReport:
    """
    像点集相对链的位置检查结果。

    witness 仅在 holds=False 时给出：点块列表（强一般位置为互不相交子集族，
    一般位置为一个仿射相关子集或与链顶点重合的像点）。
    """

    kind: PositionKind
    holds: bool
    witness: tuple[tuple[Point, ...], ...] | None = None

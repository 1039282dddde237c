"""硬度归约类型：CNF 公式、连接方案与小工具集。"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .complex import AbstractComplex

AttachmentConvention = Literal["identify-boundary-sphere"]
"""环面粘接约定（当前唯一实现的标签）"""

SUPPORTED_CONVENTIONS: tuple[str, ...] = ("identify-boundary-sphere",)


@dataclass(slots=True)
class CnfFormula:
    """
    CNF 公式。

    clauses 中的文字为带符号的变量下标（1..variable_count），无空子句。
    """

    variable_count: int
    clauses: list[list[int]]
    comments: list[str] = field(default_factory=list)


@dataclass(slots=True, frozen=True)
class TorusLink:
    """一个环面小工具：经线粘到 sphere_q，纬线粘到 sphere_r。"""

    torus_id: str
    sphere_q: str
    sphere_r: str
    convention: str = "identify-boundary-sphere"


@dataclass(slots=True)
class LinkagePlan:
    """
    连接方案：具名 k 维球面集合 + 环面连接记录。

    不变量：引用的球面 id 存在；每个环面引用两个不同的球面。
    """

    spheres: list[str]
    tori: list[TorusLink]
    label: str = "explicit"


@dataclass(slots=True)
class GadgetKit:
    """
    (k, d) 对应的小工具：球面 ∂Δ^{k+1} 与 2l 维环面（l = d - k - 1）。
    """

    k: int
    d: int
    l: int
    sphere: AbstractComplex
    torus: AbstractComplex

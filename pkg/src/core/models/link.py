"""环绕数相关类型：锥、奇异 Borromean 环配置及其报告。"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chain import Chain
from .geometry import GeomSimplex, Point
from .plmap import PLMap


@dataclass(slots=True, frozen=True)
class Cone:
    """
    以 apex 为顶点、base 为底的锥。

    cells 为 apex 与每个底单形的联结（维数 base.dim + 1）；底为闭链时 ∂cells = base。
    """

    apex: Point
    base: Chain
    cells: Chain


@dataclass(slots=True)
class BorromeanConfig:
    """
    三分支 PL 映射：2l 维环面 T（标记经线 m、纬线 p）与两个 k 维球面 S_p、S_m，
    目标空间 R^{k+l+1}。

    一般要求 k > l >= 1；构造性注记中的配置取 l = 0。
    """

    k: int
    l: int
    torus_map: PLMap
    sphere_p_map: PLMap
    sphere_m_map: PLMap
    meridian: str = "m"
    parallel: str = "p"

    @property
    def ambient(self) -> int:
        return self.k + self.l + 1


@dataclass(slots=True)
class BorromeanReport:
    """
    奇异 Borromean 环性质检查报告。

    - disjoint: 三个分支的像两两不交（性质 1）；
    - lk_pp / lk_pm: lk(fS_p, fp) / lk(fS_p, fm)（性质 2 要求 1 / 0）；
    - lk_mm / lk_mp: lk(fS_m, fm) / lk(fS_m, fp)（性质 3 要求 1 / 0）；
    - alarm: l >= 1 时三条性质同时成立（与引理矛盾，应当永不出现）。
    """

    disjoint: bool
    lk_pp: int | None = None
    lk_pm: int | None = None
    lk_mm: int | None = None
    lk_mp: int | None = None
    witness: tuple[GeomSimplex, GeomSimplex] | None = None
    alarm: bool = False
    transcript: list[str] = field(default_factory=list)

    @property
    def properties(self) -> tuple[bool, bool, bool]:
        """引理三条性质是否分别成立。"""
        second = self.lk_pp == 1 and self.lk_pm == 0
        third = self.lk_mm == 1 and self.lk_mp == 0
        return self.disjoint, second, third

    @property
    def bits(self) -> tuple[int | None, int | None, int | None, int | None]:
        return self.lk_pp, self.lk_pm, self.lk_mm, self.lk_mp


@dataclass(slots=True)
class LeibnizTerms:
    """
    Leibniz 恒等式三项（模 2）：
    |f(T) ∩ C_p ∩ C_m|、|C_T ∩ f(S_p) ∩ C_m|、|C_T ∩ C_p ∩ f(S_m)|。
    """

    terms: tuple[int, int, int]
    apexes: tuple[Point, Point, Point]
    attempts: int

    @property
    def total(self) -> int:
        return sum(self.terms) % 2

    @property
    def alarm(self) -> bool:
        """(1,0,0) 模式或奇数和：反例警报。"""
        return self.terms == (1, 0, 0) or self.total != 0

"""
文件格式 Schema（Pydantic 模型）。

职责：
- 定义全部 JSON 输入/输出文件的结构
- 通过 @file_format 注册，--schema 输出 model_json_schema()
- 有理数统一为 "p/q" 字符串（整数可直接写数字，读入时规范化）

设计原则：
- 字段描述清晰，面向手写输入文件的人
- 结构与领域类型一一对应，转换在 codec.py 里完成
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any, Callable, TypeVar

from pydantic import BaseModel, BeforeValidator, Field

from src.core.rules.precision import format_rational, parse_rational

# 全局格式注册表：格式名 -> 模型
_FORMATS: dict[str, type[BaseModel]] = {}

M = TypeVar("M", bound=type[BaseModel])


def file_format(name: str) -> Callable[[M], M]:
    """注册文件格式（名称用于 --schema 输出的键）。"""

    def decorator(model: M) -> M:
        _FORMATS[name] = model
        return model

    return decorator


def get_format_schemas() -> dict[str, dict[str, Any]]:
    """全部已注册格式的 JSON Schema，按格式名排序。"""
    return {name: _FORMATS[name].model_json_schema() for name in sorted(_FORMATS)}


def _canonical_rational(value: Any) -> str:
    if isinstance(value, (str, int, Fraction)) and not isinstance(value, bool):
        try:
            return format_rational(parse_rational(value))
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError(f"不是合法的有理数：{value!r}（应为整数、小数或 \"p/q\" 字符串）")


Rational = Annotated[str, BeforeValidator(_canonical_rational)]
"""有理数："p/q" 字符串（q = 1 时为 "p"）。"""

PointData = list[Rational]


# ========== 链与多面体 ==========


@file_format("chain")
class ChainFile(BaseModel):
    """c-链：单形集合（模 2），每个单形是 c+1 个点。"""

    dim: int = Field(..., ge=-1, description="链维数 c（0-链的边界为 -1）")
    ambient: int = Field(..., ge=1, description="环境维数 d")
    simplices: list[list[PointData]] = Field(default_factory=list, description="单形列表，每个单形为顶点坐标数组")


@file_format("polytope-chain")
class PolytopeChainFile(BaseModel):
    """c 维多面体族；每个胞腔以点集给出（取凸包）。"""

    dim: int = Field(..., ge=0, description="胞腔维数 c")
    ambient: int = Field(..., ge=1, description="环境维数 d")
    cells: list[list[PointData]] = Field(..., min_length=1, description="胞腔列表，每个胞腔为点集")


@file_format("points")
class PointSetFile(BaseModel):
    """R^d 中的点集（一般位置检查、重新单纯化的像点集）。"""

    dim: int = Field(..., ge=1, description="环境维数 d")
    points: list[PointData] = Field(..., description="点坐标数组")


# ========== 复形 ==========


@file_format("complex")
class ComplexFile(BaseModel):
    """有限抽象单纯复形（极大面表示），可带几何实现与具名子复形。"""

    vertices: int = Field(..., ge=0, description="顶点数，顶点记为 0..n-1")
    facets: list[list[int]] = Field(..., description="极大面（顶点下标数组）")
    realization: list[PointData] | None = Field(None, description="可选几何实现：每个顶点的坐标")
    marks: dict[str, list[list[int]]] | None = Field(None, description="具名子复形，如环面的 m、p")


class ProductCellData(BaseModel):
    left: list[int] = Field(..., description="σ 的顶点")
    right: list[int] = Field(..., description="τ 的顶点（与 σ 不交）")


@file_format("deleted-product")
class DeletedProductFile(BaseModel):
    """单纯删积：全部不交单形对，附双维数统计。"""

    cells: list[ProductCellData] = Field(..., description="积胞腔 σ×τ，按 (σ, τ) 字典序")
    census: dict[str, int] = Field(default_factory=dict, description="按双维数 \"i,j\" 统计的胞腔数")


# ========== 映射与配置 ==========


@file_format("plmap")
class PLMapFile(BaseModel):
    """在定义域三角剖分上分片线性的映射。"""

    domain: ComplexFile = Field(..., description="定义域 T_N（原像计算需要几何实现）")
    images: list[PointData] = Field(..., description="每个顶点的像点")
    target_dim: int = Field(..., ge=1, description="目标空间维数 d")


@file_format("borromean-config")
class BorromeanConfigFile(BaseModel):
    """奇异 Borromean 环配置：环面 + 两个 k 维球面，目标 R^{k+l+1}。"""

    k: int = Field(..., ge=1, description="球面维数")
    l: int = Field(..., ge=0, description="环面为 2l 维（l = 0 时为 4 个点）")
    torus: PLMapFile
    sphere_p: PLMapFile
    sphere_m: PLMapFile
    meridian: str = Field("m", description="经线标记名")
    parallel: str = Field("p", description="纬线标记名")


# ========== 报告 ==========


@file_format("position-report")
class PositionReportFile(BaseModel):
    kind: str = Field(..., description="general 或 strong")
    holds: bool
    witness: list[list[PointData]] | None = Field(None, description="违例点块")


@file_format("borromean-report")
class BorromeanReportFile(BaseModel):
    """三条性质的检查结果；bits 依次为 lk(S_p,p), lk(S_p,m), lk(S_m,m), lk(S_m,p)。"""

    disjoint: bool
    bits: list[int | None] = Field(..., description="四个模 2 环绕数")
    properties: list[bool] = Field(..., description="三条性质是否分别成立")
    alarm: bool = Field(False, description="l >= 1 时三条性质同时成立")
    witness: list[list[PointData]] | None = Field(None, description="相交的单形对")
    transcript: list[str] = Field(default_factory=list)


@file_format("leibniz-terms")
class LeibnizTermsFile(BaseModel):
    terms: list[int] = Field(..., description="三项模 2 交点数")
    total: int
    alarm: bool
    apexes: list[PointData]
    attempts: int


@file_format("provenance")
class ProvenanceFile(BaseModel):
    """reduce 输出的来源说明（<out>.provenance.json）。"""

    k: int
    d: int
    l: int
    label: str = Field(..., description="连接方案标签（默认方案为 placeholder-convention）")
    convention: str
    spheres: list[str]
    tori: list[dict[str, str]]
    size_bound: dict[str, int] = Field(..., description="c1=球面极大面数, c2=环面极大面数, bound=上界")
    formula: dict[str, Any] = Field(..., description="变量数、子句数与来源")

"""
文件模型 <-> 领域对象转换。

约定：写出时一律按规范序（单形、胞腔、标记名排序），保证输出逐字节稳定。
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from src.core.errors import DimensionMismatchError
from src.core.models.chain import Chain, PolytopeChain
from src.core.models.complex import AbstractComplex, DeletedProduct
from src.core.models.geometry import GeomSimplex, Point, Polytope
from src.core.models.link import BorromeanConfig, BorromeanReport, LeibnizTerms
from src.core.models.plmap import PLMap, PositionReport
from src.core.rules.chain import make_chain, make_polytope_chain, make_simplex
from src.core.rules.complex import make_complex
from src.core.rules.plmap import make_plmap
from src.core.rules.polytope import make_polytope
from src.core.rules.precision import format_point, format_rational, to_point
from src.data.files.schemas import (
    BorromeanConfigFile,
    BorromeanReportFile,
    ChainFile,
    ComplexFile,
    DeletedProductFile,
    LeibnizTermsFile,
    PLMapFile,
    PointSetFile,
    PolytopeChainFile,
    PositionReportFile,
    ProductCellData,
)

# ========== 链 ==========


def chain_from_file(data: ChainFile) -> Chain:
    simplices = [make_simplex([to_point(p) for p in s]) for s in data.simplices]
    return make_chain(simplices, dim=data.dim, ambient=data.ambient)


def simplex_to_data(s: GeomSimplex) -> list[list[str]]:
    return [format_point(p) for p in s.vertices]


def chain_to_file(chain: Chain) -> ChainFile:
    return ChainFile(
        dim=chain.dim,
        ambient=chain.ambient,
        simplices=[simplex_to_data(s) for s in chain.sorted_simplices()],
    )


def polytope_chain_from_file(data: PolytopeChainFile) -> PolytopeChain:
    cells = [make_polytope(to_point(p) for p in cell) for cell in data.cells]
    return make_polytope_chain(cells, dim=data.dim)


def points_from_file(data: PointSetFile) -> list[Point]:
    return [to_point(p) for p in data.points]


def points_to_file(points: Sequence[Point], dim: int) -> PointSetFile:
    return PointSetFile(dim=dim, points=[format_point(p) for p in points])


# ========== 复形 ==========


def complex_from_file(data: ComplexFile) -> AbstractComplex:
    realization = [to_point(p) for p in data.realization] if data.realization is not None else None
    return make_complex(data.vertices, data.facets, realization=realization, marks=data.marks)


def complex_to_file(k: AbstractComplex) -> ComplexFile:
    return ComplexFile(
        vertices=k.vertex_count,
        facets=[list(f) for f in k.facets],
        realization=[format_point(p) for p in k.realization] if k.realization is not None else None,
        marks={name: [list(f) for f in k.marks[name]] for name in sorted(k.marks)} or None,
    )


def deleted_product_to_file(dp: DeletedProduct) -> DeletedProductFile:
    return DeletedProductFile(
        cells=[ProductCellData(left=list(s), right=list(t)) for s, t in dp.cells],
        census={f"{i},{j}": n for (i, j), n in dp.census().items()},
    )


# ========== 映射与配置 ==========


def plmap_from_file(data: PLMapFile) -> PLMap:
    f = make_plmap(complex_from_file(data.domain), [to_point(p) for p in data.images])
    if f.d != data.target_dim:
        raise DimensionMismatchError(f"像点维数为 {f.d}，target_dim 声明为 {data.target_dim}")
    return f


def plmap_to_file(f: PLMap) -> PLMapFile:
    return PLMapFile(
        domain=complex_to_file(f.domain),
        images=[format_point(p) for p in f.vertex_images],
        target_dim=f.d,
    )


def borromean_from_file(data: BorromeanConfigFile) -> BorromeanConfig:
    return BorromeanConfig(
        k=data.k,
        l=data.l,
        torus_map=plmap_from_file(data.torus),
        sphere_p_map=plmap_from_file(data.sphere_p),
        sphere_m_map=plmap_from_file(data.sphere_m),
        meridian=data.meridian,
        parallel=data.parallel,
    )


def borromean_to_file(cfg: BorromeanConfig) -> BorromeanConfigFile:
    return BorromeanConfigFile(
        k=cfg.k,
        l=cfg.l,
        torus=plmap_to_file(cfg.torus_map),
        sphere_p=plmap_to_file(cfg.sphere_p_map),
        sphere_m=plmap_to_file(cfg.sphere_m_map),
        meridian=cfg.meridian,
        parallel=cfg.parallel,
    )


# ========== 报告 ==========


def position_report_to_file(report: PositionReport) -> PositionReportFile:
    witness = None
    if report.witness is not None:
        witness = [[format_point(p) for p in block] for block in report.witness]
    return PositionReportFile(kind=report.kind, holds=report.holds, witness=witness)


def borromean_report_to_file(report: BorromeanReport) -> BorromeanReportFile:
    witness = None
    if report.witness is not None:
        witness = [simplex_to_data(s) for s in report.witness]
    return BorromeanReportFile(
        disjoint=report.disjoint,
        bits=list(report.bits),
        properties=list(report.properties),
        alarm=report.alarm,
        witness=witness,
        transcript=list(report.transcript),
    )


def leibniz_to_file(terms: LeibnizTerms) -> LeibnizTermsFile:
    return LeibnizTermsFile(
        terms=list(terms.terms),
        total=terms.total,
        alarm=terms.alarm,
        apexes=[format_point(p) for p in terms.apexes],
        attempts=terms.attempts,
    )


def witness_to_data(obj: Any) -> Any:
    """把异常 witness（链、单形、多面体、有理数的任意嵌套）转成可写入 JSON 的结构。"""
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Chain):
        return chain_to_file(obj).model_dump(mode="json")
    if isinstance(obj, GeomSimplex):
        return simplex_to_data(obj)
    if isinstance(obj, Polytope):
        return [format_point(p) for p in obj.vertices]
    if isinstance(obj, dict):
        return {str(key): witness_to_data(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [witness_to_data(item) for item in obj]
    return obj

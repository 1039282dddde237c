from .chain import Chain, LemmaHypothesis, LemmaOutcome, PolytopeChain
from .complex import AbstractComplex, DeletedProduct, ProductCell, Simplex
from .geometry import Facet, GeomSimplex, HalfSpaces, Point, Polytope, Vector
from .link import BorromeanConfig, BorromeanReport, Cone, LeibnizTerms
from .plmap import PLMap, PositionKind, PositionReport
from .reduce import (
    SUPPORTED_CONVENTIONS,
    AttachmentConvention,
    CnfFormula,
    GadgetKit,
    LinkagePlan,
    TorusLink,
)
from .result import EXIT_CODES, CommandResult, CommandStatus

__all__ = [
    # 几何
    "Point",
    "Vector",
    "Polytope",
    "Facet",
    "HalfSpaces",
    "GeomSimplex",
    # 链
    "Chain",
    "PolytopeChain",
    "LemmaOutcome",
    "LemmaHypothesis",
    # 复形
    "AbstractComplex",
    "DeletedProduct",
    "ProductCell",
    "Simplex",
    # 映射
    "PLMap",
    "PositionKind",
    "PositionReport",
    # 环绕数
    "Cone",
    "BorromeanConfig",
    "BorromeanReport",
    "LeibnizTerms",
    # 归约
    "CnfFormula",
    "LinkagePlan",
    "TorusLink",
    "GadgetKit",
    "AttachmentConvention",
    "SUPPORTED_CONVENTIONS",
    # 命令结果
    "CommandResult",
    "CommandStatus",
    "EXIT_CODES",
]

"""测试共用的小工具：有理点构造、闭折线、慢用例开关。"""

from __future__ import annotations

import os
from fractions import Fraction

import pytest

from src.core.models.chain import Chain
from src.core.models.geometry import Point
from src.core.rules.chain import make_chain, make_simplex

F = Fraction

# 验收规模的随机批量默认跳过，PLKIT_SLOW=1 时运行
slow = pytest.mark.skipif(os.getenv("PLKIT_SLOW") != "1", reason="设置 PLKIT_SLOW=1 运行验收规模用例")


def pt(*coords: int | str) -> Point:
    return tuple(Fraction(c) for c in coords)


def polygon_chain(*points: Point) -> Chain:
    """按顺序首尾相连的闭折线（1-链）。"""
    n = len(points)
    return make_chain([make_simplex([points[i], points[(i + 1) % n]]) for i in range(n)])

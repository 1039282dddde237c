"""
有理数精度工具函数。

统一精度规则：
- 全部坐标为精确有理数（Fraction），谓词中不出现浮点；
- 序列化为 "p/q" 字符串（q = 1 时省略）；
- 解析接受整数、十进制小数与 "p/q" 字符串，一律经 Fraction(str(x)) 转换。
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from src.core.models.geometry import Point


def parse_rational(value: int | str | Fraction) -> Fraction:
    """
    解析一个有理数。

    Args:
        value: 整数、"3/5"、"-0.25" 或 Fraction。

    Returns:
        最简形式的 Fraction。

    Raises:
        ValueError: 非法字符串或浮点输入。
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"不接受浮点/布尔坐标：{value!r}")
    return Fraction(str(value).strip())


def format_rational(value: Fraction) -> str:
    """格式化为 "p/q"（分母为 1 时仅输出 "p"）。"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_point(coords: Iterable[int | str | Fraction]) -> Point:
    """将坐标序列转为有理点。"""
    return tuple(parse_rational(c) for c in coords)


def format_point(p: Point) -> list[str]:
    """有理点 → 字符串数组。"""
    return [format_rational(c) for c in p]

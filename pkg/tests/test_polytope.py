from __future__ import annotations

from itertools import combinations

import pytest

from src.core.errors import CapExceededError, DimensionMismatchError
from src.core.rules.arrangement import refine_arrangement, refine_with_coverage
from src.core.rules.chain import is_simplicial, make_chain
from src.core.rules.polytope import (
    clip,
    contains,
    halfspaces,
    intersect_polytopes,
    make_polytope,
    placing_triangulation,
)
from tests.helpers import F, pt


def square(x0: int, y0: int, size: int = 1):
    return make_polytope([pt(x0, y0), pt(x0 + size, y0), pt(x0, y0 + size), pt(x0 + size, y0 + size)])


def test_make_polytope_keeps_extreme_points_only() -> None:
    p = make_polytope([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1), pt("1/2", "1/2"), pt("1/2", 0)])
    assert p.vertices == (pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1))
    assert p.affine_dim == 2
    assert len(halfspaces(p).facets) == 4
    assert not halfspaces(p).equalities


def test_make_polytope_lower_dimensional() -> None:
    seg = make_polytope([pt(0, 0, 0), pt(2, 2, 2), pt(1, 1, 1)])
    assert seg.vertices == (pt(0, 0, 0), pt(2, 2, 2))
    assert seg.affine_dim == 1
    assert len(halfspaces(seg).equalities) == 2
    assert contains(seg, pt("1/3", "1/3", "1/3"))
    assert not contains(seg, pt(1, 1, 0))


def test_contains_is_closed() -> None:
    sq = square(0, 0)
    assert contains(sq, pt("1/2", "1/2"))
    assert contains(sq, pt(1, "1/3"))
    assert not contains(sq, pt(2, 0))


def test_intersect_overlapping_squares() -> None:
    meet = intersect_polytopes(square(0, 0, 2), square(1, 1, 2))
    assert meet is not None
    assert meet.vertices == square(1, 1).vertices


def test_intersect_crossing_segments_is_a_point() -> None:
    a = make_polytope([pt(0, 0), pt(2, 2)])
    b = make_polytope([pt(0, 2), pt(2, 0)])
    meet = intersect_polytopes(a, b)
    assert meet is not None
    assert meet.affine_dim == 0
    assert meet.vertices == (pt(1, 1),)


def test_intersect_disjoint_and_mismatched() -> None:
    assert intersect_polytopes(square(0, 0), square(5, 5)) is None
    # 包围盒相交但多面体不交
    a = make_polytope([pt(0, 0), pt(2, 2)])
    b = make_polytope([pt(2, 0), pt(3, 1)])
    assert intersect_polytopes(a, b) is None
    with pytest.raises(DimensionMismatchError):
        intersect_polytopes(square(0, 0), make_polytope([pt(0, 0, 0), pt(1, 0, 0)]))


def test_intersect_is_commutative_and_idempotent() -> None:
    pairs = [
        (square(0, 0, 2), square(1, 1, 2)),
        (square(0, 0), make_polytope([pt(0, 0), pt(2, 2)])),
        (make_polytope([pt(0, 0), pt(3, 0), pt(0, 3)]), square(1, 1, 3)),
    ]
    for a, b in pairs:
        meet = intersect_polytopes(a, b)
        assert meet is not None
        assert intersect_polytopes(b, a) == meet
        assert intersect_polytopes(meet, a) == meet
        assert intersect_polytopes(meet, meet) == meet


def test_intersect_square_with_half_shifted_copy() -> None:
    shifted = make_polytope([pt("1/2", 0), pt("3/2", 0), pt("1/2", 1), pt("3/2", 1)])
    meet = intersect_polytopes(square(0, 0), shifted)
    assert meet is not None
    assert meet.affine_dim == 2
    assert meet.vertices == (pt("1/2", 0), pt("1/2", 1), pt(1, 0), pt(1, 1))


def test_clip_square() -> None:
    half = clip(square(0, 0), (F(1), F(0)), F(1, 2))
    assert half is not None
    assert half.vertices == (pt(0, 0), pt(0, 1), pt("1/2", 0), pt("1/2", 1))
    assert clip(square(0, 0), (F(1), F(0)), F(-1)) is None
    assert clip(square(0, 0), (F(1), F(0)), F(5)) == square(0, 0)


def test_placing_triangulation_of_square() -> None:
    triangles = placing_triangulation(square(0, 0))
    assert len(triangles) == 2
    # 从字典序最小的顶点 (0,0) 拉出
    assert all(pt(0, 0) in t.vertices for t in triangles)


def test_placing_triangulation_with_interior_point() -> None:
    triangles = placing_triangulation(square(0, 0), points=[pt("1/2", "1/2"), pt(7, 7)])
    assert len(triangles) == 4
    assert all(pt("1/2", "1/2") in t.vertices for t in triangles)


def test_placing_triangulation_of_segment_with_extra_points() -> None:
    seg = make_polytope([pt(0, 0), pt(3, 0)])
    pieces = placing_triangulation(seg, points=[pt(1, 0), pt(2, 0)])
    assert [s.vertices for s in pieces] == [
        (pt(0, 0), pt(1, 0)),
        (pt(1, 0), pt(2, 0)),
        (pt(2, 0), pt(3, 0)),
    ]


def test_placing_triangulations_agree_on_a_shared_side() -> None:
    # (1, 1/2) 在两个方块的公共边上：两侧都必须在该点把边切开
    extra = [pt(1, "1/2")]
    left = placing_triangulation(square(0, 0), points=extra)
    right = placing_triangulation(square(1, 0), points=extra)
    assert len(left) == 3 and len(right) == 3
    assert is_simplicial(make_chain(left + right))

    # 只在一侧用额外点：公共边一侧被切开、另一侧没有，拼起来不是单纯链
    assert not is_simplicial(make_chain(left + placing_triangulation(square(1, 0))))


# ========== 排列细分 ==========


def test_refine_overlapping_squares_counts_coverage() -> None:
    refined = refine_with_coverage([square(0, 0, 2), square(1, 1, 2)])
    assert len(refined) == 7
    doubled = [rc.cell for rc in refined if rc.coverage == 2]
    assert doubled == [square(1, 1)]
    assert all(rc.coverage in (1, 2) for rc in refined)


def test_refine_disjoint_input_is_unchanged() -> None:
    cells = refine_arrangement([square(0, 0), square(3, 3)])
    assert cells == [square(0, 0), square(3, 3)]


def test_refine_cap() -> None:
    with pytest.raises(CapExceededError):
        refine_with_coverage([square(0, 0)] * 3, cap=2)


def test_refine_crossing_segments_gives_four_pieces() -> None:
    a = make_polytope([pt(0, 0), pt(2, 2)])
    b = make_polytope([pt(0, 2), pt(2, 0)])
    cells = refine_arrangement([a, b])
    assert len(cells) == 4
    assert all(pt(1, 1) in c.vertices for c in cells)


def test_refine_overlapping_collinear_segments_gives_three_pieces() -> None:
    a = make_polytope([pt(0, 0), pt(2, 0)])
    b = make_polytope([pt(1, 0), pt(3, 0)])
    refined = refine_with_coverage([a, b])
    assert [rc.cell.vertices for rc in refined] == [
        (pt(0, 0), pt(1, 0)),
        (pt(1, 0), pt(2, 0)),
        (pt(2, 0), pt(3, 0)),
    ]
    assert [rc.coverage for rc in refined] == [1, 2, 1]


@pytest.mark.parametrize(
    "inputs",
    [
        [square(0, 0, 2), square(1, 1, 2)],
        [square(0, 0, 2), square(1, 0, 2), square(0, 1, 2)],
        [make_polytope([pt(0, 0), pt(4, 0), pt(0, 4)]), square(1, 1, 2)],
    ],
)
def test_refined_cells_have_disjoint_relative_interiors(inputs) -> None:
    cells = refine_arrangement(inputs)
    for a, b in combinations(cells, 2):
        meet = intersect_polytopes(a, b)
        assert meet is None or meet.affine_dim < min(a.affine_dim, b.affine_dim)

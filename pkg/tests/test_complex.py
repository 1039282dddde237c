from __future__ import annotations

from collections import deque

import pytest

from src.core.errors import ParameterRangeError, PreconditionError
from src.core.rules.complex import (
    all_simplices,
    boundary_sphere,
    deleted_product,
    euler_characteristic,
    f_vector,
    is_boundary_of_simplex,
    is_closed_pseudomanifold,
    make_complex,
    staircase_product,
    subcomplex,
    torus_gadget,
)


def test_make_complex_normalizes_facets() -> None:
    k = make_complex(4, [(2, 1, 0), (0, 1), (3, 2), (2, 3)])
    assert k.facets == ((0, 1, 2), (2, 3))
    assert k.dim == 2
    with pytest.raises(PreconditionError):
        make_complex(3, [(0, 3)])
    with pytest.raises(PreconditionError):
        make_complex(2, [(0, 1)], realization=[(1,)])


def test_boundary_sphere_statistics() -> None:
    s2 = boundary_sphere(2)
    assert f_vector(s2) == (4, 6, 4)
    assert euler_characteristic(s2) == 2
    assert is_boundary_of_simplex(s2)
    assert is_closed_pseudomanifold(s2)
    s0 = boundary_sphere(0)
    assert s0.facets == ((0,), (1,))
    assert is_closed_pseudomanifold(s0)
    with pytest.raises(ParameterRangeError):
        boundary_sphere(-1)


def test_staircase_product_of_segments_is_a_square() -> None:
    seg = make_complex(2, [(0, 1)], realization=[(0,), (1,)])
    square = staircase_product(seg, seg)
    assert square.facets == ((0, 1, 3), (0, 2, 3))
    assert square.realization is not None
    assert square.realization[3] == (1, 1)


def test_torus_gadget_l1() -> None:
    torus = torus_gadget(1)
    assert f_vector(torus) == (9, 27, 18)
    assert euler_characteristic(torus) == 0
    assert is_closed_pseudomanifold(torus)
    m, p = subcomplex(torus, "m"), subcomplex(torus, "p")
    assert is_boundary_of_simplex(m) and m.dim == 1
    assert is_boundary_of_simplex(p) and p.dim == 1
    used_m = {v for f in m.facets for v in f}
    used_p = {v for f in p.facets for v in f}
    assert used_m & used_p == {0}


def test_torus_gadget_l2() -> None:
    torus = torus_gadget(2)
    assert torus.dim == 4
    assert len(torus.facets) == 16 * 6
    assert euler_characteristic(torus) == 4
    assert is_closed_pseudomanifold(torus)
    assert is_boundary_of_simplex(subcomplex(torus, "m"))
    assert is_boundary_of_simplex(subcomplex(torus, "p"))


def test_torus_gadget_rejects_l0() -> None:
    with pytest.raises(ParameterRangeError):
        torus_gadget(0)
    with pytest.raises(PreconditionError):
        subcomplex(boundary_sphere(1), "m")


def test_deleted_product_of_triangle_boundary_is_a_hexagon() -> None:
    dp = deleted_product(boundary_sphere(1))
    assert len(dp.cells) == 12
    assert dp.census() == {(0, 0): 6, (0, 1): 3, (1, 0): 3}
    edges = [c for c in dp.cells if dp.bidimension(c) != (0, 0)]
    degree: dict = {}
    adjacency: dict = {}
    for cell in edges:
        a, b = dp.cell_boundary(cell)
        for v in (a, b):
            degree[v] = degree.get(v, 0) + 1
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    assert all(n == 2 for n in degree.values())
    assert len(degree) == 6
    # 连通：单个 6-圈
    start = next(iter(adjacency))
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in adjacency[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    assert len(seen) == 6


def test_deleted_product_of_tetrahedron_boundary() -> None:
    dp = deleted_product(boundary_sphere(2))
    assert dp.census() == {(0, 0): 12, (0, 1): 12, (0, 2): 4, (1, 0): 12, (1, 1): 6, (2, 0): 4}
    cells = set(dp.cells)
    for cell in dp.cells:
        swapped = dp.swap(cell)
        assert swapped != cell
        assert swapped in cells
        assert set(cell[0]).isdisjoint(cell[1])


def test_all_simplices_order() -> None:
    simplices = all_simplices(boundary_sphere(1))
    assert simplices == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]

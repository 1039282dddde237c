from __future__ import annotations

import random

import pytest

from src.core.errors import DegenerateError, DimensionMismatchError, PreconditionError
from src.core.models.chain import Chain
from src.core.rules.chain import (
    boundary,
    incidence_counts,
    is_cycle,
    is_simplicial,
    lemma_eq_cycle,
    lies_in_facet,
    make_chain,
    make_polytope_chain,
    make_simplex,
    odd_faces_witness,
    simplicial_witness,
    vertices_of,
)
from src.core.rules.plmap import random_point
from src.core.rules.polytope import make_polytope
from tests.helpers import polygon_chain, pt, slow


def unit_square_edges():
    corners = [pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]
    return [make_polytope([corners[i], corners[(i + 1) % 4]]) for i in range(4)]


def test_make_simplex_sorts_and_rejects_degenerate() -> None:
    s = make_simplex([pt(1, 0), pt(0, 0), pt(0, 1)])
    assert s.vertices == (pt(0, 0), pt(0, 1), pt(1, 0))
    assert s.dim == 2 and s.ambient == 2
    with pytest.raises(DegenerateError):
        make_simplex([pt(0, 0), pt(1, 1), pt(2, 2)])
    with pytest.raises(DegenerateError):
        make_simplex([pt(0, 0), pt(0, 0)])


def test_make_chain_cancels_mod_two() -> None:
    e = make_simplex([pt(0, 0), pt(1, 0)])
    f = make_simplex([pt(0, 0), pt(0, 1)])
    chain = make_chain([e, f, e])
    assert chain.simplices == frozenset({f})
    with pytest.raises(PreconditionError):
        make_chain([])
    with pytest.raises(DimensionMismatchError):
        make_chain([e, make_simplex([pt(0, 0), pt(1, 0), pt(0, 1)])])


def test_boundary_of_triangle() -> None:
    tri = make_chain([make_simplex([pt(0, 0), pt(1, 0), pt(0, 1)])])
    edges = boundary(tri)
    assert edges.dim == 1
    assert len(edges) == 3
    assert is_cycle(edges)
    assert not is_cycle(tri)


def test_boundary_of_zero_chain_is_empty() -> None:
    points = make_chain([make_simplex([pt(0, 0)]), make_simplex([pt(1, 0)])])
    b = boundary(points)
    assert b.dim == -1 and not b.simplices
    assert is_cycle(points)


def test_boundary_of_boundary_vanishes_on_random_chains() -> None:
    rng = random.Random(11)
    for _ in range(200):
        d = rng.randint(1, 4)
        c = rng.randint(1, d)
        pool = [random_point(rng, d) for _ in range(c + 4)]
        simplices = []
        for _ in range(rng.randint(1, 8)):
            try:
                simplices.append(make_simplex(rng.sample(pool, c + 1)))
            except DegenerateError:
                continue
        if not simplices:
            continue
        chain = make_chain(simplices, dim=c, ambient=d)
        assert not boundary(boundary(chain)).simplices


def test_boundary_is_additive() -> None:
    rng = random.Random(5)
    pool = [random_point(rng, 3) for _ in range(7)]
    a = make_chain([make_simplex(rng.sample(pool, 3)) for _ in range(6)], dim=2, ambient=3)
    b = make_chain([make_simplex(rng.sample(pool, 3)) for _ in range(6)], dim=2, ambient=3)
    assert boundary(a ^ b).simplices == (boundary(a) ^ boundary(b)).simplices


def random_chain(rng: random.Random, pool: list, c: int, d: int, size: int) -> Chain:
    simplices = []
    for _ in range(size):
        try:
            simplices.append(make_simplex(rng.sample(pool, c + 1)))
        except DegenerateError:
            continue
    return make_chain(simplices, dim=c, ambient=d)


@slow
@pytest.mark.parametrize("seed", range(20))
def test_boundary_identities_on_chains_of_up_to_forty_simplices(seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(25):
        d = rng.randint(1, 4)
        c = rng.randint(1, d)
        pool = [random_point(rng, d) for _ in range(c + 8)]
        a = random_chain(rng, pool, c, d, rng.randint(1, 40))
        b = random_chain(rng, pool, c, d, rng.randint(1, 40))
        assert not boundary(boundary(a)).simplices
        assert boundary(a ^ b).simplices == (boundary(a) ^ boundary(b)).simplices


def test_odd_faces_witness_is_a_non_cycle() -> None:
    path = make_chain([make_simplex([pt(0, 0), pt(1, 0)]), make_simplex([pt(1, 0), pt(1, 1)])])
    witness = odd_faces_witness(path)
    assert witness.simplices == path.simplices
    assert not is_cycle(witness)


def test_simplicial_checks() -> None:
    square = polygon_chain(pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1))
    assert is_simplicial(square)
    assert vertices_of(square) == {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}
    crossing = make_chain([make_simplex([pt(0, 0), pt(2, 2)]), make_simplex([pt(0, 2), pt(2, 0)])])
    pair = simplicial_witness(crossing)
    assert pair is not None
    assert not is_simplicial(crossing)


# ========== 多面体链 ==========


def test_incidence_unit_square_with_bottom_edge() -> None:
    chain = make_polytope_chain([make_polytope([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)])])
    bottom = make_polytope([pt(0, 0), pt(1, 0)])
    assert incidence_counts(chain, bottom) == (1, 1)


def test_lies_in_facet_of_unit_square() -> None:
    square = make_polytope([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)])
    assert lies_in_facet(square, [pt(0, 0), pt("1/2", 0)])
    assert lies_in_facet(square, [pt(1, "1/3")])
    assert not lies_in_facet(square, [pt("1/2", "1/2")])
    # 两个点分别在相邻两条边上，不共刻面
    assert not lies_in_facet(square, [pt("1/2", 0), pt(0, "1/2")])


def test_incidence_two_squares_sharing_a_side() -> None:
    left = make_polytope([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)])
    right = make_polytope([pt(1, 0), pt(2, 0), pt(1, 1), pt(2, 1)])
    chain = make_polytope_chain([left, right])
    shared = make_polytope([pt(1, 0), pt(1, 1)])
    assert incidence_counts(chain, shared) == (0, 0)
    with pytest.raises(PreconditionError):
        incidence_counts(chain, left)


def test_make_polytope_chain_rejects_mixed_dimensions() -> None:
    with pytest.raises(DimensionMismatchError):
        make_polytope_chain([make_polytope([pt(0, 0), pt(1, 0)]), make_polytope([pt(0, 0), pt(1, 0), pt(0, 1)])])


def test_lemma_square_edges_form_a_cycle() -> None:
    outcome = lemma_eq_cycle(make_polytope_chain(unit_square_edges()))
    assert outcome.ok
    assert len(outcome.cycle) == 4
    assert is_cycle(outcome.cycle)
    assert is_simplicial(outcome.cycle)


def test_lemma_three_edges_violate_hypothesis_two() -> None:
    outcome = lemma_eq_cycle(make_polytope_chain(unit_square_edges()[:3]))
    assert not outcome.ok
    assert outcome.hypothesis == 2
    assert outcome.incidence == 1
    assert outcome.witness[0].vertices == (pt(0, 0),)


def test_lemma_overlapping_segments_violate_hypothesis_one() -> None:
    a = make_polytope([pt(0, 0), pt(2, 0)])
    b = make_polytope([pt(1, 0), pt(3, 0)])
    outcome = lemma_eq_cycle(make_polytope_chain([a, b]))
    assert outcome.hypothesis == 1
    assert set(outcome.witness) == {a, b}


def test_lemma_subdivided_edge_still_closes() -> None:
    cells = unit_square_edges()[1:] + [make_polytope([pt(0, 0), pt("1/2", 0)]), make_polytope([pt("1/2", 0), pt(1, 0)])]
    outcome = lemma_eq_cycle(make_polytope_chain(cells))
    assert outcome.ok
    assert len(outcome.cycle) == 5


def test_lemma_tetrahedron_surface() -> None:
    corners = [pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)]
    faces = [make_polytope([c for j, c in enumerate(corners) if j != i]) for i in range(4)]
    outcome = lemma_eq_cycle(make_polytope_chain(faces))
    assert outcome.ok
    assert len(outcome.cycle) == 4
    assert outcome.cycle.dim == 2


def test_lemma_two_squares_are_not_a_cycle() -> None:
    left = make_polytope([pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)])
    right = make_polytope([pt(1, 0), pt(2, 0), pt(1, 1), pt(2, 1)])
    outcome = lemma_eq_cycle(make_polytope_chain([left, right]))
    assert outcome.hypothesis == 2
    assert outcome.witness[0].vertices == (pt(0, 0), pt(0, 1))


def test_empty_chain_repr() -> None:
    empty = Chain(dim=1, ambient=2, simplices=frozenset())
    assert is_cycle(empty)
    assert is_simplicial(empty)

from __future__ import annotations

import random

import pytest

from src.core.errors import DimensionMismatchError, EmptyInputError, PreconditionError
from src.core.models.chain import Chain
from src.core.rules.chain import boundary, is_cycle, make_chain, make_simplex
from src.core.rules.link import (
    apex_point,
    borromean_check,
    cone,
    cone_triple_parities,
    disjointness_witness,
    intersection_parity,
    leibniz_terms,
    linking_mod2,
    product_torus_config,
    remark_a_config,
    supports_witness,
    transversal_parity,
    unit_sphere_vertices,
)
from src.core.rules.plmap import random_point
from tests.helpers import F, polygon_chain, pt, slow


def hopf_pair() -> tuple[Chain, Chain]:
    """xy 平面里的三角形 X，与从其内部穿过一次的三角形 Y。"""
    x = polygon_chain(pt(-2, -1, 0), pt(2, -1, 0), pt(0, 2, 0))
    y = polygon_chain(pt(1, 0, -1), pt(1, 0, 1), pt(5, 0, "1/2"))
    return x, y


def shifted(chain: Chain, dx: int) -> Chain:
    return make_chain(
        [make_simplex([(p[0] + dx, *p[1:]) for p in s.vertices]) for s in chain.simplices],
        dim=chain.dim,
        ambient=chain.ambient,
    )


def test_apex_on_moment_curve() -> None:
    assert apex_point(0, 3, base=F(2)) == (F(2), F(4), F(8))
    assert apex_point(1, 2, base=F(2)) == (F(3), F(9))


def test_cone_boundary_is_base() -> None:
    x, _ = hopf_pair()
    c = cone(apex_point(0, 3), x)
    assert c.cells.dim == 2
    assert len(c.cells) == 3
    assert boundary(c.cells).simplices == x.simplices
    with pytest.raises(EmptyInputError):
        cone(apex_point(0, 3), Chain(dim=1, ambient=3, simplices=frozenset()))


def test_cone_over_two_point_zero_cycle() -> None:
    base = make_chain([make_simplex([pt(1, 0)]), make_simplex([pt(3, 0)])])
    c = cone(pt(0, 5), base)
    assert c.cells.dim == 1
    assert len(c.cells) == 2
    # 锥顶在两条边里各出现一次，模 2 抵消
    assert boundary(c.cells).simplices == base.simplices


def test_transversal_parity_counts_crossings_mod_two() -> None:
    triangle = make_chain([make_simplex([pt(-2, -1, 0), pt(2, -1, 0), pt(0, 2, 0)])])
    # 竖直边 x = 0 与 x = 1/2 都从三角形内部穿过
    twice = polygon_chain(pt(0, 0, 1), pt(0, 0, -1), pt("1/2", 0, -1), pt("1/2", 0, 1))
    assert transversal_parity(triangle, twice) == 0
    # 第二条竖直边挪到 x = 5，在三角形外
    once = polygon_chain(pt(0, 0, 1), pt(0, 0, -1), pt(5, 0, -1), pt(5, 0, 1))
    assert transversal_parity(triangle, once) == 1


def test_hopf_pair_links_once() -> None:
    x, y = hopf_pair()
    assert linking_mod2(x, y) == 1
    assert linking_mod2(y, x) == 1


def test_translated_pair_is_unlinked() -> None:
    x, y = hopf_pair()
    assert linking_mod2(x, shifted(y, 100)) == 0


def test_linking_does_not_depend_on_apex() -> None:
    x, y = hopf_pair()
    assert {linking_mod2(x, y, apex_start=t) for t in (0, 5, 17)} == {1}


def random_triangle_pair(rng: random.Random) -> tuple[Chain, Chain]:
    """R³ 中支撑不交的两个随机三角形边界；Y 的顶点取在 X 附近以便有一部分环绕。"""
    while True:
        x = polygon_chain(*[random_point(rng, 3) for _ in range(3)])
        y = polygon_chain(*[random_point(rng, 3, radius=700_000) for _ in range(3)])
        if supports_witness(x, y) is None:
            return x, y


@slow
@pytest.mark.parametrize("seed", range(50))
def test_linking_is_symmetric_and_apex_independent(seed: int) -> None:
    x, y = random_triangle_pair(random.Random(seed))
    values = {linking_mod2(x, y, apex_start=7 * t) for t in range(20)}
    values |= {linking_mod2(y, x, apex_start=7 * t) for t in range(20)}
    assert len(values) == 1


def test_linking_is_symmetric_on_a_few_random_pairs() -> None:
    for seed in range(3):
        x, y = random_triangle_pair(random.Random(seed))
        lk = linking_mod2(x, y)
        assert lk in (0, 1)
        assert linking_mod2(y, x) == lk
        assert linking_mod2(x, y, apex_start=11) == lk


def test_linking_preconditions() -> None:
    x, y = hopf_pair()
    open_path = make_chain([make_simplex([pt(0, 0, 5), pt(1, 0, 5)])])
    with pytest.raises(PreconditionError):
        linking_mod2(x, open_path)
    with pytest.raises(DimensionMismatchError):
        linking_mod2(x, make_chain([make_simplex([pt(9, 9, 9)]), make_simplex([pt(8, 9, 9)])]))
    touching = polygon_chain(pt(0, -1, 0), pt(0, -1, 3), pt(0, -5, 1))
    with pytest.raises(PreconditionError):
        linking_mod2(x, touching)


def test_intersection_parity_dimension_check() -> None:
    x, y = hopf_pair()
    with pytest.raises(DimensionMismatchError):
        intersection_parity([x, y])


def test_zero_cycles_in_the_line() -> None:
    # R^1 中的两个 0-闭链：{0, 3} 与 {1, 5} 交错 → 环绕
    a = make_chain([make_simplex([pt(0)]), make_simplex([pt(3)])])
    b = make_chain([make_simplex([pt(1)]), make_simplex([pt(5)])])
    c = make_chain([make_simplex([pt(1)]), make_simplex([pt(2)])])
    assert linking_mod2(a, b) == 1
    assert linking_mod2(a, c) == 0


def test_unit_sphere_vertices_lie_on_sphere() -> None:
    for k in (1, 2, 3):
        points = unit_sphere_vertices(k)
        assert len(points) == k + 2
        assert all(sum(x * x for x in p) == 1 for p in points)


# ========== Borromean ==========


@pytest.mark.parametrize("k", [1, 2])
def test_remark_a_configuration_bits(k: int) -> None:
    cfg = remark_a_config(k)
    assert cfg.ambient == k + 1
    report = borromean_check(cfg)
    assert report.disjoint
    assert report.bits == (1, 0, 1, 0)
    assert report.properties == (True, True, True)
    assert not report.alarm


def test_remark_a_components_are_cycles() -> None:
    cfg = remark_a_config(2)
    assert disjointness_witness(cfg) is None
    assert len(cfg.torus_map.domain.marks["m"]) == 2


def test_borromean_check_reports_intersection() -> None:
    cfg = remark_a_config(1)
    cfg.sphere_m_map = cfg.sphere_p_map
    report = borromean_check(cfg)
    assert not report.disjoint
    assert report.witness is not None
    assert report.bits == (None, None, None, None)


def test_product_torus_configuration_is_disjoint_and_quiet() -> None:
    cfg = product_torus_config(2, 1, random.Random(4))
    assert cfg.ambient == 4
    report = borromean_check(cfg)
    assert report.disjoint
    assert report.lk_pp == 0
    assert not report.alarm


def test_product_torus_requires_k_greater_than_l() -> None:
    with pytest.raises(PreconditionError):
        product_torus_config(1, 1, random.Random(0))


def test_leibniz_requires_positive_l() -> None:
    with pytest.raises(PreconditionError):
        leibniz_terms(remark_a_config(2))


@slow
@pytest.mark.parametrize("seed", range(10))
def test_leibniz_terms_sum_to_zero(seed: int) -> None:
    cfg = product_torus_config(2, 1, random.Random(seed))
    terms = leibniz_terms(cfg)
    assert terms.total == 0
    assert not terms.alarm


# ========== Leibniz ==========


def points_on_line(*xs: int) -> Chain:
    return make_chain([make_simplex([pt(x)]) for x in xs])


def test_cone_triple_terms_hand_count_on_the_line() -> None:
    # R^1：X = {0, 3}、Y = {1, 5}、Z = {2, 7}，锥顶分别取 12、10、11
    #   |X ∩ C_Y ∩ C_Z| = 1（只有 3）、|C_X ∩ Y ∩ C_Z| = 0、|C_X ∩ C_Y ∩ Z| = 1 + 4 ≡ 1
    cycles = (points_on_line(0, 3), points_on_line(1, 5), points_on_line(2, 7))
    terms = cone_triple_parities(cycles, (pt(12), pt(10), pt(11)))
    assert terms == (1, 0, 1)
    assert sum(terms) % 2 == 0


@pytest.mark.parametrize("seed", range(10))
def test_cone_triple_terms_always_sum_to_even(seed: int) -> None:
    rng = random.Random(seed)
    coords = rng.sample(range(-60, 60), 12)
    cycles = (points_on_line(*coords[0:4]), points_on_line(*coords[4:6]), points_on_line(*coords[6:12]))
    apexes = tuple(pt(x) for x in rng.sample(range(100, 140), 3))
    terms = cone_triple_parities(cycles, apexes)
    assert sum(terms) % 2 == 0


def test_cone_triple_terms_dimension_check() -> None:
    x, y = hopf_pair()
    with pytest.raises(DimensionMismatchError):
        cone_triple_parities((x, y, x), (apex_point(0, 3), apex_point(1, 3), apex_point(2, 3)))


def test_cycles_used_in_fixtures() -> None:
    x, y = hopf_pair()
    assert is_cycle(x) and is_cycle(y)

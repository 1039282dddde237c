from __future__ import annotations

import random

import pytest

from src.core.errors import MalformedFileError, ParameterRangeError, PlanError
from src.core.models.reduce import CnfFormula, LinkagePlan, TorusLink
from src.core.rules.complex import (
    euler_characteristic,
    f_vector,
    is_boundary_of_simplex,
    subcomplex,
)
from src.core.rules.reduce import (
    PLACEHOLDER_LABEL,
    assemble_k_phi,
    build_gadget_kit,
    default_plan,
    format_dimacs,
    parse_dimacs,
    random_cnf,
    size_bound,
)

SAMPLE = "c sample\np cnf 3 2\n1 -2 3 0\n-1 2 0\n"


def test_parse_dimacs() -> None:
    phi = parse_dimacs(SAMPLE)
    assert phi.variable_count == 3
    assert phi.clauses == [[1, -2, 3], [-1, 2]]
    assert phi.comments == ["sample"]
    assert parse_dimacs(format_dimacs(phi)).clauses == phi.clauses


def test_parse_dimacs_clause_across_lines() -> None:
    phi = parse_dimacs("p cnf 2 1\n1\n-2 0\n")
    assert phi.clauses == [[1, -2]]


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("p cnf 2 1\n1 x 0\n", 2),
        ("1 2 0\n", 1),
        ("p cnf 2 1\n3 0\n", 2),
        ("p cnf 2 1\n0\n", 2),
        ("p dnf 2 1\n1 0\n", 1),
    ],
)
def test_parse_dimacs_reports_line(text: str, line: int) -> None:
    with pytest.raises(MalformedFileError) as info:
        parse_dimacs(text, path="bad.cnf")
    assert info.value.line == line
    assert info.value.path == "bad.cnf"


def test_parse_dimacs_clause_count_mismatch() -> None:
    with pytest.raises(MalformedFileError):
        parse_dimacs("p cnf 2 2\n1 0\n")


def test_random_cnf_is_seeded() -> None:
    a = random_cnf(4, 3, 3, random.Random(7))
    b = random_cnf(4, 3, 3, random.Random(7))
    assert a.clauses == b.clauses
    assert all(len(c) == 3 and len({abs(x) for x in c}) == 3 for c in a.clauses)
    with pytest.raises(ParameterRangeError):
        random_cnf(2, 1, 3, random.Random(0))


@pytest.mark.parametrize(("k", "d", "l"), [(2, 4, 1), (4, 6, 1), (4, 7, 2), (6, 10, 3)])
def test_gadget_kit_in_range(k: int, d: int, l: int) -> None:
    kit = build_gadget_kit(k, d)
    assert kit.l == l
    assert kit.sphere.dim == k
    assert kit.torus.dim == 2 * l


@pytest.mark.parametrize(("k", "d"), [(2, 5), (2, 3), (1, 3), (4, 8)])
def test_gadget_kit_out_of_range(k: int, d: int) -> None:
    with pytest.raises(ParameterRangeError) as info:
        build_gadget_kit(k, d)
    assert "k+2 ≤ d ≤ 3k/2+1" in info.value.message


def test_default_plan_pairs_complementary_literals() -> None:
    plan = default_plan(parse_dimacs(SAMPLE))
    assert plan.label == PLACEHOLDER_LABEL
    assert plan.spheres == ["S0_0", "S0_1", "S0_2", "S1_0", "S1_1"]
    assert [(t.torus_id, t.sphere_q, t.sphere_r) for t in plan.tori] == [
        ("T0", "S0_0", "S1_0"),
        ("T1", "S0_1", "S1_1"),
    ]


def test_default_plan_counts_occurrences_not_variables() -> None:
    # x1 出现两次（同号）、¬x1 一次；x2 与 ¬x2 各一次
    phi = CnfFormula(variable_count=2, clauses=[[1, 2], [1, -2], [-1]], comments=[])
    plan = default_plan(phi)
    assert plan.label == PLACEHOLDER_LABEL
    assert plan.spheres == ["S0_0", "S0_1", "S1_0", "S1_1", "S2_0"]
    assert [(t.torus_id, t.sphere_q, t.sphere_r) for t in plan.tori] == [
        ("T0", "S0_0", "S2_0"),
        ("T1", "S0_1", "S1_1"),
        ("T2", "S1_0", "S2_0"),
    ]


def test_assemble_k_phi_2_4() -> None:
    phi = parse_dimacs(SAMPLE)
    plan = default_plan(phi)
    result = assemble_k_phi(phi, 2, 4, plan)
    kit = build_gadget_kit(2, 4)
    assert result.dim == 2
    assert len(result.facets) == size_bound(kit, plan) == 56
    # 每个环面 6 次粘接
    assert result.vertex_count == 5 * 4 + 2 * 9 - 12
    for name in ("T0", "T1"):
        torus = subcomplex(result, name)
        assert f_vector(torus) == (9, 27, 18)
        assert euler_characteristic(torus) == 0
        m, p = subcomplex(result, f"{name}.m"), subcomplex(result, f"{name}.p")
        assert is_boundary_of_simplex(m)
        assert is_boundary_of_simplex(p)
        shared = {v for f in m.facets for v in f} & {v for f in p.facets for v in f}
        assert len(shared) == 1


def test_assemble_meridian_bounds_a_sphere_face() -> None:
    phi = parse_dimacs(SAMPLE)
    result = assemble_k_phi(phi, 2, 4, default_plan(phi))
    meridian = {v for f in result.marks["T0.m"] for v in f}
    sphere_faces = {tuple(f) for f in result.marks["S0_0"]}
    assert tuple(sorted(meridian)) in sphere_faces


def test_assemble_without_tori() -> None:
    phi = parse_dimacs("p cnf 2 1\n1 2 0\n")
    plan = LinkagePlan(spheres=["A", "B"], tori=[])
    result = assemble_k_phi(phi, 2, 4, plan)
    assert result.vertex_count == 8
    assert len(result.facets) == 8


def test_assemble_rejects_bad_plan() -> None:
    phi = parse_dimacs(SAMPLE)
    missing = LinkagePlan(spheres=["A"], tori=[TorusLink("T0", "A", "B")])
    with pytest.raises(PlanError):
        assemble_k_phi(phi, 2, 4, missing)
    looped = LinkagePlan(spheres=["A"], tori=[TorusLink("T0", "A", "A")])
    with pytest.raises(PlanError):
        assemble_k_phi(phi, 2, 4, looped)
    unknown = LinkagePlan(spheres=["A", "B"], tori=[TorusLink("T0", "A", "B", convention="glue-anywhere")])
    with pytest.raises(PlanError):
        assemble_k_phi(phi, 2, 4, unknown)
    with pytest.raises(ParameterRangeError):
        assemble_k_phi(phi, 2, 5, default_plan(phi))

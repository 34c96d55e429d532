"""
Tests for knot classification, families, planning and assembly.
"""

import pytest

from farey import INFINITY, Slope, slopes_in_box
from filling import (ExceptionalPrimary, FamilyGenerator, KnotKind,
                     NotAKnotFilling, candidate_plans, classify_pair,
                     exceptional, exceptional_label, family_extension, fill,
                     identity_value, minimal_figure_eight, plan_filling,
                     predicted_total, secondary_slope, seed_class,
                     type_a_generator, type_bc_parameter)
from seeds import SeedId
from triangulation import (degree_three_edges, first_homology, orientable,
                           validate, vertex_links)


def test_exceptional_set():
    for s in (INFINITY, Slope(-3, 1), Slope(-2, 1), Slope(-1, 1), Slope(0, 1)):
        assert exceptional(s)
    for s in (Slope(1, 1), Slope(-4, 1), Slope(-1, 2), Slope(-5, 2)):
        assert not exceptional(s)
    assert exceptional_label(INFINITY) == "T(0,1)"
    assert exceptional_label(Slope(1, 2)) is None


def test_classify_examples():
    a = classify_pair(Slope(-1, 2), Slope(-3, 2))
    assert a.kind is KnotKind.A and a.k is None
    b = classify_pair(Slope(-7, 3), Slope(-7, 4))
    assert b.kind is KnotKind.B and b.k == -3
    assert str(b) == "Type B (k = -3)"
    assert classify_pair(Slope(-1, 2), Slope(-1, 2)) is None
    assert classify_pair(Slope(-2, 1), Slope(-3, 2)) is None


def test_classify_is_symmetric():
    box = [s for s in slopes_in_box(5) if not exceptional(s)]
    for rs in box:
        for tu in box:
            assert (classify_pair(rs, tu) is None) == (classify_pair(tu, rs) is None)


def test_type_bc_parameter():
    assert type_bc_parameter(Slope(-5, 3), KnotKind.B) == 3
    assert type_bc_parameter(Slope(-7, 2), KnotKind.C) == -2
    assert type_bc_parameter(Slope(-1, 2), KnotKind.B) is None
    assert type_bc_parameter(Slope(-1, 2), KnotKind.A) is None


@pytest.mark.parametrize("kind, primary, n, expected", [
    (KnotKind.A, Slope(-1, 2), 1, Slope(-3, 2)),
    (KnotKind.A, Slope(1, 1), 3, Slope(3, 4)),
    (KnotKind.B, Slope(-5, 3), 0, Slope(-12, 5)),
])
def test_secondary_slope_examples(kind, primary, n, expected):
    assert secondary_slope(kind, primary, n) == expected


def test_type_a_generator_examples():
    assert type_a_generator(Slope(1, 1)) == (0, 1, 1, 1)
    assert type_a_generator(Slope(-1, 2)) == (-1, -2, 1, 1)
    assert type_a_generator(Slope(-4, 1)) == (-1, -1, 3, 4)
    with pytest.raises(ExceptionalPrimary):
        type_a_generator(Slope(-2, 1))


def test_type_a_family_members_are_knots():
    for primary in slopes_in_box(6):
        if exceptional(primary):
            continue
        for n in range(-6, 7):
            tu = secondary_slope(KnotKind.A, primary, n)
            assert abs(identity_value(KnotKind.A, primary, tu)) == 1


@pytest.mark.parametrize("kind", [KnotKind.B, KnotKind.C])
@pytest.mark.parametrize("k", [-4, -3, -2, 2, 3, 4])
def test_bc_family_members_are_knots(kind, k):
    shift = 2 if kind is KnotKind.B else 3
    primary = Slope(1 - shift * k, k)
    for n in range(-5, 6):
        tu = secondary_slope(kind, primary, n)
        assert abs(identity_value(kind, primary, tu, k)) == 1


def test_seed_class():
    assert seed_class(Slope(-1, 2)) == 1
    assert seed_class(Slope(-5, 2)) == 2
    assert seed_class(Slope(1, 2)) == 3
    assert seed_class(Slope(4, 1)) == 4
    assert seed_class(Slope(-4, 1)) == 5
    with pytest.raises(ExceptionalPrimary):
        seed_class(Slope(0, 1))


@pytest.mark.parametrize("rs, tu, seed, counts, swapped", [
    (Slope(-1, 2), Slope(-3, 2), SeedId.T1, (2, 1, 0), False),
    (Slope(-1, 3), Slope(-5, 2), SeedId.T2, (2, 0, 2), True),
    (Slope(-1, 2), Slope(-15, 8), SeedId.T1, (2, 1, 6), False),
    (Slope(-6, 1), Slope(-1, 7), SeedId.T5HAT, (2, 2, 5), False),
    (Slope(1, 2), Slope(3, 2), SeedId.T3, (5, 0, 1), False),
    (Slope(1, 1), Slope(2, 1), SeedId.T4HAT, (2, 1, 0), False),
])
def test_plan_examples(rs, tu, seed, counts, swapped):
    plan = plan_filling(rs, tu)
    assert plan.seed is seed
    assert plan.counts == counts
    assert plan.swapped is swapped
    assert plan.knot is not None


def test_plan_restricted_to_one_seed():
    plan = plan_filling(Slope(-1, 2), Slope(-3, 2), seed='T3')
    assert plan.seed is SeedId.T3
    assert plan.total == 8
    with pytest.raises(NotAKnotFilling):
        plan_filling(Slope(-1, 2), Slope(-3, 2), seed='T4hat')


def test_plan_refuses_non_knots():
    with pytest.raises(NotAKnotFilling):
        plan_filling(Slope(-1, 2), Slope(-1, 2))


def test_candidate_plans_are_sorted():
    plans = candidate_plans(Slope(-6, 1), Slope(-1, 7))
    totals = [plan.total for plan in plans]
    assert totals == sorted(totals)
    assert plans[0].seed is SeedId.T5HAT


@pytest.mark.parametrize("rs, tu, total", [
    (Slope(-1, 2), Slope(-3, 2), 3),
    (Slope(-1, 3), Slope(-5, 2), 4),
    (Slope(1, 2), Slope(3, 2), 6),
    (Slope(-6, 1), Slope(-1, 7), 9),
    (Slope(1, 1), Slope(2, 1), 3),
    (Slope(1, 1), Slope(3, 2), 4),
    (Slope(3, 1), Slope(2, 5), 7),
    (Slope(3, 2), Slope(3, 4), 8),
    (Slope(2, 3), Slope(4, 3), 8),
    (Slope(2, 3), Slope(8, 5), 9),
    (Slope(-7, 3), Slope(-7, 4), None),
])
def test_fill_is_a_knot_complement(rs, tu, total):
    result = fill(rs, tu)
    t = result.triangulation
    if total is not None:
        assert result.total == total
    assert t.size == result.total
    assert t.is_closed()
    assert validate(t) == []
    assert orientable(t)
    links = vertex_links(t)
    assert len(links) == 1 and links[0].is_torus
    assert first_homology(t).is_z()


def test_minimal_figure_eight():
    result, smaller = minimal_figure_eight()
    assert result.total == 3
    assert smaller.size == 2
    assert validate(smaller) == []
    assert orientable(smaller)
    assert first_homology(smaller).is_z()


def test_figure_eight_filling_has_a_degree_three_edge():
    t = fill(Slope(1, 1), Slope(2, 1)).triangulation
    edges = degree_three_edges(t)
    assert edges
    assert all(t.edge_classes()[e].degree == 3 for e in edges)


def test_predicted_total_examples():
    nine = FamilyGenerator(Slope(-1, 2), KnotKind.A, (-1, -2, 1, 1), None, (-9, 7))
    assert predicted_total(nine, 8) == 10
    assert predicted_total(nine, 7) == 9
    with pytest.raises(NotAKnotFilling):
        predicted_total(nine, -1)


def test_family_edges_and_extension():
    one = FamilyGenerator(Slope(1, 1), KnotKind.A, (0, 1, 1, 1), 8)
    assert one.edges == (-8, 7)
    assert family_extension(one, 2) == (-10, 9)
    assert str(one) == "(1,1)_A"

"""
Tests for layered solid tori, layered chains and cusp attachment.
"""

import pytest

from farey import (BoundaryClass, Slope, UnrealizableSlope, farey_path,
                   lst_tet_count, slopes_in_box)
from filling import boundary_count
from layered import (attach_permissible_cusp, attach_standard_cusp,
                     build_chain, build_lst)
from seeds import SeedId, build_seed
from triangulation import (OpenBoundary, TriangulationBuilder, first_homology,
                           orientable, validate, vertex_links)


def _layer(seed_id, which, slope):
    seed = build_seed(seed_id)
    builder = TriangulationBuilder(seed.core)
    boundary = seed.boundaries()[which]
    if boundary.cls.is_permissible:
        result = build_chain(builder, boundary, slope)
    else:
        result = build_lst(builder, boundary, slope)
    return seed, builder.freeze(), result


@pytest.mark.parametrize("seed, which, slope, count", [
    (SeedId.T1, 0, Slope(-3, 2), 0),
    (SeedId.T5HAT, 1, Slope(-1, 5), 3),
    (SeedId.T3, 0, Slope(7, 2), 3),
    (SeedId.T3, 1, Slope(7, 2), 3),
])
def test_lst_examples(seed, which, slope, count):
    core, t, result = _layer(seed, which, slope)
    assert result.tetrahedra == count
    assert result.killed == slope
    assert t.size == core.size + count
    assert validate(t) == []
    assert orientable(t)


def test_lst_closes_its_boundary():
    seed, t, _ = _layer(SeedId.T1, 0, Slope(-5, 3))
    boundary = seed.boundary1
    assert t.gluing(boundary.f.tet, boundary.f.face) is not None
    assert t.gluing(boundary.g.tet, boundary.g.face) is not None
    assert len(t.open_faces()) == 2


@pytest.mark.parametrize("seed, which", [
    (SeedId.T1, 0), (SeedId.T2, 0), (SeedId.T2, 1), (SeedId.T3, 0),
    (SeedId.T4HAT, 1), (SeedId.T5HAT, 1),
])
def test_lst_count_matches_closed_form(seed, which):
    boundary = build_seed(seed).boundaries()[which]
    for slope in slopes_in_box(7):
        if slope.is_infinite or slope in boundary.triple:
            continue
        _, t, result = _layer(seed, which, slope)
        assert result.tetrahedra == lst_tet_count(boundary.cls, slope)
        assert result.killed == slope
        assert validate(t) == []


def test_lst_tracks_the_farey_path():
    seed = build_seed(SeedId.T3)
    target = Slope(17, 9)
    _, _, result = _layer(SeedId.T3, 0, target)
    expected = [triple.slopes for triple in farey_path(seed.boundary1.triple, target).triples()]
    assert list(result.triples) == expected[:-1]


@pytest.mark.parametrize("seed, which, slope", [
    (SeedId.T1, 0, Slope(-1, 1)),
    (SeedId.T1, 1, Slope(-2, 1)),
    (SeedId.T3, 0, Slope(0, 1)),
    (SeedId.T5HAT, 1, Slope(-1, 1)),
])
def test_edge_slope_is_refused(seed, which, slope):
    built = build_seed(seed)
    boundary = built.boundaries()[which]
    builder = TriangulationBuilder(built.core)
    with pytest.raises(UnrealizableSlope):
        build_lst(builder, boundary, slope)
    assert builder.freeze().open_faces() == built.core.open_faces()
    assert boundary_count(boundary.cls, slope) is None


@pytest.mark.parametrize("seed, slope, count", [
    (SeedId.T4HAT, Slope(1, 1), 1),
    (SeedId.T4HAT, Slope(0, 1), 0),
    (SeedId.T4HAT, Slope(-2, 1), 2),
    (SeedId.T5HAT, Slope(-4, 1), 0),
    (SeedId.T5HAT, Slope(-3, 1), 1),
    (SeedId.T5HAT, Slope(-5, 1), 1),
    (SeedId.T5HAT, Slope(-6, 1), 2),
])
def test_chain_examples(seed, slope, count):
    core, t, result = _layer(seed, 0, slope)
    assert result.tetrahedra == count
    assert result.killed == slope
    assert t.size == core.size + count
    assert validate(t) == []
    assert orientable(t)


def test_chain_grows_one_per_step():
    sizes = [_layer(SeedId.T5HAT, 0, Slope(m, 1))[2].tetrahedra for m in range(-4, -12, -1)]
    assert sizes == list(range(8))


def test_chain_refuses_fractions():
    with pytest.raises(UnrealizableSlope):
        _layer(SeedId.T4HAT, 0, Slope(1, 2))


def test_t2_with_both_cusps():
    seed = build_seed(SeedId.T2)
    builder = TriangulationBuilder(seed.core)
    attach_standard_cusp(builder, seed.boundary1)
    attach_standard_cusp(builder, seed.boundary2)
    t = builder.freeze()
    assert t.size == 6
    assert first_homology(t).betti == 3


def test_t4hat_with_both_cusps():
    seed = build_seed(SeedId.T4HAT)
    builder = TriangulationBuilder(seed.core)
    assert attach_permissible_cusp(builder, seed.boundary1) == 2
    assert attach_standard_cusp(builder, seed.boundary2) == 6
    t = builder.freeze()
    assert t.size == 8
    links = vertex_links(t)
    assert len(links) == 3 and all(link.is_torus for link in links)


def test_attaching_twice_is_refused():
    seed = build_seed(SeedId.T1)
    builder = TriangulationBuilder(seed.core)
    attach_standard_cusp(builder, seed.boundary1)
    with pytest.raises(OpenBoundary):
        attach_standard_cusp(builder, seed.boundary1)


def test_permissible_boundary_data():
    seed = build_seed(SeedId.T5HAT)
    assert seed.boundary1.cls is BoundaryClass.UHAT
    assert seed.boundary1.killed_slope(0) == Slope(-4, 1)
    assert seed.boundary1.killed_slope(2) == Slope(-6, 1)

"""
Tests for the seed triangulations and cusp fragments.
"""

import random

import pytest

from app.config import FillConfig
from farey import INFINITY, BoundaryClass, Slope
from layered import OneVertexBoundary, PermissibleBoundary
from seeds import (SeedId, UnknownSeed, build_seed, closed_seed, fills_knots,
                   list_seeds, parse_seed_id, permissible_cusp, seed_definition,
                   standard_cusp, t1_table)
from triangulation import (export_gluing_table, first_homology, iso_signature,
                           orientable, validate, vertex_links)

ALL_SEEDS = list(SeedId)


@pytest.fixture(scope="module", params=ALL_SEEDS, ids=lambda s: s.value)
def closed(request):
    return request.param, closed_seed(request.param)


def test_standard_cusp_fragment():
    cusp = standard_cusp()
    assert cusp.size == 2
    assert validate(cusp) == []
    assert cusp.open_faces() == [(0, 0), (1, 0)]
    assert cusp.labels == ('X', 'Y')


def test_permissible_cusp_fragment():
    cusp = permissible_cusp()
    assert cusp.size == 4
    assert validate(cusp) == []
    assert cusp.open_faces() == [(0, 0), (1, 0), (2, 0), (3, 0)]
    assert orientable(cusp)


@pytest.mark.parametrize("seed, size", [
    (SeedId.T1, 2), (SeedId.T2, 2), (SeedId.T2P, 2),
    (SeedId.T3, 5), (SeedId.T4HAT, 2), (SeedId.T5HAT, 2),
])
def test_core_sizes(seed, size):
    assert build_seed(seed).size == size


@pytest.mark.parametrize("seed, classes", [
    (SeedId.T1, (BoundaryClass.P, BoundaryClass.P)),
    (SeedId.T2, (BoundaryClass.Q, BoundaryClass.P)),
    (SeedId.T2P, (BoundaryClass.P, BoundaryClass.Q)),
    (SeedId.T3, (BoundaryClass.R, BoundaryClass.R)),
    (SeedId.T4HAT, (BoundaryClass.VHAT, BoundaryClass.R)),
    (SeedId.T5HAT, (BoundaryClass.UHAT, BoundaryClass.RP)),
])
def test_boundary_classes(seed, classes):
    assert build_seed(seed).classes == classes


def test_one_vertex_boundaries_carry_their_triple():
    for seed in ALL_SEEDS:
        for boundary in build_seed(seed).boundaries():
            if isinstance(boundary, OneVertexBoundary):
                assert boundary.triple == boundary.cls.triple
            else:
                assert isinstance(boundary, PermissibleBoundary)
                assert boundary.cls.is_permissible


def test_closed_seed_is_three_cusped(closed):
    seed, t = closed
    assert validate(t) == []
    assert orientable(t)
    links = vertex_links(t)
    assert len(links) == 3
    assert all(link.is_torus for link in links)


def test_closed_seed_homology(closed):
    _, t = closed
    h = first_homology(t)
    assert h.betti == 3
    assert h.torsion == ()


def test_closed_seed_sizes():
    assert closed_seed(SeedId.T1).size == 6
    assert closed_seed(SeedId.T3).size == 9
    assert closed_seed(SeedId.T4HAT).size == 8
    assert closed_seed(SeedId.T5HAT).size == 8


def test_t1_matches_published_table():
    assert iso_signature(closed_seed(SeedId.T1)) == iso_signature(t1_table())
    assert export_gluing_table(closed_seed(SeedId.T1)) == export_gluing_table(t1_table())


def test_t1_boundary_slopes():
    seed = build_seed(SeedId.T1)
    assert seed.boundary1.f.roles == (0, 2, 3)
    assert seed.boundary1.slopes == (Slope(-2, 1), INFINITY, Slope(-1, 1))
    assert seed.boundary2.g.roles == (1, 3, 2)


def test_t2p_swaps_t2_boundaries():
    t2, t2p = build_seed(SeedId.T2), build_seed(SeedId.T2P)
    assert t2p.boundary1 == t2.boundary2
    assert t2p.boundary2 == t2.boundary1
    assert iso_signature(t2p.core) == iso_signature(t2.core)


def test_t3_core_rows():
    text = export_gluing_table(build_seed(SeedId.T3).core)
    assert "2 | 3(130) | 4(310) | 0(013) | 1(031)" in text.splitlines()
    assert validate(build_seed(SeedId.T3).core) == []


def test_t5hat_core_rows():
    lines = export_gluing_table(build_seed(SeedId.T5HAT).core).splitlines()
    assert lines[1] == "0 | -- | -- | 1(320) | --"


def test_seed_signature_ignores_relabelling():
    rng = random.Random(7)
    for seed in ALL_SEEDS:
        t = closed_seed(seed)
        expected = iso_signature(t)
        for _ in range(FillConfig.RELABEL_TRIALS):
            assert iso_signature(t.random_relabel(rng)) == expected


@pytest.mark.parametrize("name, expected", [
    ("T1", SeedId.T1), ("t2p", SeedId.T2P), ("T4h", SeedId.T4HAT),
    ("T5h", SeedId.T5HAT), ("T5hat", SeedId.T5HAT), (SeedId.T3, SeedId.T3),
])
def test_seed_aliases(name, expected):
    assert parse_seed_id(name) == expected


def test_unknown_seed():
    with pytest.raises(UnknownSeed):
        build_seed("T9")
    assert list_seeds() == ['T1', 'T2', 'T2p', 'T3', 'T4hat', 'T5hat']


@pytest.mark.parametrize("seed", [SeedId.T3, SeedId.T4HAT])
def test_r_boundaries_put_the_red_edge_first(seed):
    r_boundaries = [b for b in build_seed(seed).boundaries() if b.cls is BoundaryClass.R]
    assert r_boundaries
    for boundary in r_boundaries:
        assert boundary.slopes == (INFINITY, Slope(0, 1), Slope(1, 1))


def test_calibration_knots_fill_to_homology_circles():
    for seed in ALL_SEEDS:
        definition = seed_definition(seed)
        assert definition.knots, seed
        built = build_seed(seed)
        first, second = built.boundaries()
        if definition.swap:
            first, second = second, first
        assert fills_knots(built.core, (first, second), definition.knots)


def test_torsion_is_caught():
    built = build_seed(SeedId.T3)
    # H1 of M3(1/3, 7/3) is Z + Z/2.
    assert not fills_knots(built.core, built.boundaries(), [(Slope(1, 3), Slope(7, 3))])

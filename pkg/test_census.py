"""
Tests for the census datasets and the verification harness.
"""

import dataclasses
import random
import shutil

import pytest

import census.verify as verify_module
from app.config import FillConfig
from census import (CF_ERRATA, DatasetCorrupt, census_row, complexity_bound,
                    complexity_of, family_by_primary, file_checksum,
                    load_census, load_checksums, load_families, verify_all,
                    verify_checksum, verify_family, verify_row)
from events import EventManager, RowVerified
from farey import Slope, norm, positive_cf
from filling import (KnotKind, UnknownFamily, fill, generator_for,
                     identity_value, type_bc_parameter)
from triangulation import InvalidTriangulation, iso_signature


@pytest.fixture(scope="module")
def census():
    return load_census()


@pytest.fixture(scope="module")
def families():
    return load_families()


def test_dataset_sizes(census, families):
    assert len(census) == 229
    assert len(families) == 42
    assert len({row.knot for row in census}) == 229


def test_census_row_lookup():
    row = census_row('K4_4')
    assert row.rs == Slope(-5, 2)
    assert row.tu == Slope(-1, 3)
    assert row.sigma == 4
    assert row.complexity == 4
    with pytest.raises(KeyError):
        census_row('K99_1')


def test_complexity_of():
    assert complexity_of('K9_53') == 9
    assert complexity_of('T(2,5)') is None


def test_columns_reproduced(census):
    for row in census:
        if row.knot in CF_ERRATA:
            assert CF_ERRATA[row.knot] == ('t/u', row.cf_tu)
            assert positive_cf(row.tu).coefficients != row.cf_tu
        else:
            assert positive_cf(row.tu).coefficients == row.cf_tu, row.knot
        assert positive_cf(row.rs).coefficients == row.cf_rs, row.knot
        assert norm(row.rs) == row.norm_rs
        assert norm(row.tu) == row.norm_tu
        assert sum(row.counts) == row.sigma


def test_checksums_match():
    checksums = load_checksums()
    assert set(checksums) == {'census.csv', 'families.yaml'}
    for name in ('census.csv', 'families.yaml'):
        path = FillConfig.CENSUS_PATH.parent / name
        assert file_checksum(path) == checksums[name]


def test_tampered_dataset_is_rejected(tmp_path):
    source = FillConfig.CENSUS_PATH
    copy = tmp_path / 'census.csv'
    shutil.copy(source, copy)
    with open(copy, 'a') as f:
        f.write("K9_999,x,A,1,1,2,1,\"[1]\",\"[2]\",1,2,T4h,1,0,2,3\n")
    with pytest.raises(DatasetCorrupt):
        verify_checksum(copy)
    with pytest.raises(DatasetCorrupt):
        load_census(copy)
    assert len(load_census(copy, check=False)) == 230


def test_verify_trefoil_neighbour():
    report = verify_row(census_row('K3_1'))
    assert report.ok, report.failures
    assert report.tetrahedra == 3
    assert report.homology == "Z"


def test_verify_figure_eight():
    report = verify_row(census_row('K2_1'))
    assert report.ok, report.failures
    assert report.tetrahedra == 2


def test_altered_sigma_fails():
    row = dataclasses.replace(census_row('K5_4'), sigma=6, counts=(1, 3, 2))
    report = verify_row(row)
    assert not report.ok
    assert any("sigma" in failure for failure in report.failures)


def test_tied_split_uses_the_census_assignment():
    report = verify_row(census_row('K6_18'))
    assert report.ok, report.failures
    assert sorted(report.plan.counts) == [1, 2, 3]


def test_verify_all_rows(census):
    events = EventManager()
    seen = []
    finished = []
    events.subscribe('row_verified', seen.append)
    events.subscribe('verification_finished', finished.append)
    result = verify_all(census, workers=1, events=events)
    assert [r.name for r in result.rows] == [row.knot for row in census]
    assert result.failures() == []
    assert result.summary() == "229/229 ok"
    misprinted = {r.name for r in result.rows if any("misprint" in n for n in r.notes)}
    assert misprinted == set(CF_ERRATA)
    assert len(misprinted) == 5
    assert len(seen) == 229
    assert finished[0].ok


def test_failing_listener_does_not_stop_others():
    events = EventManager()
    seen = []

    def broken(event):
        raise RuntimeError("boom")

    events.subscribe('row_verified', broken)
    events.subscribe('row_verified', seen.append)
    report = verify_row(census_row('K3_1'))
    events.emit(RowVerified(report, 0, 1))
    assert len(seen) == 1
    assert events.errors == ["row_verified listener failed: boom"]


def test_iso_signature_stable_on_census_fills(census):
    rng = random.Random(11)
    for row in rng.sample(census, 10):
        t = fill(row.rs, row.tu).triangulation
        signature = iso_signature(t)
        for _ in range(FillConfig.RELABEL_TRIALS):
            assert iso_signature(t.random_relabel(rng)) == signature


def test_family_identities(families):
    for family in families:
        k = type_bc_parameter(family.primary, family.kind)
        for n in range(-10, 11):
            value = identity_value(family.kind, family.primary, family.secondary(n), k)
            assert abs(value) == 1, (str(family), n)


def test_closed_form_generators_agree_with_tables(families):
    # Tables may index a family in either direction about n = -1/2.
    for family in families:
        closed = generator_for(family.kind, family.primary)
        window = range(-12, 12)
        tabulated = {family.secondary(n) for n in window}
        computed = {Slope(closed[0] + closed[1] * n, closed[2] + closed[3] * n) for n in window}
        assert tabulated == computed, str(family)


def test_every_family_verifies(families):
    for family in families:
        report = verify_family(family, extra_range=5)
        assert report.ok, (str(family), report.failures)


def test_nine_edge_family_growth():
    family = family_by_primary(Slope(-1, 2))
    report = verify_family(family, extra_range=5)
    assert [max(low, high) for _, low, high in report.extension] == [10, 11, 12, 13, 14]
    assert family.members[7] == family.members[-9] == 'K9_5'
    assert family.family.breadth is None


def test_figure_eight_family_member():
    family = family_by_primary(Slope(1, 1), KnotKind.A)
    assert family.members[-2] == 'K2_1'
    assert family.secondary(-2) == Slope(2, 1)


def test_family_lookup():
    assert family_by_primary(Slope(-8, 3), KnotKind.C).kind is KnotKind.C
    assert family_by_primary(Slope(-8, 3), KnotKind.A).kind is KnotKind.A
    with pytest.raises(UnknownFamily):
        family_by_primary(Slope(5, 7))


def test_package_error_fails_only_its_row(monkeypatch):
    good, bad = census_row('K3_1'), census_row('K4_1')
    real = verify_module.classify_pair

    def damaged(rs, tu):
        if (rs, tu) == (bad.rs, bad.tu):
            raise InvalidTriangulation("damaged gluing table")
        return real(rs, tu)

    monkeypatch.setattr(verify_module, 'classify_pair', damaged)
    result = verify_all([good, bad], workers=1)
    assert result.summary() == "1/2 ok"
    assert [r.name for r in result.failures()] == ['K4_1']
    assert result.failures()[0].failures == ["InvalidTriangulation: damaged gluing table"]


def test_family_member_off_its_census_pair_fails():
    family = family_by_primary(Slope(-1, 2))
    report = verify_family(family, extra_range=0)
    assert report.ok, report.failures
    assert any("K9_5 also fills at (-1/2, -17/8)" in note for note in report.notes)

    moved = dataclasses.replace(family, members={**family.members, 2: 'K5_5'})
    report = verify_family(moved, extra_range=0)
    assert report.failures == ["n=2: K5_5 at (-1/2, -5/3), census has (-1/2, -7/4)"]


@pytest.mark.parametrize("primary, kind, index, expected", [
    (Slope(-1, 2), KnotKind.A, 8, 10),
    (Slope(1, 1), KnotKind.A, 7, 9),
    (Slope(-4, 1), KnotKind.A, 6, 10),
])
def test_complexity_bound(primary, kind, index, expected):
    assert complexity_bound(primary, kind, index) == expected


def test_complexity_bound_unknown_family():
    with pytest.raises(UnknownFamily):
        complexity_bound(Slope(5, 7), KnotKind.A, 0)
    with pytest.raises(UnknownFamily):
        complexity_bound(Slope(-1, 2), KnotKind.C, 0)

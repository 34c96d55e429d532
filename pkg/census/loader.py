"""
Loading the census and family datasets from data/.
"""

import csv
import hashlib
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from app.config import FillConfig
from farey import Slope, SlopeParseError
from filling import (FamilyGenerator, KnotKind, UnknownFamily, exceptional,
                     predicted_total)
from seeds import SeedId, UnknownSeed, parse_seed_id


class DatasetCorrupt(ValueError):
    """Raised when a dataset file fails its checksum or cannot be parsed."""


_KNOT_NAME = re.compile(r'^K(\d+)_(\d+)$')


def complexity_of(name: str) -> Optional[int]:
    """C from a census name KC_v, or None for torus and satellite labels."""
    match = _KNOT_NAME.match(name)
    return int(match.group(1)) if match else None


def is_census_name(label: str) -> bool:
    return _KNOT_NAME.match(label) is not None


@dataclass(frozen=True)
class CensusRow:
    """One tabulated census knot with its filling slopes and predicted counts."""
    knot: str
    snappea: str
    kind: KnotKind
    rs: Slope
    tu: Slope
    cf_rs: Tuple[int, ...]
    cf_tu: Tuple[int, ...]
    norm_rs: int
    norm_tu: int
    seed: SeedId
    counts: Tuple[int, int, int]
    sigma: int

    @property
    def complexity(self) -> int:
        return complexity_of(self.knot)

    @property
    def count_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.counts))

    @property
    def slopes(self) -> frozenset:
        return frozenset((self.rs, self.tu))


@dataclass(frozen=True)
class FamilyRow:
    """A tabulated family: its generator plus the knot found at each index."""
    family: FamilyGenerator
    members: Dict[int, str] = field(default_factory=dict)
    parent: Optional[str] = None
    aka: Optional[str] = None

    @property
    def primary(self) -> Slope:
        return self.family.primary

    @property
    def kind(self) -> KnotKind:
        return self.family.kind

    def secondary(self, n: int) -> Slope:
        return self.family.secondary(n)

    def is_exceptional_member(self, n: int) -> bool:
        return exceptional(self.secondary(n))

    def __str__(self) -> str:
        return str(self.family)


def file_checksum(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            digest.update(chunk)
    return digest.hexdigest()


def load_checksums(path: Optional[Path] = None) -> Dict[str, str]:
    path = Path(path) if path is not None else FillConfig.CHECKSUMS_PATH
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
    except FileNotFoundError:
        print(f"Warning: checksum manifest '{path}' not found. Skipping checks.")
        return {}
    except yaml.YAMLError as e:
        raise DatasetCorrupt(f"checksum manifest '{path}' is not valid YAML: {e}")
    return {str(name): str(value) for name, value in data.get('sha256', {}).items()}


def verify_checksum(path: Path, checksums: Optional[Dict[str, str]] = None) -> None:
    """
    Raises:
        DatasetCorrupt: If the file's sha256 differs from the manifest entry.
    """
    if checksums is None:
        checksums = load_checksums()
    expected = checksums.get(path.name)
    if expected is None:
        return
    actual = file_checksum(path)
    if actual != expected:
        raise DatasetCorrupt(f"{path.name}: sha256 {actual} does not match manifest {expected}")


def _parse_cf(text: str) -> Tuple[int, ...]:
    return tuple(int(v) for v in text.strip().strip('[]').split(',') if v.strip())


def parse_census_row(record: Dict[str, str]) -> CensusRow:
    """
    Raises:
        DatasetCorrupt: If a field does not parse.
    """
    try:
        return CensusRow(
            knot=record['knot'],
            snappea=record['snappea'],
            kind=KnotKind(record['type']),
            rs=Slope(int(record['r']), int(record['s'])),
            tu=Slope(int(record['t']), int(record['u'])),
            cf_rs=_parse_cf(record['cf_rs']),
            cf_tu=_parse_cf(record['cf_tu']),
            norm_rs=int(record['norm_rs']),
            norm_tu=int(record['norm_tu']),
            seed=parse_seed_id(record['seed']),
            counts=(int(record['c1']), int(record['c2']), int(record['c3'])),
            sigma=int(record['sigma']),
        )
    except (KeyError, ValueError, UnknownSeed) as e:
        raise DatasetCorrupt(f"bad census row {record.get('knot', '?')}: {e}")


def load_census(path: Optional[Path] = None, check: Optional[bool] = None) -> List[CensusRow]:
    """
    Every row of the census dataset, in file order.

    Raises:
        DatasetCorrupt: On a checksum mismatch or an unparseable row.
    """
    path = Path(path) if path is not None else FillConfig.CENSUS_PATH
    if FillConfig.VERIFY_CHECKSUMS if check is None else check:
        verify_checksum(path)
    with open(path, 'r', newline='') as f:
        return [parse_census_row(record) for record in csv.DictReader(f)]


def _pair(value, what: str) -> Tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2:
        raise DatasetCorrupt(f"{what} should be a two-element list, got {value!r}")
    return (int(value[0]), int(value[1]))


def parse_family(entry: dict) -> FamilyRow:
    """
    Raises:
        DatasetCorrupt: If the entry is missing fields or does not parse.
    """
    try:
        primary = Slope.parse(str(entry['primary']))
        kind = KnotKind(entry['type'])
        t0, t1 = _pair(entry['t'], 't')
        u0, u1 = _pair(entry['u'], 'u')
        edges = entry.get('nine_edges')
        family = FamilyGenerator(
            primary=primary,
            kind=kind,
            generator=(t0, t1, u0, u1),
            breadth=entry.get('breadth'),
            nine_edges=_pair(edges, 'nine_edges') if edges is not None else None,
        )
        members = {int(n): str(label) for n, label in (entry.get('members') or {}).items()}
    except (KeyError, ValueError, SlopeParseError) as e:
        raise DatasetCorrupt(f"bad family entry {entry.get('primary', '?')}: {e}")
    return FamilyRow(family, members, entry.get('parent'), entry.get('aka'))


def load_families(path: Optional[Path] = None, check: Optional[bool] = None) -> List[FamilyRow]:
    """
    Raises:
        DatasetCorrupt: On a checksum mismatch or a malformed entry.
    """
    path = Path(path) if path is not None else FillConfig.FAMILIES_PATH
    if FillConfig.VERIFY_CHECKSUMS if check is None else check:
        verify_checksum(path)
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise DatasetCorrupt(f"'{path}' is not valid YAML: {e}")
    return [parse_family(entry) for entry in data.get('families', [])]


@lru_cache(maxsize=None)
def _census_index() -> Dict[str, CensusRow]:
    return {row.knot: row for row in load_census()}


def census_row(name: str) -> CensusRow:
    """
    Raises:
        KeyError: If no census row has this knot name.
    """
    try:
        return _census_index()[name]
    except KeyError:
        raise KeyError(f"no census row named '{name}'") from None


@lru_cache(maxsize=None)
def _families() -> Tuple[FamilyRow, ...]:
    return tuple(load_families())


def family_by_primary(primary: Slope, kind: Optional[KnotKind] = None) -> FamilyRow:
    """
    The tabulated family with this primary slope; `kind` picks between the
    families that share one.

    Raises:
        UnknownFamily: If no family matches.
    """
    found = [f for f in _families() if f.primary == primary and (kind is None or f.kind is kind)]
    if not found:
        suffix = f" and type {kind}" if kind is not None else ""
        raise UnknownFamily(f"no family with primary slope {primary}{suffix}")
    return found[0]


def complexity_bound(primary: Slope, kind: KnotKind, index: int) -> int:
    """
    Predicted tetrahedra for member `index` of the tabulated family with this
    primary slope and type. j steps past the nine-tetrahedron edges this is
    9 + j.

    Raises:
        UnknownFamily: If no tabulated family matches.
        NotAKnotFilling: If the member is not a knot filling.
    """
    return predicted_total(family_by_primary(primary, kind).family, index)

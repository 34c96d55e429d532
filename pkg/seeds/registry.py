"""
Seed registry: the six seed triangulations of the magic manifold by id.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Tuple

from farey import INFINITY, BoundaryClass, Slope
from layered import BoundaryFace
from triangulation import Triangulation, import_gluing_table

from . import tables
from .boundaries import (Boundary, Layout, OneVertexLayout, PermissibleLayout,
                         close_boundaries, resolve_boundaries)


class UnknownSeed(LookupError):
    """Raised when a seed id is not registered."""


class SeedId(Enum):
    T1 = 'T1'
    T2 = 'T2'
    T2P = 'T2p'
    T3 = 'T3'
    T4HAT = 'T4hat'
    T5HAT = 'T5hat'

    @property
    def short_name(self) -> str:
        """CLI spelling: T4h and T5h for the hatted seeds."""
        return {SeedId.T4HAT: 'T4h', SeedId.T5HAT: 'T5h'}.get(self, self.value)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SeedTriangulation:
    """A seed core with its two open boundaries."""
    id: SeedId
    core: Triangulation
    boundary1: Boundary
    boundary2: Boundary

    @property
    def size(self) -> int:
        return self.core.size

    @property
    def classes(self) -> Tuple[BoundaryClass, BoundaryClass]:
        return (self.boundary1.cls, self.boundary2.cls)

    def boundaries(self) -> Tuple[Boundary, Boundary]:
        return (self.boundary1, self.boundary2)

    def closed(self) -> Triangulation:
        """The core with a cusp on each boundary: an ideal triangulation of M3."""
        return close_boundaries(self.core, self.boundaries())


@dataclass(frozen=True)
class SeedDefinition:
    """
    How to build a seed: its core table, where its boundaries sit, and census
    knots (first slope on the first layout) whose fillings pin the layout down.
    """
    id: SeedId
    table: str
    layouts: Tuple[Layout, Layout]
    swap: bool = False
    knots: Tuple[Tuple[Slope, Slope], ...] = ()

    @property
    def core_size(self) -> int:
        return import_gluing_table(self.table).size

    @property
    def classes(self) -> Tuple[BoundaryClass, BoundaryClass]:
        first, second = (layout.cls for layout in self.layouts)
        return (second, first) if self.swap else (first, second)

    def build(self) -> SeedTriangulation:
        """
        Raises:
            BoundaryMismatch: If the layouts cannot be resolved.
        """
        core = import_gluing_table(self.table)
        b1, b2 = resolve_boundaries(core, self.layouts, self.knots)
        if self.swap:
            b1, b2 = b2, b1
        return SeedTriangulation(self.id, core, b1, b2)


def _face(tet: int, *roles: int) -> BoundaryFace:
    return BoundaryFace(tet, tuple(roles))


def _slopes(*values) -> Tuple[Slope, Slope, Slope]:
    return tuple(INFINITY if v is None else Slope(v, 1) for v in values)


def _knots(*pairs) -> Tuple[Tuple[Slope, Slope], ...]:
    return tuple((Slope.parse(a), Slope.parse(b)) for a, b in pairs)


_P = BoundaryClass.P
_R = BoundaryClass.R
_T2_LAYOUTS = (
    OneVertexLayout(_face(0, 0, 2, 3), 1, 1, _slopes(-2, -3, None), BoundaryClass.Q, (0, 2, 3)),
    OneVertexLayout(_face(0, 1, 2, 3), 1, 0, _slopes(-2, -1, None), _P, (1, 2, 3)),
)
# K4_4
_T2_KNOTS = _knots(('-5/2', '-1/3'))

# The red edge, shared by both R boundaries of T3, is slot 0.
DEFAULT_SEEDS = (
    SeedDefinition(SeedId.T1, tables.T1_CORE, (
        OneVertexLayout(_face(0, 0, 2, 3), 1, 1, _slopes(-2, None, -1), _P, (0, 2, 3)),
        OneVertexLayout(_face(0, 1, 3, 2), 1, 0, _slopes(-2, None, -1), _P, (1, 3, 2)),
    ), knots=_knots(('-1/2', '-3/2'))),
    SeedDefinition(SeedId.T2, tables.T2_CORE, _T2_LAYOUTS, knots=_T2_KNOTS),
    SeedDefinition(SeedId.T2P, tables.T2_CORE, _T2_LAYOUTS, swap=True, knots=_T2_KNOTS),
    SeedDefinition(SeedId.T3, tables.T3_CORE, (
        OneVertexLayout(_face(3, 1, 2, 3), 4, 0, _slopes(None, 0, 1), _R),
        OneVertexLayout(_face(0, 1, 2, 3), 1, 0, _slopes(None, 0, 1), _R),
    ), knots=_knots(('3/2', '3/4'), ('2/3', '4/3'), ('1/2', '3/2'))),
    SeedDefinition(SeedId.T4HAT, tables.T4HAT_CORE, (
        PermissibleLayout(((0, 1), (1, 2), (0, 2), (1, 1)), BoundaryClass.VHAT, (3, 0, 2)),
        OneVertexLayout(_face(0, 1, 2, 3), 1, 0, _slopes(None, 0, 1), _R),
    ), knots=_knots(('1', '2'), ('1', '3/2'), ('1', '2/3'), ('3', '2/5'))),
    SeedDefinition(SeedId.T5HAT, tables.T5HAT_CORE, (
        PermissibleLayout(((1, 3), (1, 2), (0, 2), (0, 3)), BoundaryClass.UHAT),
        OneVertexLayout(_face(0, 1, 2, 3), 1, 0, _slopes(None, 0, -1), BoundaryClass.RP),
    ), knots=_knots(('-4', '-1/5'), ('-5', '-1/4'))),
)

_ALIASES = {'t4h': 't4hat', 't5h': 't5hat', "t2'": 't2p'}


class SeedRegistry:
    """Registry for seed triangulations."""

    def __init__(self):
        self._seeds: Dict[str, SeedDefinition] = {}
        self._register_default_seeds()

    def register(self, definition: SeedDefinition) -> None:
        """Register a seed definition under its id."""
        self._seeds[definition.id.value] = definition

    def definition(self, name) -> SeedDefinition:
        """
        Look a seed up by id or name. Case-insensitive; T4h and T5h are accepted.

        Raises:
            UnknownSeed: If nothing matches.
        """
        if isinstance(name, SeedId):
            name = name.value
        key = name.strip().lower()
        key = _ALIASES.get(key, key)
        for seed_name, definition in self._seeds.items():
            if seed_name.lower() == key:
                return definition
        raise UnknownSeed(f"unknown seed '{name}'; expected one of {', '.join(self.list_seeds())}")

    def get(self, name) -> SeedTriangulation:
        """Build (once) and return the seed triangulation."""
        return _build(self.definition(name))

    def list_seeds(self) -> List[str]:
        """List all registered seed ids."""
        return list(self._seeds.keys())

    def _register_default_seeds(self) -> None:
        for definition in DEFAULT_SEEDS:
            self.register(definition)


@lru_cache(maxsize=None)
def _build(definition: SeedDefinition) -> SeedTriangulation:
    return definition.build()


# Global registry instance
_registry = SeedRegistry()


def parse_seed_id(name) -> SeedId:
    """
    Raises:
        UnknownSeed: If `name` is not a seed id or alias.
    """
    return _registry.definition(name).id


def build_seed(seed_id) -> SeedTriangulation:
    """The seed's core and boundary descriptors."""
    return _registry.get(seed_id)


def closed_seed(seed_id) -> Triangulation:
    """The seed with cusps attached: a full ideal triangulation of M3."""
    return build_seed(seed_id).closed()


def list_seeds() -> List[str]:
    """List all registered seed ids."""
    return _registry.list_seeds()


def t1_table() -> Triangulation:
    """The six-tetrahedron closed T1 as published."""
    return import_gluing_table(tables.T1_TABLE)


def seed_definition(seed_id) -> SeedDefinition:
    """The definition behind a seed, without building it."""
    return _registry.definition(seed_id)

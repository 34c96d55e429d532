"""
Choosing a seed and an assignment of slopes to its boundaries.

Every seed is tried with both assignments. A plan is admissible when each
boundary can realise its slope; the cheapest admissible plan wins, ties going
to the earlier seed and then to the direct assignment.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from farey import (BoundaryClass, Slope, UnrealizableSlope, chain_tet_count,
                   lst_tet_count)
from seeds import SeedId, parse_seed_id, seed_definition

from .classify import KnotType, NotAKnotFilling, classify_pair

SEED_ORDER = (SeedId.T1, SeedId.T2, SeedId.T2P, SeedId.T3, SeedId.T4HAT, SeedId.T5HAT)


@dataclass(frozen=True)
class FillingPlan:
    """A seed and the slope each of its boundaries will be filled with."""
    seed: SeedId
    slope1: Slope
    slope2: Slope
    counts: Tuple[int, int, int]
    swapped: bool = False
    knot: Optional[KnotType] = None

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __str__(self) -> str:
        t0, t1, t2 = self.counts
        return f"{self.seed} [{self.slope1}, {self.slope2}] {t0} + {t1} + {t2} = {self.total}"


@lru_cache(maxsize=None)
def _profile(seed: SeedId) -> Tuple[int, Tuple[BoundaryClass, BoundaryClass]]:
    definition = seed_definition(seed)
    return definition.core_size, definition.classes


def boundary_count(cls: BoundaryClass, slope: Slope) -> Optional[int]:
    """
    Tetrahedra needed to fill `slope` on a boundary of this class, or None if
    the boundary cannot take it.

    One-vertex boundaries refuse 1/0 and slopes already in their triple; a Q
    boundary only takes slopes below -2. Permissible boundaries take the
    integer slopes their chain reaches.
    """
    if slope.is_infinite:
        return None
    if cls.is_permissible:
        try:
            return chain_tet_count(cls, slope)
        except UnrealizableSlope:
            return None
    if slope in cls.triple:
        return None
    if cls is BoundaryClass.Q and not slope.value < -2:
        return None
    return lst_tet_count(cls, slope)


def _plan(seed: SeedId, first: Slope, second: Slope, swapped: bool,
          knot: Optional[KnotType]) -> Optional[FillingPlan]:
    size, (cls1, cls2) = _profile(seed)
    c1, c2 = boundary_count(cls1, first), boundary_count(cls2, second)
    if c1 is None or c2 is None:
        return None
    return FillingPlan(seed, first, second, (size, c1, c2), swapped, knot)


def candidate_plans(rs: Slope, tu: Slope,
                    seeds: Sequence[SeedId] = SEED_ORDER) -> List[FillingPlan]:
    """Every admissible plan, cheapest first, ties by seed then assignment."""
    knot = classify_pair(rs, tu)
    plans = []
    for rank, seed in enumerate(seeds):
        for swapped, (first, second) in enumerate(((rs, tu), (tu, rs))):
            plan = _plan(seed, first, second, bool(swapped), knot)
            if plan is not None:
                plans.append((plan.total, SEED_ORDER.index(seed), swapped, plan))
    return [entry[-1] for entry in sorted(plans, key=lambda e: e[:3])]


def plan_filling(rs: Slope, tu: Slope, seed=None) -> FillingPlan:
    """
    The cheapest plan for the knot filling (rs, tu).

    Args:
        seed: Restrict to one seed (id or name); None tries them all.

    Raises:
        NotAKnotFilling: If (rs, tu) is not a knot filling, or no plan exists.
    """
    if classify_pair(rs, tu) is None:
        raise NotAKnotFilling(f"({rs}, {tu}) is not a knot filling of M3")
    seeds = SEED_ORDER if seed is None else (parse_seed_id(seed),)
    plans = candidate_plans(rs, tu, seeds)
    if not plans:
        raise NotAKnotFilling(f"no seed can realise ({rs}, {tu})")
    return plans[0]

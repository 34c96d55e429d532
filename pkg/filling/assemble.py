"""
Carrying out a filling plan: layer onto the seed core and fold it shut.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from farey import Slope
from layered import BoundaryMismatch, fill_boundary
from seeds import build_seed
from triangulation import (EdgeNotDegreeThree, Triangulation, TriangulationBuilder,
                           degree_three_edges, pachner_32)

from .planner import FillingPlan, plan_filling


@dataclass(frozen=True)
class FillingResult:
    """The triangulation a plan produced and what each part cost."""
    plan: FillingPlan
    triangulation: Triangulation
    counts: Tuple[int, int, int]
    killed: Tuple[Slope, Slope]

    @property
    def total(self) -> int:
        return sum(self.counts)


def execute_plan(plan: FillingPlan) -> FillingResult:
    """
    Build the triangulation for a plan.

    Raises:
        BoundaryMismatch: If the build disagrees with the plan's counts or slopes.
    """
    seed = build_seed(plan.seed)
    builder = TriangulationBuilder(seed.core)
    first = fill_boundary(builder, seed.boundary1, plan.slope1)
    second = fill_boundary(builder, seed.boundary2, plan.slope2)
    counts = (seed.size, first.tetrahedra, second.tetrahedra)
    if counts != plan.counts:
        raise BoundaryMismatch(f"built {counts} tetrahedra, planned {plan.counts}")
    killed = (first.killed, second.killed)
    if killed != (plan.slope1, plan.slope2):
        raise BoundaryMismatch(f"filled {killed}, planned ({plan.slope1}, {plan.slope2})")
    return FillingResult(plan, builder.freeze(), counts, killed)


def fill(rs: Slope, tu: Slope, seed=None) -> FillingResult:
    """
    Triangulate the knot complement M3(rs, tu).

    Raises:
        NotAKnotFilling: If (rs, tu) is not a knot filling.
    """
    return execute_plan(plan_filling(rs, tu, seed))


def minimal_figure_eight(edge: Optional[int] = None) -> Tuple[FillingResult, Triangulation]:
    """
    The three-tetrahedron filling M3(1, 2) and the two-tetrahedron
    triangulation a 3-2 move makes of it.

    Raises:
        EdgeNotDegreeThree: If the filling has no degree-three edge to remove.
    """
    result = fill(Slope(1, 1), Slope(2, 1))
    if edge is None:
        edges = degree_three_edges(result.triangulation)
        if not edges:
            raise EdgeNotDegreeThree("the filling has no degree-three edge")
        edge = edges[0]
    return result, pachner_32(result.triangulation, edge)

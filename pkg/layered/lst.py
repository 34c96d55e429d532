"""
Layered solid tori over one-vertex torus boundaries.
"""

from dataclasses import dataclass
from typing import Tuple

from farey import (FareyPath, InfiniteSlope, Slope, UnrealizableSlope,
                   farey_path)
from triangulation import TriangulationBuilder

from .boundary import BoundaryMismatch, OneVertexBoundary, require_open


@dataclass(frozen=True)
class LayeringResult:
    """Outcome of closing one boundary: tetrahedra added and the slope killed."""
    tetrahedra: int
    killed: Slope
    triples: Tuple[frozenset, ...] = ()


def build_lst(builder: TriangulationBuilder, boundary: OneVertexBoundary,
              filling: Slope) -> LayeringResult:
    """
    Layer tetrahedra along the Farey path from the boundary's triple to
    `filling`, then fold the last two faces shut.

    Every step but the last adds one tetrahedron. The last step is the fold,
    holding fixed the edge whose slope the path leaves last, so `filling`
    bounds the meridian disc.

    A slope already in the triple is refused: folding with that edge held
    fixed would kill its flip instead, and no layering reaches it.

    Raises:
        InfiniteSlope: If filling is 1/0.
        UnrealizableSlope: If filling is an edge slope of the boundary.
    """
    if filling.is_infinite:
        raise InfiniteSlope("cannot layer a solid torus to kill 1/0")
    if filling in boundary.triple:
        raise UnrealizableSlope(
            f"{filling} is an edge slope of {boundary}; a fold there kills "
            f"{boundary.triple.flipped(filling)}")
    path: FareyPath = farey_path(boundary.triple, filling)

    seen = [boundary.triple.slopes]
    for step, expected in zip(path.steps[:-1], path.triples()[1:]):
        boundary = boundary.flip(builder, boundary.slot_of(step.leave))
        if boundary.triple != expected:
            raise BoundaryMismatch(f"layering reached {boundary.triple}, expected {expected}")
        seen.append(boundary.triple.slopes)
    killed = boundary.fold(builder, boundary.slot_of(path.steps[-1].leave))
    return LayeringResult(len(path) - 1, killed, tuple(seen))


def attach_standard_cusp(builder: TriangulationBuilder,
                         boundary: OneVertexBoundary) -> int:
    """
    Cone the boundary off with the two-tetrahedron standard cusp.

    Returns:
        Index of the cusp's X tetrahedron; Y follows it.

    Raises:
        OpenBoundary: If either boundary face is already glued.
    """
    from seeds.cusps import standard_cusp

    require_open(builder, boundary.f)
    require_open(builder, boundary.g)
    x_tet = builder.add_triangulation(standard_cusp(), prefix='cusp ')
    for cusp_tet, face in ((x_tet, boundary.f), (x_tet + 1, boundary.g)):
        r = face.roles
        builder.glue_map(cusp_tet, 0, face.tet, {1: r[0], 2: r[1], 3: r[2]})
    return x_tet

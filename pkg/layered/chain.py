"""
Layered chains over permissible boundaries.
"""

from farey import Slope
from triangulation import TriangulationBuilder

from .boundary import BoundaryMismatch, PermissibleBoundary, require_open
from .lst import LayeringResult, build_lst


def chain_shift(boundary: PermissibleBoundary, filling: Slope) -> int:
    """
    Signed number of layerings before the closing folds: filling is
    +-(K0 + j * A(1->2)) with K0 the pure fold vector.

    Raises:
        UnrealizableSlope: If filling is not of that form.
    """
    return -boundary.cls.permissible.shift_for(filling)


def build_chain(builder: TriangulationBuilder, boundary: PermissibleBoundary,
                filling: Slope) -> LayeringResult:
    """
    Layer |j| tetrahedra over the A/B diagonal, then fold B onto C and A onto D.

    Raises:
        UnrealizableSlope: If filling is not realisable on this boundary.
    """
    j = chain_shift(boundary, filling)
    step = 1 if j > 0 else -1
    for _ in range(abs(j)):
        boundary = boundary.shift(builder, step)
    boundary.close(builder)
    killed = boundary.killed_slope(j)
    if killed != filling:
        raise BoundaryMismatch(f"chain killed {killed}, wanted {filling}")
    return LayeringResult(abs(j), killed)


def attach_permissible_cusp(builder: TriangulationBuilder,
                            boundary: PermissibleBoundary) -> int:
    """
    Cone the boundary off with the four-tetrahedron permissible cusp.

    Returns:
        Index of the cusp's A tetrahedron; B, C, D follow it.

    Raises:
        OpenBoundary: If a boundary face is already glued.
    """
    from seeds.cusps import permissible_cusp

    for face in boundary.faces:
        require_open(builder, face)
    a_tet = builder.add_triangulation(permissible_cusp(), prefix='cusp ')
    for i, face in enumerate(boundary.faces):
        r = face.roles
        builder.glue_map(a_tet + i, 0, face.tet, {1: r[0], 2: r[1], 3: r[2]})
    return a_tet


def fill_boundary(builder: TriangulationBuilder, boundary, filling: Slope) -> LayeringResult:
    """Close either kind of boundary so that `filling` bounds a disc."""
    if isinstance(boundary, PermissibleBoundary):
        return build_chain(builder, boundary, filling)
    return build_lst(builder, boundary, filling)

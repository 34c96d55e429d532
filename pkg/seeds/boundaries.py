"""
Boundary layouts of the seed cores and the search that fixes their vertex
orders.

A core only shows where its boundary faces are. Which vertex plays which role
is settled by coning the boundaries off: the right orders give a valid,
orientable triangulation whose three vertex links are tori. Coning alone
cannot see how the edge slopes sit, so each seed also names a few census
knots: filling them must give H1 = Z. The search tries orders in a fixed
sequence and returns the first that passes both, so the result is
deterministic.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from farey import BoundaryClass, Slope
from layered import (BoundaryFace, BoundaryMismatch, OneVertexBoundary,
                     PermissibleBoundary, attach_permissible_cusp,
                     attach_standard_cusp, face_orderings, fill_boundary)
from triangulation import (Triangulation, TriangulationBuilder, first_homology,
                           orientable, validate, vertex_links)

from .cusps import permissible_cusp

Boundary = Union[OneVertexBoundary, PermissibleBoundary]


@dataclass(frozen=True)
class OneVertexLayout:
    """A one-vertex boundary: F with its roles, G's face, and the edge slopes."""
    f: BoundaryFace
    g_tet: int
    g_face: int
    slopes: Tuple[Slope, Slope, Slope]
    cls: BoundaryClass
    g_roles: Optional[Tuple[int, int, int]] = None

    def candidates(self) -> List[OneVertexBoundary]:
        """All six orders on G, any order given by the tables tried first."""
        orders = face_orderings(self.g_face)
        if self.g_roles:
            orders = [tuple(self.g_roles)] + [r for r in orders if r != tuple(self.g_roles)]
        return [OneVertexBoundary(self.f, BoundaryFace(self.g_tet, tuple(r)),
                                  self.slopes, self.cls) for r in orders]


@dataclass(frozen=True)
class PermissibleLayout:
    """A permissible boundary: the (tet, face) of A, B, C, D and optionally A's roles."""
    faces: Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int], Tuple[int, int]]
    cls: BoundaryClass
    a_roles: Optional[Tuple[int, int, int]] = None


Layout = Union[OneVertexLayout, PermissibleLayout]


def _sane(t: Triangulation) -> bool:
    return not validate(t) and bool(orientable(t))


def close_boundaries(core: Triangulation, boundaries: Sequence[Boundary]) -> Triangulation:
    """Attach the matching cusp to every boundary of `core`."""
    builder = TriangulationBuilder(core)
    for boundary in boundaries:
        if isinstance(boundary, PermissibleBoundary):
            attach_permissible_cusp(builder, boundary)
        else:
            attach_standard_cusp(builder, boundary)
    return builder.freeze()


def _partial_permissible(core: Triangulation, layout: PermissibleLayout,
                         chosen: Sequence[Tuple[int, Tuple[int, int, int]]]) -> Triangulation:
    builder = TriangulationBuilder(core)
    offset = builder.add_triangulation(permissible_cusp(), prefix='cusp ')
    for index, roles in chosen:
        tet = layout.faces[index][0]
        builder.glue_map(offset + index, 0, tet, {1: roles[0], 2: roles[1], 3: roles[2]})
    return builder.freeze()


# A first, then its neighbours in the cusp.
_ROLE_ORDER = (0, 3, 1, 2)


def permissible_candidates(core: Triangulation,
                           layout: PermissibleLayout) -> Iterator[PermissibleBoundary]:
    """Role assignments whose partial coning stays valid and orientable."""
    def extend(chosen):
        if len(chosen) == 4:
            roles = dict(chosen)
            faces = [BoundaryFace(layout.faces[i][0], roles[i]) for i in range(4)]
            yield PermissibleBoundary(*faces, layout.cls)
            return
        index = _ROLE_ORDER[len(chosen)]
        if index == 0 and layout.a_roles is not None:
            orders = [layout.a_roles]
        else:
            orders = face_orderings(layout.faces[index][1])
        for roles in orders:
            trial = chosen + [(index, tuple(roles))]
            if _sane(_partial_permissible(core, layout, trial)):
                yield from extend(trial)

    yield from extend([])


def one_vertex_candidates(core: Triangulation,
                          layout: OneVertexLayout) -> Iterator[OneVertexBoundary]:
    """G orders whose coning alone is valid and orientable, tables order first."""
    for boundary in layout.candidates():
        if _sane(close_boundaries(core, [boundary])):
            yield boundary


def _candidates(core: Triangulation, layout: Layout) -> List[Boundary]:
    if isinstance(layout, PermissibleLayout):
        return list(permissible_candidates(core, layout))
    return list(one_vertex_candidates(core, layout))


def fills_knots(core: Triangulation, boundaries: Sequence[Boundary],
                knots: Sequence[Tuple[Slope, Slope]]) -> bool:
    """
    True if filling `core` with each pair of slopes, first slope on the first
    boundary, gives a closed-up triangulation with H1 = Z. A wrong edge slope
    labelling or boundary orientation shows up here as torsion.
    """
    for knot in knots:
        builder = TriangulationBuilder(core)
        try:
            for boundary, slope in zip(boundaries, knot):
                fill_boundary(builder, boundary, slope)
        except ValueError:
            return False
        filled = builder.freeze()
        if not _sane(filled) or not first_homology(filled).is_z():
            return False
    return True


def resolve_boundaries(core: Triangulation, layouts: Sequence[Layout],
                       knots: Sequence[Tuple[Slope, Slope]] = ()) -> Tuple[Boundary, ...]:
    """
    Fix the vertex orders of every boundary so the coned-off core is an ideal
    triangulation with one torus cusp per boundary plus the core's own, and
    every pair in `knots` fills to a knot complement.

    Raises:
        BoundaryMismatch: If no combination of orders works.
    """
    first, second = (_candidates(core, layout) for layout in layouts)
    for b1 in first:
        for b2 in second:
            closed = close_boundaries(core, [b1, b2])
            if not _sane(closed):
                continue
            links = vertex_links(closed)
            if len(links) != 3 or not all(link.is_torus for link in links):
                continue
            if fills_knots(core, (b1, b2), knots):
                return b1, b2
    raise BoundaryMismatch("no vertex orders close the core into three torus cusps "
                           "and fill its calibration knots")

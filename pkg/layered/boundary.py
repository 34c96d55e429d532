"""
Open boundaries of a partial triangulation, tracked face by face.

A one-vertex torus boundary is two open faces F and G. F's vertices are listed
as (x0, x1, x2) and G's as (y0, y1, y2) so that the edge opposite x_k is the
same torus edge as the edge opposite y_k, with x_(k+1) ~ y_(k+2) and
x_(k+2) ~ y_(k+1). slopes[k] is the slope of that edge.

A permissible boundary is four open faces A, B, C, D whose roles (1, 2, 3)
follow the permissible cusp: A12~D21, A13~B31, A23~B32, B12~C21, C13~D31,
C23~D32.
"""

from dataclasses import dataclass, replace
from itertools import permutations
from typing import List, Tuple

from farey import BoundaryClass, FareyTriple, Slope
from triangulation import OpenBoundary, TriangulationBuilder


class BoundaryMismatch(ValueError):
    """Raised when open faces do not form the boundary they are said to form."""


@dataclass(frozen=True)
class BoundaryFace:
    """An open face named by the vertices that play roles 1, 2 and 3."""
    tet: int
    roles: Tuple[int, int, int]

    @property
    def face(self) -> int:
        return ({0, 1, 2, 3} - set(self.roles)).pop()

    def moved(self, offset: int) -> 'BoundaryFace':
        return BoundaryFace(self.tet + offset, self.roles)


def face_orderings(face: int) -> List[Tuple[int, int, int]]:
    """The six ways to list the vertices of a face as roles 1, 2, 3."""
    return list(permutations([v for v in range(4) if v != face]))


def require_open(t, bf: BoundaryFace) -> None:
    """Raise OpenBoundary if the face has already been glued."""
    if t.gluing(bf.tet, bf.face) is not None:
        raise OpenBoundary(f"face {bf.face} of tetrahedron {bf.tet} is not open")


@dataclass(frozen=True)
class OneVertexBoundary:
    """Two open faces forming a one-vertex torus, with the slope of each edge."""
    f: BoundaryFace
    g: BoundaryFace
    slopes: Tuple[Slope, Slope, Slope]
    cls: BoundaryClass

    @property
    def triple(self) -> FareyTriple:
        return FareyTriple(frozenset(self.slopes))

    def slot_of(self, s: Slope) -> int:
        """
        Raises:
            BoundaryMismatch: If `s` is not one of the three edge slopes.
        """
        try:
            return self.slopes.index(s)
        except ValueError:
            raise BoundaryMismatch(f"{s} is not an edge slope of {self}") from None

    def rotated(self, k: int) -> 'OneVertexBoundary':
        """Relist so that slot k becomes slot 2."""
        def turn(seq):
            return (seq[(k + 1) % 3], seq[(k + 2) % 3], seq[k])
        return replace(self,
                       f=BoundaryFace(self.f.tet, turn(self.f.roles)),
                       g=BoundaryFace(self.g.tet, turn(self.g.roles)),
                       slopes=turn(self.slopes))

    def moved(self, offset: int) -> 'OneVertexBoundary':
        return replace(self, f=self.f.moved(offset), g=self.g.moved(offset))

    def killed_slope(self, k: int) -> Slope:
        """The slope made trivial by folding with edge k held fixed."""
        return self.triple.flipped(self.slopes[k])

    def flip(self, builder: TriangulationBuilder, k: int) -> 'OneVertexBoundary':
        """
        Layer one tetrahedron over edge k; the new boundary swaps slopes[k]
        for the other diagonal.
        """
        b = self.rotated(k)
        x, y = b.f.roles, b.g.roles
        n = builder.add_tet()
        builder.glue_map(n, 3, b.f.tet, {0: x[0], 1: x[1], 2: x[2]})
        builder.glue_map(n, 2, b.g.tet, {0: y[1], 1: y[0], 3: y[2]})
        new_slope = b.triple.flipped(b.slopes[2])
        return replace(b, f=BoundaryFace(n, (2, 3, 0)), g=BoundaryFace(n, (3, 2, 1)),
                       slopes=(b.slopes[0], b.slopes[1], new_slope))

    def fold(self, builder: TriangulationBuilder, k: int) -> Slope:
        """Glue F to G holding edge k fixed; returns the slope killed."""
        b = self.rotated(k)
        x, y = b.f.roles, b.g.roles
        builder.glue_map(b.f.tet, b.f.face, b.g.tet, {x[0]: y[1], x[1]: y[0], x[2]: y[2]})
        return b.killed_slope(2)

    def __str__(self) -> str:
        return (f"{self.cls} boundary on {self.f.tet}{self.f.roles}/"
                f"{self.g.tet}{self.g.roles}")


@dataclass(frozen=True)
class PermissibleBoundary:
    """Four open faces with the roles of the permissible cusp's faces A-D."""
    a: BoundaryFace
    b: BoundaryFace
    c: BoundaryFace
    d: BoundaryFace
    cls: BoundaryClass

    @property
    def faces(self) -> Tuple[BoundaryFace, BoundaryFace, BoundaryFace, BoundaryFace]:
        return (self.a, self.b, self.c, self.d)

    def moved(self, offset: int) -> 'PermissibleBoundary':
        return replace(self, a=self.a.moved(offset), b=self.b.moved(offset),
                       c=self.c.moved(offset), d=self.d.moved(offset))

    def alpha_edge(self) -> Tuple[int, int]:
        """The oriented edge vector A(1->2) in framing coordinates."""
        alpha = self.cls.permissible.alpha
        return (-alpha.p, -alpha.q)

    def pure_fold_vector(self) -> Tuple[int, int]:
        return self.cls.permissible.pure_fold_vector()

    def killed_slope(self, shifts: int = 0) -> Slope:
        """The slope trivialised by closing after `shifts` signed layerings."""
        k1, k2 = self.pure_fold_vector()
        e1, e2 = self.alpha_edge()
        return Slope(k1 + shifts * e1, k2 + shifts * e2)

    def shift(self, builder: TriangulationBuilder, direction: int) -> 'PermissibleBoundary':
        """
        Layer one tetrahedron over A and B. direction +1 moves the slope killed
        by the closing folds by +A(1->2), direction -1 by -A(1->2).
        """
        a, b = self.a.roles, self.b.roles
        n = builder.add_tet()
        if direction > 0:
            builder.glue_map(n, 3, self.a.tet, {0: a[1], 1: a[2], 2: a[0]})
            builder.glue_map(n, 2, self.b.tet, {0: b[2], 1: b[1], 3: b[0]})
            return replace(self, a=BoundaryFace(n, (2, 0, 3)), b=BoundaryFace(n, (3, 1, 2)))
        builder.glue_map(n, 3, self.a.tet, {0: a[0], 1: a[2], 2: a[1]})
        builder.glue_map(n, 2, self.b.tet, {0: b[2], 1: b[0], 3: b[1]})
        return replace(self, a=BoundaryFace(n, (0, 2, 3)), b=BoundaryFace(n, (1, 3, 2)))

    def close(self, builder: TriangulationBuilder) -> None:
        """
        Seal the boundary with two folds and no new tetrahedra: B onto C,
        then A onto D, each swapping roles 1 and 2. Afterwards the slope in
        `killed_slope(shifts)` bounds a disc, where shifts counts the signed
        `shift` calls made before closing.
        """
        a, b, c, d = (f.roles for f in self.faces)
        builder.glue_map(self.b.tet, self.b.face, self.c.tet,
                         {b[0]: c[1], b[1]: c[0], b[2]: c[2]})
        builder.glue_map(self.a.tet, self.a.face, self.d.tet,
                         {a[0]: d[1], a[1]: d[0], a[2]: d[2]})

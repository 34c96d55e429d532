"""
Generalised ideal triangulations: tetrahedra glued face to face.

Face i of a tetrahedron is the face omitting vertex i. A gluing of face f of
tetrahedron t carries a permutation of {0,1,2,3} mapping t's vertex labels to
the target's; the omitted vertex f goes to the omitted vertex of the target face.
"""

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Perm = Tuple[int, int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)
ALL_PERMS: Tuple[Perm, ...] = tuple(sorted(permutations(range(4))))
PERM_INDEX: Dict[Perm, int] = {p: i for i, p in enumerate(ALL_PERMS)}

# Table columns in print order and the face each one names.
FACE_COLUMNS = ('012', '013', '023', '123')
COLUMN_FACES = (3, 2, 1, 0)
EDGE_VERTICES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {pair: i for i, pair in enumerate(EDGE_VERTICES)}


class InvalidTriangulation(ValueError):
    """Raised when an operation needs a valid triangulation and gets a broken one."""


class OpenBoundary(ValueError):
    """Raised when an operation needs every face glued."""


def face_vertices(face: int) -> Tuple[int, int, int]:
    """The three vertices of a face, in increasing order."""
    return tuple(v for v in range(4) if v != face)


def perm_inverse(p: Perm) -> Perm:
    inverse = [0] * 4
    for i, image in enumerate(p):
        inverse[image] = i
    return tuple(inverse)


def perm_compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[q[i]] for i in range(4))


def perm_sign(p: Perm) -> int:
    sign = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                sign = -sign
    return sign


def is_permutation(p: Sequence[int]) -> bool:
    return len(p) == 4 and sorted(p) == [0, 1, 2, 3]


def face_perm(face: int, images: Sequence[int]) -> Perm:
    """
    Extend the images of a face's vertices to a full permutation.

    Args:
        face: The face being glued, named by its omitted vertex.
        images: Targets of the face's vertices in increasing order, the
            "abc" of the table notation X(abc).
    """
    perm = [0] * 4
    for v, image in zip(face_vertices(face), images):
        perm[v] = image
    perm[face] = ({0, 1, 2, 3} - set(images)).pop()
    return tuple(perm)


def perm_from_map(mapping: Dict[int, int]) -> Perm:
    """Complete a partial injective map of three vertices to a permutation."""
    perm = [None] * 4
    for v, image in mapping.items():
        perm[v] = image
    if len(mapping) == 3:
        missing_v = next(v for v in range(4) if perm[v] is None)
        perm[missing_v] = ({0, 1, 2, 3} - set(mapping.values())).pop()
    return tuple(perm)


@dataclass(frozen=True)
class FaceGluing:
    """Gluing of one face to a face of `target_tet` via `perm`."""
    target_tet: int
    perm: Perm

    def target_face(self, face: int) -> int:
        return self.perm[face]


@dataclass(frozen=True)
class EdgeEmbedding:
    """
    One appearance of an edge class: tetrahedron, vertices (start, end) and
    the face the walk around the edge leaves through.
    """
    tet: int
    start: int
    end: int
    exit_face: int


@dataclass(frozen=True)
class EdgeClass:
    """An equivalence class of tetrahedron edges under the face gluings."""
    index: int
    embeddings: Tuple[EdgeEmbedding, ...]
    boundary: bool

    @property
    def degree(self) -> int:
        return len(self.embeddings)


class Triangulation:
    """Immutable set of tetrahedra with face gluings; None marks a boundary face."""

    def __init__(self, gluings: Sequence[Sequence[Optional[FaceGluing]]],
                 labels: Optional[Sequence[str]] = None):
        self._gluings: Tuple[Tuple[Optional[FaceGluing], ...], ...] = tuple(
            tuple(row) for row in gluings)
        self.labels: Tuple[str, ...] = tuple(labels) if labels else tuple(
            str(i) for i in range(len(self._gluings)))
        self._edge_classes: Optional[List[EdgeClass]] = None

    def __len__(self) -> int:
        return len(self._gluings)

    @property
    def size(self) -> int:
        return len(self._gluings)

    def __eq__(self, other) -> bool:
        return isinstance(other, Triangulation) and self._gluings == other._gluings

    def __hash__(self) -> int:
        return hash(self._gluings)

    def __repr__(self) -> str:
        return f"Triangulation({self.size} tetrahedra)"

    def gluing(self, tet: int, face: int) -> Optional[FaceGluing]:
        return self._gluings[tet][face]

    def rows(self) -> Tuple[Tuple[Optional[FaceGluing], ...], ...]:
        return self._gluings

    def open_faces(self) -> List[Tuple[int, int]]:
        return [(t, f) for t in range(self.size) for f in range(4)
                if self._gluings[t][f] is None]

    def is_closed(self) -> bool:
        return not self.open_faces()

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[Tuple[int, str]]]],
                  labels: Optional[Sequence[str]] = None) -> 'Triangulation':
        """
        Build from table rows: four entries per tetrahedron in column order
        012, 013, 023, 123, each (target, "abc") or None for a boundary face.
        """
        gluings = []
        for row in rows:
            faces: List[Optional[FaceGluing]] = [None] * 4
            for column, entry in enumerate(row):
                if entry is None:
                    continue
                target, images = entry
                face = COLUMN_FACES[column]
                faces[face] = FaceGluing(target, face_perm(face, [int(c) for c in images]))
            gluings.append(faces)
        return cls(gluings, labels)

    def edge_classes(self) -> List[EdgeClass]:
        """
        Edge classes in order of first appearance, each with its embeddings
        listed in the order a walk around the edge meets them.
        """
        if self._edge_classes is None:
            self._edge_classes = _compute_edge_classes(self)
        return self._edge_classes

    def relabel(self, tet_order: Sequence[int],
                vertex_perms: Sequence[Perm]) -> 'Triangulation':
        """
        Renumber tetrahedra and their vertices.

        Args:
            tet_order: tet_order[old] is the new index of tetrahedron old.
            vertex_perms: vertex_perms[old] maps old vertex labels to new ones.
        """
        n = self.size
        new_rows: List[List[Optional[FaceGluing]]] = [[None] * 4 for _ in range(n)]
        labels: List[str] = [''] * n
        for old in range(n):
            new = tet_order[old]
            labels[new] = self.labels[old]
            phi = vertex_perms[old]
            phi_inv = perm_inverse(phi)
            for face in range(4):
                g = self._gluings[old][face]
                if g is None:
                    continue
                psi = vertex_perms[g.target_tet]
                new_rows[new][phi[face]] = FaceGluing(
                    tet_order[g.target_tet],
                    perm_compose(psi, perm_compose(g.perm, phi_inv)))
        return Triangulation(new_rows, labels)

    def random_relabel(self, rng: random.Random) -> 'Triangulation':
        """A copy with shuffled tetrahedra and a random vertex order on each."""
        order = list(range(self.size))
        rng.shuffle(order)
        perms = [rng.choice(ALL_PERMS) for _ in range(self.size)]
        return self.relabel(order, perms)


class TriangulationBuilder:
    """Mutable triangulation under construction; `freeze` yields a Triangulation."""

    def __init__(self, base: Optional[Triangulation] = None):
        self._rows: List[List[Optional[FaceGluing]]] = []
        self._labels: List[str] = []
        if base is not None:
            self._rows = [list(row) for row in base.rows()]
            self._labels = list(base.labels)

    @property
    def size(self) -> int:
        return len(self._rows)

    def add_tet(self, label: Optional[str] = None) -> int:
        self._rows.append([None] * 4)
        self._labels.append(label if label is not None else str(len(self._rows) - 1))
        return len(self._rows) - 1

    def add_triangulation(self, other: Triangulation, prefix: str = '') -> int:
        """Copy every tetrahedron of `other` in; returns the index offset."""
        offset = self.size
        for t, row in enumerate(other.rows()):
            self._rows.append([
                None if g is None else FaceGluing(g.target_tet + offset, g.perm)
                for g in row])
            self._labels.append(prefix + other.labels[t])
        return offset

    def gluing(self, tet: int, face: int) -> Optional[FaceGluing]:
        return self._rows[tet][face]

    def glue(self, tet: int, face: int, target: int, perm: Perm) -> None:
        """Glue face `face` of `tet` to face perm[face] of `target`, both ways."""
        if not is_permutation(perm):
            raise InvalidTriangulation(f"{perm} is not a permutation of 0..3")
        target_face = perm[face]
        if tet == target and target_face == face:
            raise InvalidTriangulation(f"face {face} of tetrahedron {tet} glued to itself")
        if self._rows[tet][face] is not None:
            raise InvalidTriangulation(f"face {face} of tetrahedron {tet} is already glued")
        if self._rows[target][target_face] is not None:
            raise InvalidTriangulation(
                f"face {target_face} of tetrahedron {target} is already glued")
        self._rows[tet][face] = FaceGluing(target, tuple(perm))
        self._rows[target][target_face] = FaceGluing(tet, perm_inverse(tuple(perm)))

    def glue_map(self, tet: int, face: int, target: int,
                 mapping: Dict[int, int]) -> None:
        """Glue using the images of the face's three vertices."""
        self.glue(tet, face, target, perm_from_map(mapping))

    def unglue(self, tet: int, face: int) -> None:
        """Free the face and its partner. Open faces are left alone."""
        g = self._rows[tet][face]
        if g is None:
            return
        self._rows[g.target_tet][g.perm[face]] = None
        self._rows[tet][face] = None

    def freeze(self) -> Triangulation:
        return Triangulation(self._rows, self._labels)


def _edge_faces(start: int, end: int) -> Tuple[int, int]:
    """The two faces containing an edge: those omitting its other two vertices."""
    others = [v for v in range(4) if v not in (start, end)]
    return others[0], others[1]


def _compute_edge_classes(t: Triangulation) -> List[EdgeClass]:
    seen = set()
    classes: List[EdgeClass] = []
    for tet in range(t.size):
        for start, end in EDGE_VERTICES:
            if (tet, EDGE_INDEX[(start, end)]) in seen:
                continue
            embeddings, boundary = _walk_edge(t, tet, start, end)
            for e in embeddings:
                seen.add((e.tet, EDGE_INDEX[tuple(sorted((e.start, e.end)))]))
            classes.append(EdgeClass(len(classes), tuple(embeddings), boundary))
    return classes


def _walk_edge(t: Triangulation, tet: int, start: int,
               end: int) -> Tuple[List[EdgeEmbedding], bool]:
    """
    Walk around an edge through its faces. If the walk hits a boundary face it
    restarts from the other side so every embedding is listed once.
    """
    p, q = _edge_faces(start, end)
    forward, closed = _walk_one_way(t, tet, start, end, p, q)
    if closed:
        return forward, False
    backward, _ = _walk_one_way(t, tet, start, end, q, p)
    backward = [e for e in reversed(backward[1:])]
    return backward + forward, True


def _walk_one_way(t: Triangulation, tet: int, start: int, end: int,
                  p: int, q: int) -> Tuple[List[EdgeEmbedding], bool]:
    # State: the edge (a, b) in cur_tet, leaving through the face omitting cp.
    # The step map is invertible, so a walk with no boundary returns to its
    # initial state.
    embeddings = [EdgeEmbedding(tet, start, end, p)]
    state = (tet, start, end, p, q)
    for _ in range(24 * t.size + 1):
        cur_tet, a, b, cp, cq = state
        g = t.gluing(cur_tet, cp)
        if g is None:
            return embeddings, False
        na, nb, np_, nq = g.perm[a], g.perm[b], g.perm[cq], g.perm[cp]
        state = (g.target_tet, na, nb, np_, nq)
        if state == (tet, start, end, p, q):
            return embeddings, True
        embeddings.append(EdgeEmbedding(g.target_tet, na, nb, np_))
    raise InvalidTriangulation("edge walk did not close")

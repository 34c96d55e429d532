"""
Vertex classes and their links.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .core import OpenBoundary, Triangulation, perm_sign
from .validation import require_valid

Corner = Tuple[int, int]


@dataclass(frozen=True)
class VertexLink:
    """The link of one ideal vertex class: a triangulated surface."""
    index: int
    euler_characteristic: int
    orientable: bool
    num_triangles: int
    corners: Tuple[Corner, ...]

    @property
    def is_torus(self) -> bool:
        return self.euler_characteristic == 0 and self.orientable


def vertex_classes(t: Triangulation) -> List[List[Corner]]:
    """Corners (tet, vertex) grouped into classes, in order of first appearance."""
    seen: Dict[Corner, int] = {}
    classes: List[List[Corner]] = []
    for tet in range(t.size):
        for v in range(4):
            if (tet, v) in seen:
                continue
            members = []
            queue = deque([(tet, v)])
            seen[(tet, v)] = len(classes)
            while queue:
                corner = queue.popleft()
                members.append(corner)
                ct, cv = corner
                for face in range(4):
                    if face == cv:
                        continue
                    g = t.gluing(ct, face)
                    if g is None:
                        continue
                    nxt = (g.target_tet, g.perm[cv])
                    if nxt not in seen:
                        seen[nxt] = len(classes)
                        queue.append(nxt)
            classes.append(members)
    return classes


def vertex_links(t: Triangulation) -> List[VertexLink]:
    """
    Euler characteristic and orientability of every vertex link.

    Raises:
        InvalidTriangulation: If the triangulation fails validation.
        OpenBoundary: If any face is unglued.
    """
    require_valid(t)
    if not t.is_closed():
        raise OpenBoundary(f"{len(t.open_faces())} faces are unglued")
    classes = vertex_classes(t)
    class_of = {corner: i for i, members in enumerate(classes) for corner in members}

    # Each edge class contributes one link vertex at each of its two ends.
    link_vertices = [0] * len(classes)
    for edge in t.edge_classes():
        e = edge.embeddings[0]
        link_vertices[class_of[(e.tet, e.start)]] += 1
        link_vertices[class_of[(e.tet, e.end)]] += 1

    links = []
    for i, members in enumerate(classes):
        triangles = len(members)
        edges = 3 * triangles // 2
        chi = link_vertices[i] - edges + triangles
        links.append(VertexLink(i, chi, _link_orientable(t, members),
                                triangles, tuple(members)))
    return links


def _link_orientable(t: Triangulation, members: List[Corner]) -> bool:
    signs: Dict[Corner, int] = {members[0]: 1}
    queue = deque([members[0]])
    while queue:
        tet, v = queue.popleft()
        for face in range(4):
            if face == v:
                continue
            g = t.gluing(tet, face)
            nxt = (g.target_tet, g.perm[v])
            wanted = -perm_sign(g.perm) * signs[(tet, v)]
            if nxt not in signs:
                signs[nxt] = wanted
                queue.append(nxt)
            elif signs[nxt] != wanted:
                return False
    return True


def cusp_count(t: Triangulation) -> int:
    """Number of vertex classes whose link is a torus."""
    return sum(1 for link in vertex_links(t) if link.is_torus)

"""
The 3-2 Pachner move.
"""

from typing import Dict, List, Tuple

from .core import (Triangulation, TriangulationBuilder,
                   perm_from_map)
from .validation import require_valid


class EdgeNotDegreeThree(ValueError):
    """Raised when the chosen edge does not have degree three."""


class SharedTetrahedron(ValueError):
    """Raised when the tetrahedra around the edge are not distinct."""


def pachner_32(t: Triangulation, edge: int) -> Triangulation:
    """
    Replace the three tetrahedra around a degree-3 edge by two tetrahedra
    sharing a triangle.

    The edge runs from a to b with equatorial vertices c0, c1, c2. The new
    tetrahedra are labelled top = (a, c0, c1, c2) and bottom = (b, c0, c1, c2);
    they are appended after the untouched tetrahedra, which keep their order.

    Raises:
        EdgeNotDegreeThree: If the edge class does not have degree 3 or lies
            on the boundary.
        SharedTetrahedron: If a tetrahedron appears twice around the edge.
    """
    require_valid(t)
    classes = t.edge_classes()
    if not 0 <= edge < len(classes):
        raise EdgeNotDegreeThree(f"no edge class {edge}")
    cls = classes[edge]
    if cls.degree != 3 or cls.boundary:
        raise EdgeNotDegreeThree(f"edge class {edge} has degree {cls.degree}")
    tets = [e.tet for e in cls.embeddings]
    if len(set(tets)) != 3:
        raise SharedTetrahedron(f"edge class {edge} meets tetrahedra {tets}")

    # local[i] maps a global label to tetrahedron i's own vertex:
    # 'a', 'b', and equatorial 0..2 with c_i shared with the previous
    # tetrahedron and c_(i+1) with the next.
    local: List[Dict[object, int]] = []
    for i, e in enumerate(cls.embeddings):
        # The exit face omits exit_face and holds `shared`, the vertex met
        # again in the next tetrahedron.
        shared = ({0, 1, 2, 3} - {e.start, e.end, e.exit_face}).pop()
        local.append({'a': e.start, 'b': e.end,
                      i: e.exit_face, (i + 1) % 3: shared})

    kept = [k for k in range(t.size) if k not in tets]
    new_index = {old: new for new, old in enumerate(kept)}
    top, bottom = len(kept), len(kept) + 1
    # Vertex labels in the new tetrahedra.
    slot = {'a': 0, 'b': 0, 0: 1, 1: 2, 2: 3}

    # External faces: old (tet, face) -> (new tet, map old vertex -> new vertex).
    external: Dict[Tuple[int, int], Tuple[int, Dict[int, int]]] = {}
    for i, tet in enumerate(tets):
        lab = local[i]
        opposite = (i + 2) % 3
        for pole, new_tet, drop in (('a', top, 'b'), ('b', bottom, 'a')):
            face = lab[drop]
            mapping = {lab[pole]: slot[pole], lab[i]: slot[i],
                       lab[(i + 1) % 3]: slot[(i + 1) % 3],
                       lab[drop]: slot[opposite]}
            external[(tet, face)] = (new_tet, mapping)

    builder = TriangulationBuilder()
    for old in kept:
        builder.add_tet(t.labels[old])
    builder.add_tet('top')
    builder.add_tet('bottom')

    for old in kept:
        for face in range(4):
            g = t.gluing(old, face)
            if g is None or builder.gluing(new_index[old], face) is not None:
                continue
            if g.target_tet in new_index:
                builder.glue(new_index[old], face, new_index[g.target_tet], g.perm)

    done = set()
    for (tet, face), (new_tet, mapping) in external.items():
        if (tet, face) in done:
            continue
        g = t.gluing(tet, face)
        new_face = mapping[face]
        done.add((tet, face))
        if g is None:
            continue
        partner = (g.target_tet, g.perm[face])
        inverse = {v: k for k, v in mapping.items()}
        if partner in external:
            other_tet, other_map = external[partner]
            images = {u: other_map[g.perm[inverse[u]]] for u in range(4) if u != new_face}
            builder.glue(new_tet, new_face, other_tet, perm_from_map(images))
            done.add(partner)
        else:
            images = {u: g.perm[inverse[u]] for u in range(4) if u != new_face}
            builder.glue(new_tet, new_face, new_index[g.target_tet], perm_from_map(images))

    builder.glue(top, 0, bottom, (0, 1, 2, 3))
    return builder.freeze()


def degree_three_edges(t: Triangulation) -> List[int]:
    """Edge classes on which pachner_32 can act."""
    return [c.index for c in t.edge_classes()
            if c.degree == 3 and not c.boundary
            and len({e.tet for e in c.embeddings}) == 3]

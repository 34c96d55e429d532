"""
First homology of the open manifold from the dual-graph presentation of its
fundamental group, abelianised and diagonalised by Smith normal form.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from .core import OpenBoundary, Triangulation
from .validation import require_valid


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti plus cyclic torsion factors, each dividing the next."""
    betti: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def is_z(self) -> bool:
        return self.betti == 1 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z_{k}" for k in self.torsion)
        return " + ".join(parts) if parts else "0"


def _swap_rows(a: np.ndarray, i: int, j: int) -> None:
    if i != j:
        a[[i, j], :] = a[[j, i], :]


def _swap_cols(a: np.ndarray, i: int, j: int) -> None:
    if i != j:
        a[:, [i, j]] = a[:, [j, i]]


def smith_diagonal(matrix) -> List[int]:
    """
    Non-zero diagonal of the Smith normal form, non-negative and each entry
    dividing the next.

    Pivots on the entry of least absolute value and reduces its row and column
    by Euclidean steps; entries are Python integers so nothing overflows.
    """
    a = np.array(matrix, dtype=object)
    if a.size == 0:
        return []
    if a.ndim == 1:
        a = a.reshape(1, -1)
    m, n = a.shape
    diagonal: List[int] = []
    k = 0
    while k < m and k < n:
        block = a[k:, k:]
        nonzero = [(abs(block[i, j]), i, j) for i in range(m - k)
                   for j in range(n - k) if block[i, j] != 0]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        _swap_rows(a, k, k + i0)
        _swap_cols(a, k, k + j0)
        while True:
            changed = False
            for i in range(k + 1, m):
                if a[i, k] != 0:
                    q = a[i, k] // a[k, k]
                    a[i, :] = a[i, :] - q * a[k, :]
                    if a[i, k] != 0:
                        _swap_rows(a, k, i)
                        changed = True
            for j in range(k + 1, n):
                if a[k, j] != 0:
                    q = a[k, j] // a[k, k]
                    a[:, j] = a[:, j] - q * a[:, k]
                    if a[k, j] != 0:
                        _swap_cols(a, k, j)
                        changed = True
            if changed:
                continue
            # Divisibility: fold a row whose entries the pivot does not divide.
            pivot = a[k, k]
            bad = next((i for i in range(k + 1, m)
                        if any(a[i, j] % pivot for j in range(k + 1, n))), None)
            if bad is None:
                break
            a[k, :] = a[k, :] + a[bad, :]
        diagonal.append(abs(int(a[k, k])))
        k += 1
    return diagonal


def relation_matrix(t: Triangulation) -> Tuple[np.ndarray, int]:
    """
    Abelianised relations of the dual presentation.

    Generators are the face gluings off a breadth-first spanning tree of the
    dual graph, each oriented by the side met first. Walking once around an
    edge class crosses a loop of faces; its row counts, with sign, how often
    that loop uses each generator. The triangulation must be closed.

    Returns:
        (matrix, generators): one row per edge class, one column per dual arc
        outside a breadth-first spanning tree.
    """
    tree = set()
    seen = set()
    for root in range(t.size):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            tet = queue.popleft()
            for face in range(4):
                g = t.gluing(tet, face)
                if g.target_tet not in seen:
                    seen.add(g.target_tet)
                    tree.add((tet, face))
                    tree.add((g.target_tet, g.perm[face]))
                    queue.append(g.target_tet)

    generator: Dict[Tuple[int, int], Tuple[int, int]] = {}
    count = 0
    for tet in range(t.size):
        for face in range(4):
            if (tet, face) in tree or (tet, face) in generator:
                continue
            g = t.gluing(tet, face)
            generator[(tet, face)] = (count, 1)
            generator[(g.target_tet, g.perm[face])] = (count, -1)
            count += 1

    rows = []
    for edge in t.edge_classes():
        row = [0] * count
        for e in edge.embeddings:
            if (e.tet, e.exit_face) in generator:
                index, sign = generator[(e.tet, e.exit_face)]
                row[index] += sign
        rows.append(row)
    return np.array(rows, dtype=object).reshape(len(rows), count), count


def first_homology(t: Triangulation) -> HomologyGroup:
    """
    H1 of the manifold with the ideal vertices removed.

    Raises:
        InvalidTriangulation: If the triangulation fails validation.
        OpenBoundary: If any face is unglued.
    """
    require_valid(t)
    if not t.is_closed():
        raise OpenBoundary(f"{len(t.open_faces())} faces are unglued")
    matrix, generators = relation_matrix(t)
    diagonal = smith_diagonal(matrix) if matrix.size else []
    rank = len(diagonal)
    return HomologyGroup(generators - rank, tuple(d for d in diagonal if d > 1))

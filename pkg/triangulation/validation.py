"""
Validity and orientability checks. Violations are returned as data.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional

from .core import (InvalidTriangulation, Triangulation, is_permutation,
                   perm_inverse, perm_sign)


@dataclass(frozen=True)
class Violation:
    """One broken rule: `kind` names it, tet/face locate it."""
    kind: str
    message: str
    tet: Optional[int] = None
    face: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def validate(t: Triangulation) -> List[Violation]:
    """All violations of the gluing rules; empty when the triangulation is valid."""
    violations: List[Violation] = []
    n = t.size
    for tet in range(n):
        for face in range(4):
            g = t.gluing(tet, face)
            if g is None:
                continue
            where = f"face {face} of tetrahedron {tet}"
            if not is_permutation(g.perm):
                violations.append(Violation(
                    'BadPermutation', f"{where} has gluing {g.perm}", tet, face))
                continue
            if not 0 <= g.target_tet < n:
                violations.append(Violation(
                    'DanglingTarget', f"{where} targets tetrahedron {g.target_tet}",
                    tet, face))
                continue
            target_face = g.perm[face]
            if g.target_tet == tet and target_face == face:
                violations.append(Violation(
                    'SelfGluedFace', f"{where} is glued to itself", tet, face))
                continue
            back = t.gluing(g.target_tet, target_face)
            if back is None or back.target_tet != tet or back.perm != perm_inverse(g.perm):
                violations.append(Violation(
                    'InvolutionViolation',
                    f"{where} -> {g.target_tet}:{target_face} is not matched by the partner face",
                    tet, face))
    if violations:
        return violations

    for edge in t.edge_classes():
        oriented = {(e.tet, e.start, e.end) for e in edge.embeddings}
        for e in edge.embeddings:
            if (e.tet, e.end, e.start) in oriented:
                violations.append(Violation(
                    'ReversedEdge',
                    f"edge class {edge.index} is identified with itself in reverse",
                    e.tet))
                break
    return violations


def require_valid(t: Triangulation) -> None:
    """Raise InvalidTriangulation with the first violation, if any."""
    violations = validate(t)
    if violations:
        raise InvalidTriangulation(str(violations[0]))


@dataclass(frozen=True)
class Orientation:
    """Result of the orientability check with a witness when one exists."""
    orientable: bool
    signs: List[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.orientable


def orientable(t: Triangulation) -> Orientation:
    """
    Look for signs s(t) = +-1 such that every gluing satisfies
    sign(perm) = -s(t) s(t').

    Raises:
        InvalidTriangulation: If the triangulation fails validation.
    """
    require_valid(t)
    signs: List[int] = [0] * t.size
    for root in range(t.size):
        if signs[root]:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            tet = queue.popleft()
            for face in range(4):
                g = t.gluing(tet, face)
                if g is None:
                    continue
                wanted = -perm_sign(g.perm) * signs[tet]
                if signs[g.target_tet] == 0:
                    signs[g.target_tet] = wanted
                    queue.append(g.target_tet)
                elif signs[g.target_tet] != wanted:
                    return Orientation(False, [])
    return Orientation(True, signs)

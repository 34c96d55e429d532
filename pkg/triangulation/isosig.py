"""
Isomorphism signatures: a string equal for exactly the triangulations that
differ by renumbering tetrahedra and their vertices.
"""

from typing import Dict, List

from .core import (ALL_PERMS, PERM_INDEX, Perm, Triangulation, perm_compose,
                   perm_inverse)
from .validation import require_valid

EMPTY_SIGNATURE = '-'
_ALPHABET = 'abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-'


def _components(t: Triangulation) -> List[List[int]]:
    seen = set()
    result = []
    for root in range(t.size):
        if root in seen:
            continue
        members = [root]
        seen.add(root)
        for tet in members:
            for face in range(4):
                g = t.gluing(tet, face)
                if g is not None and g.target_tet not in seen:
                    seen.add(g.target_tet)
                    members.append(g.target_tet)
        result.append(members)
    return result


def _code_from(t: Triangulation, start: int, labelling: Perm) -> List[int]:
    """
    Breadth-first relabelling from one start. Newly met tetrahedra are labelled
    so that the gluing that reaches them reads as the identity.
    """
    order = [start]
    position: Dict[int, int] = {start: 0}
    maps: Dict[int, Perm] = {start: labelling}
    code: List[int] = []
    i = 0
    while i < len(order):
        tet = order[i]
        phi = maps[tet]
        phi_inv = perm_inverse(phi)
        for new_face in range(4):
            g = t.gluing(tet, phi_inv[new_face])
            if g is None:
                code.extend((0, 0))
                continue
            target = g.target_tet
            if target not in maps:
                maps[target] = perm_compose(phi, perm_inverse(g.perm))
                position[target] = len(order)
                order.append(target)
            new_perm = perm_compose(maps[target], perm_compose(g.perm, phi_inv))
            code.extend((position[target] + 1, PERM_INDEX[new_perm]))
        i += 1
    return code


def _encode(code: List[int]) -> str:
    chars = []
    for value in code:
        chars.append(_ALPHABET[value // 64] + _ALPHABET[value % 64])
    return ''.join(chars)


def canonical_code(t: Triangulation, component: List[int]) -> List[int]:
    """Lexicographically least code over every start and labelling of the component."""
    best = None
    for start in component:
        for labelling in ALL_PERMS:
            code = _code_from(t, start, labelling)
            if best is None or code < best:
                best = code
    return best


def iso_signature(t: Triangulation) -> str:
    """
    Canonical signature: per component, the size and the least code found by
    exhaustive search; components are sorted.

    Raises:
        InvalidTriangulation: If the triangulation fails validation.
    """
    require_valid(t)
    if t.size == 0:
        return EMPTY_SIGNATURE
    parts = []
    for component in _components(t):
        code = canonical_code(t, component)
        parts.append(f"{len(component)}{_encode(code)}")
    return '.'.join(sorted(parts))

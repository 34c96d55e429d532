"""
Layered solid tori, layered chains and cusp attachment on open boundaries.
"""

from .boundary import (BoundaryFace, BoundaryMismatch, OneVertexBoundary,
                       PermissibleBoundary, face_orderings, require_open)
from .lst import LayeringResult, attach_standard_cusp, build_lst
from .chain import (attach_permissible_cusp, build_chain, chain_shift,
                    fill_boundary)

__all__ = [
    'BoundaryFace', 'BoundaryMismatch', 'OneVertexBoundary',
    'PermissibleBoundary', 'face_orderings', 'require_open',
    'LayeringResult', 'attach_standard_cusp', 'build_lst',
    'attach_permissible_cusp', 'build_chain', 'chain_shift', 'fill_boundary',
]

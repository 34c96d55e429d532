"""
Exact slope arithmetic, continued fractions and Farey paths.
"""

from .slope import (INFINITY, InfiniteSlope, Slope, SlopeParseError,
                    ZeroSlopePair, make_slope)
from .continued_fraction import PositiveCF, convergents, norm, positive_cf
from .paths import (FareyPath, FareyStep, FareyTriple, NotAFareyTriple,
                    NotNeighbours, bfs_distances, bfs_path_length,
                    farey_distance, farey_neighbors, farey_path,
                    is_farey_neighbor, slopes_in_box)
from .counts import (BoundaryClass, PermissibleData, UnrealizableSlope,
                     WrongBoundaryKind, chain_tet_count, interval_of,
                     lst_tet_count)

__all__ = [
    'INFINITY', 'InfiniteSlope', 'Slope', 'SlopeParseError', 'ZeroSlopePair',
    'make_slope', 'PositiveCF', 'convergents', 'norm', 'positive_cf',
    'FareyPath', 'FareyStep', 'FareyTriple', 'NotAFareyTriple', 'NotNeighbours',
    'bfs_distances', 'bfs_path_length', 'farey_distance', 'farey_neighbors',
    'farey_path', 'is_farey_neighbor', 'slopes_in_box', 'BoundaryClass',
    'PermissibleData', 'UnrealizableSlope', 'WrongBoundaryKind',
    'chain_tet_count', 'interval_of', 'lst_tet_count',
]

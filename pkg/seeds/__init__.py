"""
The seed triangulations of the magic manifold and the cusps that close them.
"""

from .cusps import (PERMISSIBLE_CUSP_TABLE, STANDARD_CUSP_TABLE,
                    permissible_cusp, standard_cusp)
from .tables import (T1_CORE, T1_TABLE, T2_CORE, T3_CORE, T4HAT_CORE,
                     T5HAT_CORE)
from .boundaries import (OneVertexLayout, PermissibleLayout, close_boundaries,
                         fills_knots, resolve_boundaries)
from .registry import (DEFAULT_SEEDS, SeedDefinition, SeedId, SeedRegistry,
                       SeedTriangulation, UnknownSeed, build_seed, closed_seed,
                       list_seeds, parse_seed_id, seed_definition, t1_table)

__all__ = [
    'PERMISSIBLE_CUSP_TABLE', 'STANDARD_CUSP_TABLE', 'permissible_cusp',
    'standard_cusp', 'T1_CORE', 'T1_TABLE', 'T2_CORE', 'T3_CORE',
    'T4HAT_CORE', 'T5HAT_CORE', 'OneVertexLayout', 'PermissibleLayout',
    'close_boundaries', 'fills_knots', 'resolve_boundaries', 'DEFAULT_SEEDS',
    'SeedDefinition', 'SeedId', 'SeedRegistry', 'SeedTriangulation',
    'UnknownSeed', 'build_seed', 'closed_seed', 'list_seeds',
    'parse_seed_id', 'seed_definition', 't1_table',
]

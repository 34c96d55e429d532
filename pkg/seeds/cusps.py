"""
The two cusp fragments that cone off seed boundaries.

Tetrahedron indices: the standard cusp is X=0, Y=1; the permissible cusp is
A=0, B=1, C=2, D=3. Face 123 of every cusp tetrahedron is left open.
"""

from functools import lru_cache

from triangulation import Triangulation, import_gluing_table

STANDARD_CUSP_TABLE = """\
tet | 012 | 013 | 023 | 123
0 | 1(021) | 1(031) | 1(032) | --
1 | 0(021) | 0(031) | 0(032) | --
"""

PERMISSIBLE_CUSP_TABLE = """\
tet | 012 | 013 | 023 | 123
0 | 3(021) | 1(031) | 1(032) | --
1 | 2(021) | 0(031) | 0(032) | --
2 | 1(021) | 3(031) | 3(032) | --
3 | 0(021) | 2(031) | 2(032) | --
"""

STANDARD_LABELS = ('X', 'Y')
PERMISSIBLE_LABELS = ('A', 'B', 'C', 'D')


@lru_cache(maxsize=None)
def standard_cusp() -> Triangulation:
    """Two tetrahedra; coning a one-vertex torus boundary makes it a cusp."""
    t = import_gluing_table(STANDARD_CUSP_TABLE)
    return Triangulation(t.rows(), STANDARD_LABELS)


@lru_cache(maxsize=None)
def permissible_cusp() -> Triangulation:
    """Four tetrahedra; coning a permissible boundary makes it a cusp."""
    t = import_gluing_table(PERMISSIBLE_CUSP_TABLE)
    return Triangulation(t.rows(), PERMISSIBLE_LABELS)

"""
Gluing tables of the seed cores. Faces left as '--' are the boundary faces
listed next to each table.
"""

T1_CORE = """\
tet | 012 | 013 | 023 | 123
0 | 1(210) | 1(031) | -- | --
1 | 0(210) | 0(031) | -- | --
"""

# T1 with both standard cusps attached: tetrahedra 2, 3 cone the first
# boundary and 4, 5 the second.
T1_TABLE = """\
tet | 012 | 013 | 023 | 123
0 | 1(210) | 1(031) | 2(123) | 4(132)
1 | 0(210) | 0(031) | 3(123) | 5(132)
2 | 3(021) | 3(031) | 3(032) | 0(023)
3 | 2(021) | 2(031) | 2(032) | 1(023)
4 | 5(021) | 5(031) | 5(032) | 0(132)
5 | 4(021) | 4(031) | 4(032) | 1(132)
"""

T2_CORE = """\
tet | 012 | 013 | 023 | 123
0 | 1(102) | 1(310) | -- | --
1 | 0(102) | 0(310) | -- | --
"""

# Published with 0(023) in row 3; 0(203) is the partner of row 0's entry.
T3_CORE = """\
tet | 012 | 013 | 023 | 123
0 | 1(021) | 2(023) | 3(203) | --
1 | 0(021) | 2(132) | 4(203) | --
2 | 3(130) | 4(310) | 0(013) | 1(031)
3 | 4(021) | 2(201) | 0(203) | --
4 | 3(021) | 2(310) | 1(203) | --
"""

T4HAT_CORE = """\
tet | 012 | 013 | 023 | 123
0 | 1(021) | -- | -- | --
1 | 0(021) | -- | -- | --
"""

T5HAT_CORE = """\
tet | 012 | 013 | 023 | 123
0 | -- | -- | 1(320) | --
1 | -- | -- | 0(320) | --
"""

"""
Generalised ideal triangulations and the checks run on them.
"""

from .core import (ALL_PERMS, COLUMN_FACES, EDGE_VERTICES, FACE_COLUMNS,
                   IDENTITY, EdgeClass, EdgeEmbedding, FaceGluing,
                   InvalidTriangulation, OpenBoundary, Perm, Triangulation,
                   TriangulationBuilder, face_perm, face_vertices,
                   perm_compose, perm_from_map, perm_inverse, perm_sign)
from .validation import Orientation, Violation, orientable, require_valid, validate
from .links import VertexLink, cusp_count, vertex_classes, vertex_links
from .homology import HomologyGroup, first_homology, relation_matrix, smith_diagonal
from .isosig import EMPTY_SIGNATURE, iso_signature
from .moves import (EdgeNotDegreeThree, SharedTetrahedron, degree_three_edges,
                    pachner_32)
from .gluing_table import (HEADER, ParseError, export_gluing_table,
                           import_gluing_table, triangulation_from_dict,
                           triangulation_to_dict)

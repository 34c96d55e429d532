"""
Text and JSON forms of a triangulation.

The text form is the table used throughout: a header naming the face columns
and one row per tetrahedron, each entry "t(abc)" or "--" for a boundary face.
"""

import re
from typing import Any, Dict, List, Optional, Tuple

from .core import (COLUMN_FACES, FACE_COLUMNS, FaceGluing, Triangulation,
                   face_perm, face_vertices, is_permutation)

HEADER = 'tet | ' + ' | '.join(FACE_COLUMNS)
BOUNDARY = '--'
_ENTRY = re.compile(r'^(\d+)\(([0-3])([0-3])([0-3])\)$')


class ParseError(ValueError):
    """Raised for malformed table text; carries a 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def format_entry(t: Triangulation, tet: int, face: int) -> str:
    """One table cell: `t(abc)`, or `--` for an open face."""
    g = t.gluing(tet, face)
    if g is None:
        return BOUNDARY
    images = ''.join(str(g.perm[v]) for v in face_vertices(face))
    return f"{g.target_tet}({images})"


def export_gluing_table(t: Triangulation) -> str:
    """Render the table; the text ends with a newline."""
    lines = [HEADER]
    for tet in range(t.size):
        entries = [format_entry(t, tet, face) for face in COLUMN_FACES]
        lines.append(f"{tet} | " + ' | '.join(entries))
    return '\n'.join(lines) + '\n'


def _cells(line: str) -> List[Tuple[str, int]]:
    """Split a row on '|' keeping the 1-based column where each cell starts."""
    cells = []
    start = 0
    for piece in line.split('|'):
        stripped = piece.strip()
        offset = piece.find(stripped) if stripped else 0
        cells.append((stripped, start + offset + 1))
        start += len(piece) + 1
    return cells


def import_gluing_table(text: str) -> Triangulation:
    """
    Parse table text. Gluings are taken as written; use validate() to check
    that partner faces agree.

    Raises:
        ParseError: On a bad header, row index, entry or target.
    """
    lines = [(n + 1, line) for n, line in enumerate(text.splitlines()) if line.strip()]
    if not lines:
        raise ParseError(1, 1, "missing header")
    header_no, header = lines[0]
    if ' '.join(header.split()) != HEADER:
        raise ParseError(header_no, 1, f"expected header '{HEADER}'")

    raw_rows: List[Tuple[int, List[Tuple[str, int]]]] = []
    for line_no, line in lines[1:]:
        cells = _cells(line)
        if len(cells) != 5:
            raise ParseError(line_no, 1, f"expected 5 cells, found {len(cells)}")
        index, column = cells[0]
        if index != str(len(raw_rows)):
            raise ParseError(line_no, column,
                             f"expected tetrahedron {len(raw_rows)}, found '{index}'")
        raw_rows.append((line_no, cells[1:]))

    n = len(raw_rows)
    gluings: List[List[Optional[FaceGluing]]] = []
    for line_no, cells in raw_rows:
        row: List[Optional[FaceGluing]] = [None] * 4
        for position, (entry, column) in enumerate(cells):
            if entry == BOUNDARY:
                continue
            match = _ENTRY.match(entry)
            if match is None:
                raise ParseError(line_no, column, f"bad entry '{entry}'")
            target = int(match.group(1))
            if target >= n:
                raise ParseError(line_no, column,
                                 f"target {target} out of range 0..{n - 1}")
            images = [int(match.group(k)) for k in (2, 3, 4)]
            if len(set(images)) != 3:
                raise ParseError(line_no, column, f"repeated vertex in '{entry}'")
            face = COLUMN_FACES[position]
            row[face] = FaceGluing(target, face_perm(face, images))
        gluings.append(row)
    return Triangulation(gluings)


def triangulation_to_dict(t: Triangulation) -> Dict[str, Any]:
    """JSON-ready form with explicit 4-element permutations indexed by face."""
    return {
        'tetrahedra': [
            {
                'label': t.labels[tet],
                'gluings': [
                    None if g is None else {'target': g.target_tet, 'perm': list(g.perm)}
                    for g in (t.gluing(tet, face) for face in range(4))
                ],
            }
            for tet in range(t.size)
        ]
    }


def triangulation_from_dict(data: Dict[str, Any]) -> Triangulation:
    """Inverse of triangulation_to_dict."""
    try:
        tets = data['tetrahedra']
        rows = []
        labels = []
        for entry in tets:
            labels.append(str(entry.get('label', len(labels))))
            row = []
            for g in entry['gluings']:
                if g is None:
                    row.append(None)
                    continue
                perm = tuple(int(x) for x in g['perm'])
                if not is_permutation(perm):
                    raise ValueError(f"{perm} is not a permutation")
                row.append(FaceGluing(int(g['target']), perm))
            rows.append(row)
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed triangulation data: {e}") from None
    return Triangulation(rows, labels)

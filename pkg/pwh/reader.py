import logging
import re
from typing import List

from .complex import Face, SimplicialComplex, VertexId, as_face, vertex
from .errors import InputError, PwhError

log = logging.getLogger(__name__)

_FACE = re.compile(r'\{([^{}]*)\}')
KEYS = ('vertices', 'faces')


class Reader:
    """
    Complexes in the text format, one block per complex:

        vertices: 1 2 3 4
        faces: {1 2} {2 3}

    Blocks are separated by blank lines; `#` starts a comment line. Without
    a `vertices:` line the vertices are those of the faces. An empty
    `faces:` line is VOID, `faces: {}` is EMPTY.
    """

    def __init__(self, file_obj):
        self._file_obj = file_obj
        self._block = []
        self._line_no = 0

    def __iter__(self):
        return self

    def __next__(self) -> SimplicialComplex:
        for line in self._file_obj:
            self._line_no += 1
            line = line.rstrip('\n')
            if line.strip() == '':
                if self._block:
                    return self._flush()
                continue
            if line.lstrip().startswith('#'):
                continue
            self._block.append((self._line_no, line))
        if self._block:
            return self._flush()
        raise StopIteration

    def _flush(self) -> SimplicialComplex:
        block, self._block = self._block, []
        fields = {}
        for line_no, line in block:
            key, sep, value = line.partition(':')
            key = key.strip()
            if not sep or key not in KEYS:
                raise InputError(f'line {line_no}: expected "vertices:" or "faces:", got {line!r}',
                                 code='bad-dsl')
            if key in fields:
                raise InputError(f'line {line_no}: repeated {key!r}', code='bad-dsl')
            fields[key] = value
        if 'faces' not in fields:
            raise InputError(f'line {block[0][0]}: complex without a "faces:" line', code='bad-dsl')
        faces = Reader.parse_faces(fields['faces'])
        vertices = Reader.parse_vertices(fields['vertices']) if 'vertices' in fields else None
        try:
            return SimplicialComplex(vertices, faces)
        except PwhError as e:
            raise InputError(f'line {block[0][0]}: {e.message}', code=e.code, face=e.face)

    @staticmethod
    def parse_vertices(s: str) -> List[VertexId]:
        return [vertex(x) for x in s.split()]

    @staticmethod
    def parse_faces(s: str) -> List[Face]:
        leftover = _FACE.sub(' ', s).strip()
        if leftover:
            raise InputError(f'unexpected {leftover!r} between faces', code='bad-dsl')
        return [as_face(m.group(1).split()) for m in _FACE.finditer(s)]

    @staticmethod
    def check(s: str) -> List[str]:
        """Log and return lint warnings, if any."""
        warnings = []
        for n, line in enumerate(s.split('\n'), 1):
            if not line.strip() or line.lstrip().startswith('#'):
                continue
            key, sep, value = line.partition(':')
            if not sep or key.strip() not in KEYS:
                warnings.append(f'line {n}: unknown key {key.strip()!r}')
                continue
            if value.count('{') != value.count('}'):
                warnings.append(f'line {n}: unbalanced braces')
            if key.strip() == 'vertices':
                labels = value.split()
                if len(set(labels)) != len(labels):
                    warnings.append(f'line {n}: duplicate vertices')
            else:
                for m in _FACE.finditer(value):
                    labels = m.group(1).split()
                    if len(set(labels)) != len(labels):
                        warnings.append(f'line {n}: duplicate vertex in face {{{m.group(1)}}}')
        if s and not s.endswith('\n'):
            warnings.append('no newline at the end')
        for w in warnings:
            log.warning(w)
        return warnings

from typing import Iterable

from .complex import SimplicialComplex, VertexId


class Writer:
    def __init__(self, file_obj):
        self._file_obj = file_obj

    def write_complex(self, k: SimplicialComplex):
        vs = ''.join(f' {v}' for v in k.vertices)
        faces = ''.join(' ' + Writer.format_face(m) for m in k.maximal_faces)
        self._file_obj.write(f'vertices:{vs}\nfaces:{faces}\n\n')

    def write_complexes(self, complexes: Iterable[SimplicialComplex]):
        for k in complexes:
            self.write_complex(k)

    @staticmethod
    def format_face(face: Iterable[VertexId]) -> str:
        return '{' + ' '.join(str(v) for v in sorted(face)) + '}'

    @staticmethod
    def to_dot(k: SimplicialComplex, name: str = 'K') -> str:
        """The 1-skeleton as an undirected graph, 2-faces as filled points wired to their corners."""
        lines = [f'graph {name} {{']
        ghosts = set(k.ghosts)
        for v in k.vertices:
            lines.append(f'  "{v}" [style=dashed];' if v in ghosts else f'  "{v}";')
        faces = sorted(k.faces, key=lambda f: (len(f), sorted(f)))
        for f in faces:
            if len(f) == 2:
                a, b = sorted(f)
                lines.append(f'  "{a}" -- "{b}";')
        for n, f in enumerate(f for f in faces if len(f) == 3):
            lines.append(f'  "t{n}" [shape=point, style=filled, label=""];')
            lines.extend(f'  "t{n}" -- "{v}" [style=dotted];' for v in sorted(f))
        lines.append('}')
        return '\n'.join(lines) + '\n'

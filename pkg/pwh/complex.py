"""Finite abstract simplicial complexes on path-labelled vertices."""

import functools as ft
import itertools as it
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import more_itertools as mit
import networkx as nx
from networkx.algorithms import isomorphism as nxiso

from . import config
from .errors import ComplexError, InputError
from .util import face_key, maximal

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class VertexId:
    """A vertex label: a nonempty path of positive integers, `(1, 2)` is "1_2"."""

    path: Tuple[int, ...]

    def __post_init__(self):
        if not self.path:
            raise ComplexError('vertex path is empty', code='bad-vertex')
        for c in self.path:
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                raise ComplexError(f'bad vertex path component {c!r}', code='bad-vertex')

    @classmethod
    def parse(cls, s: str) -> 'VertexId':
        try:
            return cls(tuple(int(c) for c in s.strip().split('_')))
        except (ValueError, ComplexError):
            raise InputError(f'bad vertex label {s!r}', code='bad-vertex')

    def child(self, other: 'VertexId') -> 'VertexId':
        return VertexId(self.path + other.path)

    def __str__(self):
        return '_'.join(str(c) for c in self.path)

    def __repr__(self):
        return f"VertexId('{self}')"


VertexLike = Union[VertexId, int, str, Tuple[int, ...]]
Face = FrozenSet[VertexId]


def vertex(x: VertexLike) -> VertexId:
    if isinstance(x, VertexId):
        return x
    if isinstance(x, bool):
        raise InputError(f'not a vertex label: {x!r}', code='bad-vertex')
    if isinstance(x, int):
        return VertexId((x,))
    if isinstance(x, str):
        return VertexId.parse(x)
    if isinstance(x, tuple):
        return VertexId(x)
    raise InputError(f'not a vertex label: {x!r}', code='bad-vertex')


def as_face(labels: Iterable[VertexLike]) -> Face:
    return frozenset(vertex(x) for x in labels)


def face(*labels: VertexLike) -> Face:
    return as_face(labels)


def format_face(sigma: Iterable[VertexId]) -> str:
    return '{' + ' '.join(str(v) for v in sorted(sigma)) + '}'


class SimplicialComplex:
    """
    A finite simplicial complex stored by its maximal faces on an explicit
    vertex set. Vertices that lie in no face (ghosts) are allowed.

    VOID has no faces at all, EMPTY has only the empty face. Instances are
    immutable; the full face set is derived on first use.
    """

    def __init__(self, vertices: Optional[Iterable[VertexLike]] = None,
                 faces: Iterable[Iterable[VertexLike]] = ()):
        faces = [as_face(f) for f in faces]
        support = frozenset().union(*faces)
        if vertices is None:
            vs = set(support)
        else:
            vs = {vertex(v) for v in vertices}
            stray = support - vs
            if stray:
                raise ComplexError('face uses vertices outside the vertex set',
                                   code='stray-vertex', face=stray)
        cap = config.max_vertices()
        if len(vs) > cap:
            raise ComplexError(f'{len(vs)} vertices exceed the cap of {cap}',
                               code='too-many-vertices')
        self._vertices = tuple(sorted(vs))
        self._maximal_faces = tuple(sorted(maximal(faces), key=face_key))

    @classmethod
    def from_minimal_missing_faces(cls, vertices: Iterable[VertexLike],
                                   missing: Iterable[Iterable[VertexLike]]) -> 'SimplicialComplex':
        vs = sorted({vertex(v) for v in vertices})
        missing = [as_face(m) for m in missing]
        if frozenset() in missing:
            return cls(vs, [])
        faces = (frozenset(s) for s in mit.powerset(vs))
        return cls(vs, [s for s in faces if not any(m <= s for m in missing)])

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self._vertices

    @property
    def maximal_faces(self) -> Tuple[Face, ...]:
        return self._maximal_faces

    @ft.cached_property
    def vertex_set(self) -> FrozenSet[VertexId]:
        return frozenset(self._vertices)

    @ft.cached_property
    def faces(self) -> FrozenSet[Face]:
        out = set()
        for m in self._maximal_faces:
            out.update(frozenset(s) for s in mit.powerset(sorted(m)))
        return frozenset(out)

    @property
    def is_void(self) -> bool:
        return not self._maximal_faces

    @property
    def is_empty(self) -> bool:
        return self._maximal_faces == (frozenset(),)

    @property
    def is_full_simplex(self) -> bool:
        return self._maximal_faces == (self.vertex_set,)

    @property
    def ghosts(self) -> Tuple[VertexId, ...]:
        return tuple(v for v in self._vertices if frozenset([v]) not in self.faces)

    @property
    def dim(self) -> Optional[int]:
        if self.is_void:
            return None
        return max(len(m) for m in self._maximal_faces) - 1

    @ft.cached_property
    def f_vector(self) -> Tuple[int, ...]:
        """Face counts by dimension, starting at the empty face."""
        if self.is_void:
            return ()
        counts = [0] * (self.dim + 2)
        for s in self.faces:
            counts[len(s)] += 1
        return tuple(counts)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertices == other._vertices and self._maximal_faces == other._maximal_faces

    def __hash__(self):
        return hash((self._vertices, self._maximal_faces))

    def __repr__(self):
        vs = ', '.join(str(v) for v in self._vertices)
        ms = ' '.join(format_face(m) for m in self._maximal_faces)
        return f'{self.__class__.__name__}([{vs}], {ms or "void"})'

    def __contains__(self, item):
        if isinstance(item, SimplicialComplex):
            return item.is_subcomplex(self)
        if isinstance(item, (set, frozenset)):
            return self.is_face(item)
        raise TypeError(f'cannot check if {item!r} is contained in {self.__class__.__name__}')

    def is_face(self, sigma: Iterable[VertexLike]) -> bool:
        sigma = as_face(sigma)
        return any(sigma <= m for m in self._maximal_faces)

    def is_subcomplex(self, other: 'SimplicialComplex') -> bool:
        """Every face of self is a face of other."""
        return all(other.is_face(m) for m in self._maximal_faces)

    def minimal_missing_faces(self) -> Tuple[Face, ...]:
        if self.is_void:
            raise ComplexError('a void complex has no minimal missing faces', code='void')
        return self._missing

    @ft.cached_property
    def _missing(self) -> Tuple[Face, ...]:
        # every missing face all of whose facets are faces is a face plus one vertex
        faces = self.faces
        found = set()
        for sigma in faces:
            for v in self._vertices:
                if v in sigma:
                    continue
                tau = sigma | {v}
                if tau in faces or tau in found:
                    continue
                if all(tau - {u} in faces for u in tau):
                    found.add(tau)
        return tuple(sorted(found, key=face_key))

    def alexander_dual(self) -> 'SimplicialComplex':
        """Faces are the complements of non-faces, on the same vertex set. The dual of Δ is VOID."""
        if self.is_void:
            raise ComplexError('a void complex has no Alexander dual', code='void-dual')
        missing = self.minimal_missing_faces()
        return SimplicialComplex(self._vertices, [self.vertex_set - m for m in missing])

    def skeleton(self, d: int) -> 'SimplicialComplex':
        if d < -1:
            raise ComplexError(f'skeleton dimension {d} is below -1', code='bad-dimension')
        out = []
        for m in self._maximal_faces:
            if len(m) <= d + 1:
                out.append(m)
            else:
                out.extend(frozenset(c) for c in it.combinations(sorted(m), d + 1))
        return SimplicialComplex(self._vertices, out)

    def restrict(self, subset: Iterable[VertexLike]) -> 'SimplicialComplex':
        """The full subcomplex on `subset`."""
        w = as_face(subset)
        outside = w - self.vertex_set
        if outside:
            raise ComplexError('restriction to vertices outside the complex',
                               code='stray-vertex', face=outside)
        return SimplicialComplex(w, [m & w for m in self._maximal_faces])

    def relabel(self, mapping: Mapping[VertexId, VertexId]) -> 'SimplicialComplex':
        """Rename vertices; vertices missing from `mapping` keep their label."""
        image = {v: mapping.get(v, v) for v in self._vertices}
        if len(set(image.values())) != len(image):
            raise ComplexError('relabelling is not injective', code='bad-relabel')
        return SimplicialComplex(image.values(),
                                 [frozenset(image[v] for v in m) for m in self._maximal_faces])

    def with_vertices(self, vertices: Iterable[VertexLike]) -> 'SimplicialComplex':
        """Same faces on a larger vertex set; the new vertices are ghosts."""
        return SimplicialComplex(self.vertex_set | as_face(vertices), self._maximal_faces)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': [str(v) for v in self._vertices],
            'maximal_faces': [[str(v) for v in sorted(m)] for m in self._maximal_faces],
        }


@dataclass(frozen=True)
class SimplicialPair:
    """(S, T) with T a subcomplex of S on the same vertex set."""

    big: SimplicialComplex
    small: SimplicialComplex

    def __post_init__(self):
        if self.big.vertices != self.small.vertices:
            raise ComplexError('pair members live on different vertex sets', code='bad-pair')
        for m in self.small.maximal_faces:
            if not self.big.is_face(m):
                raise ComplexError('small member is not a subcomplex of big', code='bad-pair', face=m)

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return self.big.vertices


def simplex(labels: Iterable[VertexLike]) -> SimplicialComplex:
    j = as_face(labels)
    return SimplicialComplex(j, [j])


def boundary_simplex(labels: Iterable[VertexLike]) -> SimplicialComplex:
    j = as_face(labels)
    if not j:
        raise ComplexError('boundary of void', code='boundary-of-void')
    return SimplicialComplex(j, [j - {v} for v in j])


def point(label: VertexLike) -> SimplicialComplex:
    """The one-vertex complex."""
    return simplex([label])


def empty_complex(labels: Iterable[VertexLike]) -> SimplicialComplex:
    """Only the empty face; every vertex is a ghost."""
    return SimplicialComplex(labels, [frozenset()])


def void_complex(labels: Iterable[VertexLike] = ()) -> SimplicialComplex:
    return SimplicialComplex(labels, [])


def skeleton(k: SimplicialComplex, d: int) -> SimplicialComplex:
    return k.skeleton(d)


def faces(k: SimplicialComplex) -> FrozenSet[Face]:
    return k.faces


def minimal_missing_faces(k: SimplicialComplex) -> Tuple[Face, ...]:
    return k.minimal_missing_faces()


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    return k.alexander_dual()


def join(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    overlap = k1.vertex_set & k2.vertex_set
    if overlap:
        raise ComplexError('join of complexes sharing vertices', code='overlap', face=overlap)
    return SimplicialComplex(k1.vertex_set | k2.vertex_set,
                             [a | b for a in k1.maximal_faces for b in k2.maximal_faces])


def join_all(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    out = empty_complex([])
    for k in complexes:
        out = join(out, k)
    return out


def union(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(k1.vertex_set | k2.vertex_set, k1.maximal_faces + k2.maximal_faces)


def intersection(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(k1.vertex_set & k2.vertex_set,
                             [a & b for a in k1.maximal_faces for b in k2.maximal_faces])


def is_subcomplex(k1: SimplicialComplex, k2: SimplicialComplex) -> bool:
    return k1.is_subcomplex(k2)


def is_face(k: SimplicialComplex, sigma: Iterable[VertexLike]) -> bool:
    return k.is_face(sigma)


def full_subcomplex(k: SimplicialComplex, subset: Iterable[VertexLike]) -> SimplicialComplex:
    return k.restrict(subset)


def is_full_subcomplex(k: SimplicialComplex, sub: SimplicialComplex) -> bool:
    """sub equals the full subcomplex of k on sub's vertices."""
    if not sub.vertex_set <= k.vertex_set:
        return False
    return k.restrict(sub.vertices) == sub


def _signature(k: SimplicialComplex) -> Tuple:
    degrees = sorted(sum(1 for m in k.maximal_faces if v in m) for v in k.vertices)
    return (len(k.vertices), k.f_vector, tuple(degrees),
            tuple(sorted(len(m) for m in k.maximal_faces)))


def _incidence_graph(k: SimplicialComplex) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((('v', v) for v in k.vertices), kind='vertex')
    for n, m in enumerate(k.maximal_faces):
        g.add_node(('f', n), kind='face')
        g.add_edges_from((('f', n), ('v', v)) for v in m)
    return g


def isomorphism(k1: SimplicialComplex, k2: SimplicialComplex) -> Optional[Dict[VertexId, VertexId]]:
    """A vertex bijection carrying the faces of k1 onto those of k2, or None."""
    if _signature(k1) != _signature(k2):
        return None
    matcher = nxiso.GraphMatcher(_incidence_graph(k1), _incidence_graph(k2),
                                 node_match=nxiso.categorical_node_match('kind', None))
    if not matcher.is_isomorphic():
        return None
    pairs = [(a[1], b[1]) for a, b in matcher.mapping.items() if a[0] == 'v']
    return dict(sorted(pairs))


def is_isomorphic(k1: SimplicialComplex, k2: SimplicialComplex) -> bool:
    return isomorphism(k1, k2) is not None


def vertex_range(n: int) -> List[VertexId]:
    return [VertexId((i,)) for i in range(1, n + 1)]

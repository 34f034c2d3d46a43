"""
Symbolic higher Whitehead maps.

An expression is a tree of `MapLeaf` (a map f_i), `Sum` (a formal sum of
maps in one slot), `Hw` (the higher Whitehead map of its arguments,
optionally anchored in an ambient complex) and `Folded` (an anchored `Hw`
followed by a fold of its ambient). Nothing here evaluates maps; the
module tracks codomain complexes, domains, signs and a three-valued
triviality verdict derived from complex containments.
"""

import enum
import functools as ft
import logging
import math
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from .complex import (Face, SimplicialComplex, VertexId, boundary_simplex, join_all, point,
                      vertex, vertex_range)
from .errors import ComplexError, ExprError
from .folds import Fold, max_folding_complex, folded_complex
from .polyjoin import substitution
from .util import face_key, natural_key

log = logging.getLogger(__name__)

_TRAILING_LABEL = re.compile(r'(\d+(?:_\d+)*)$')


class Mode(enum.Enum):
    GENERAL = 'general'
    DJ = 'dj'


class Status(enum.Enum):
    TRIVIAL = 'trivial'
    NONTRIVIAL = 'nontrivial'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: Optional[str] = None
    certificate: Tuple[Face, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.status is Status.TRIVIAL

    def to_dict(self) -> Dict:
        d = {'status': self.status.value, 'rule': self.rule}
        if self.certificate:
            d['certificate'] = [[str(v) for v in sorted(f)] for f in self.certificate]
        return d


TRIVIAL = Status.TRIVIAL
NONTRIVIAL = Status.NONTRIVIAL
UNKNOWN = Status.UNKNOWN


@dataclass(frozen=True)
class SpaceRef:
    """A target space Y, with the H-space structure folds need."""

    name: str
    is_h_space: bool = False
    is_associative: bool = False

    def __post_init__(self):
        if self.is_associative and not self.is_h_space:
            raise ExprError(f'{self.name} is associative but not an H-space', code='bad-space')


@dataclass(frozen=True)
class MapLeaf:
    """
    A map f: ΣX → Y. `sphere_dim` p means X = S^{p-1}. `vertex` is where the
    leaf sits in codomain complexes, read off a trailing label of the name
    (f4 sits at 4, f1_2 at 1_2) when not given. `shape` is the complex the
    map lands in, a single point by default.
    """

    name: str
    sphere_dim: Optional[int] = None
    domain_is_suspension: Optional[bool] = None
    codomain: SpaceRef = SpaceRef('Y')
    is_null: bool = False
    vertex: Optional[VertexId] = None
    shape: Optional[SimplicialComplex] = None

    def __post_init__(self):
        if self.sphere_dim is not None and self.sphere_dim < 1:
            raise ExprError(f'sphere dimension of {self.name} must be at least 1', code='bad-leaf')
        spherical_suspension = self.sphere_dim is not None and self.sphere_dim >= 2
        if self.domain_is_suspension is None:
            object.__setattr__(self, 'domain_is_suspension', spherical_suspension)
        elif spherical_suspension and not self.domain_is_suspension:
            raise ExprError(f'{self.name}: S^{self.sphere_dim - 1} is a suspension', code='bad-leaf')
        if self.vertex is None:
            match = _TRAILING_LABEL.search(self.name)
            if match:
                object.__setattr__(self, 'vertex', vertex(match.group(1)))
            elif self.shape is not None and self.shape.vertices:
                object.__setattr__(self, 'vertex', self.shape.vertices[0])
            else:
                raise ExprError(f'cannot place leaf {self.name!r}, give it a vertex', code='bad-leaf')
        else:
            object.__setattr__(self, 'vertex', vertex(self.vertex))

    @property
    def cell(self) -> SimplicialComplex:
        return self.shape if self.shape is not None else point(self.vertex)


@dataclass(frozen=True)
class Sum:
    """f + f' + … in a single slot."""

    terms: Tuple[MapLeaf, ...]

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))
        if not self.terms:
            raise ExprError('empty formal sum', code='bad-sum')
        cells = {t.cell for t in self.terms}
        if len(cells) != 1:
            raise ExprError('summands of one slot must share their cell', code='bad-sum')

    @property
    def cell(self) -> SimplicialComplex:
        return self.terms[0].cell


@dataclass(frozen=True)
class Hw:
    """hw(args), or hw^K(args) when anchored in the ambient K."""

    args: Tuple['HwExpr', ...]
    ambient: Optional[SimplicialComplex] = None

    def __post_init__(self):
        object.__setattr__(self, 'args', tuple(self.args))
        if len(self.args) < 2:
            raise ExprError('a higher Whitehead map needs at least two arguments', code='bad-hw')
        for a in self.args:
            if not isinstance(a, (MapLeaf, Sum, Hw)):
                raise ExprError(f'unsupported argument {type(a).__name__}', code='bad-hw')
        if self.ambient is not None:
            for m in self.shape.maximal_faces:
                if not self.ambient.is_face(m):
                    raise ExprError('ambient does not contain the codomain shape',
                                    code='ambient-too-small', face=m)

    @ft.cached_property
    def shape(self) -> SimplicialComplex:
        """∂Δ⟨shapes of the arguments⟩ on the arguments' own labels."""
        return _boundary_over([cell(a) for a in self.args])

    @property
    def anchor(self) -> SimplicialComplex:
        return self.ambient if self.ambient is not None else self.shape


@dataclass(frozen=True)
class Folded:
    """∇ψ h^K(args): an anchored map followed by the fold ψ of K."""

    inner: Hw
    fold: Fold

    def __post_init__(self):
        if not isinstance(self.inner, Hw):
            raise ExprError('only a higher Whitehead map can be folded', code='bad-fold')
        self.fold.validate(self.inner.anchor)
        _check_spaces(self.inner, self.fold)


HwExpr = Union[MapLeaf, Sum, Hw, Folded]


def _boundary_over(shapes: Sequence[SimplicialComplex]) -> SimplicialComplex:
    try:
        return substitution(boundary_simplex(vertex_range(len(shapes))), shapes, relabel=False)
    except ComplexError as e:
        if e.code == 'overlap':
            raise ExprError('arguments occupy overlapping vertices', code='overlap', face=e.face)
        raise


def cell(e: HwExpr) -> SimplicialComplex:
    """What an argument contributes to its parent's codomain shape."""
    if isinstance(e, (MapLeaf, Sum)):
        return e.cell
    if isinstance(e, Hw):
        return e.shape
    return codomain_complex(e)


def leaves(e: HwExpr) -> Iterator[MapLeaf]:
    if isinstance(e, MapLeaf):
        yield e
    elif isinstance(e, Sum):
        yield from e.terms
    elif isinstance(e, Hw):
        for a in e.args:
            yield from leaves(a)
    else:
        yield from leaves(e.inner)


def _owners(e: HwExpr) -> Dict[VertexId, MapLeaf]:
    out = {}
    for leaf in leaves(e):
        for v in leaf.cell.vertices:
            out[v] = leaf
    return out


def _check_spaces(inner: Hw, fold: Fold):
    owners = _owners(inner)
    for j, block in fold.blocks.items():
        target = owners.get(j)
        if target is None:
            raise ExprError('fold target carries no map', code='h-space', vertex=j)
        for i in block:
            source = owners.get(i)
            if source is None or source.codomain != target.codomain:
                raise ExprError('folded vertices map to different spaces', code='h-space', vertex=i)
        check_fold_space(target.codomain, inner.anchor, j, block)


def check_fold_space(space: SpaceRef, ambient: SimplicialComplex, j: VertexId, block: FrozenSet[VertexId]):
    """
    Folding `block` onto j multiplies coordinates in `space` unless they span
    no edge. A single folded vertex needs only an H-space, which may be
    non-associative; a fibre of two or more vertices multiplies three or more
    coordinates at once and needs an associative one.
    """
    local = ambient.restrict(block | {j})
    if local.dim is not None and local.dim <= 0:
        return
    if space.is_associative or (space.is_h_space and len(block) == 1):
        return
    raise ExprError(f'folding onto {j} needs {space.name} to be an associative H-space',
                    code='h-space', vertex=j)


def codomain_complex(e: HwExpr) -> SimplicialComplex:
    if isinstance(e, Hw):
        return e.shape
    if isinstance(e, Folded):
        return folded_complex(e.inner.anchor, e.fold)
    raise ExprError('a single map has no codomain complex', code='not-a-map')


@dataclass(frozen=True)
class Domain:
    """Σ^suspensions of the smash of the factors, and its sphere dimension if known."""

    suspensions: int
    smash_factors: Tuple[str, ...]
    sphere_dim: Optional[int] = None


def domain(e: HwExpr) -> Domain:
    if isinstance(e, MapLeaf):
        return Domain(1, (e.name,), e.sphere_dim)
    if isinstance(e, Sum):
        dims = {t.sphere_dim for t in e.terms}
        return Domain(1, (e.terms[0].name,), dims.pop() if len(dims) == 1 else None)
    if isinstance(e, Folded):
        return domain(e.inner)
    parts = [domain(a) for a in e.args]
    suspensions = sum(p.suspensions - 1 for p in parts) + len(parts) - 1
    factors = tuple(f for p in parts for f in p.smash_factors)
    dims = [p.sphere_dim for p in parts]
    sphere_dim = None if None in dims else sum(dims) - 1
    return Domain(suspensions, factors, sphere_dim)


def degree(e: HwExpr) -> Optional[int]:
    return domain(e).sphere_dim


@dataclass(frozen=True)
class Permutation:
    """σ as the list of images (σ(1), …, σ(m))."""

    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'images', tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ExprError(f'{list(self.images)} is not a permutation', code='bad-permutation')

    @classmethod
    def identity(cls, m: int) -> 'Permutation':
        return cls(tuple(range(1, m + 1)))

    def __len__(self):
        return len(self.images)

    def inversions(self) -> Iterator[Tuple[int, int]]:
        """Pairs (a, b) of images with a listed before b and a > b."""
        for s, a in enumerate(self.images):
            for b in self.images[s + 1:]:
                if a > b:
                    yield a, b

    @property
    def sign(self) -> int:
        return -1 if sum(1 for _ in self.inversions()) % 2 else 1

    def apply(self, items: Sequence) -> List:
        return [items[n - 1] for n in self.images]


def koszul_sign(perm: Permutation, dims: Sequence[int]) -> int:
    """Product of (−1)^{p_a p_b} over the inversions (a, b) of perm."""
    if len(dims) != len(perm):
        raise ExprError(f'{len(dims)} degrees for a permutation of {len(perm)}', code='bad-dims')
    exponent = sum(dims[a - 1] * dims[b - 1] for a, b in perm.inversions())
    return -1 if exponent % 2 else 1


def _sort_key(e: HwExpr) -> Tuple:
    if isinstance(e, MapLeaf):
        return (0, natural_key(e.name), ())
    if isinstance(e, Sum):
        return (1, tuple(natural_key(t.name) for t in e.terms), ())
    if isinstance(e, Hw):
        return (2, (), tuple(_sort_key(a) for a in e.args))
    return (3, str(e.fold), _sort_key(e.inner))


def normalize_spherical(e: HwExpr) -> Tuple[HwExpr, int]:
    """Sort the arguments of every node by name; returns the Koszul sign paid."""
    for leaf in leaves(e):
        if leaf.sphere_dim is None:
            raise ExprError(f'{leaf.name} is not a sphere map', code='not-spherical')
    return _normalize(e)


def _normalize(e: HwExpr) -> Tuple[HwExpr, int]:
    if isinstance(e, (MapLeaf, Sum)):
        return e, 1
    if isinstance(e, Folded):
        inner, sign = _normalize(e.inner)
        return Folded(inner, e.fold), sign
    parts = [_normalize(a) for a in e.args]
    args = [a for a, _ in parts]
    sign = math.prod(s for _, s in parts)
    order = sorted(range(len(args)), key=lambda n: _sort_key(args[n]))
    perm = Permutation(tuple(n + 1 for n in order))
    sign *= koszul_sign(perm, [degree(a) for a in args])
    return Hw(perm.apply(args), e.ambient), sign


def _sums(e: HwExpr) -> List[Sum]:
    if isinstance(e, Sum):
        return [e]
    if isinstance(e, MapLeaf):
        return []
    if isinstance(e, Folded):
        return _sums(e.inner)
    return [s for a in e.args for s in _sums(a)]


def _replace(e: HwExpr, slot: Sum, term: MapLeaf) -> HwExpr:
    if e is slot:
        return term
    if isinstance(e, Hw):
        return Hw(tuple(_replace(a, slot, term) for a in e.args), e.ambient)
    if isinstance(e, Folded):
        return Folded(_replace(e.inner, slot, term), e.fold)
    return e


def expand_linear(e: HwExpr) -> List[HwExpr]:
    """hw(f + f', g) = hw(f, g) + hw(f', g), for suspension domains."""
    sums = _sums(e)
    if len(sums) != 1:
        raise ExprError(f'expected exactly one formal-sum slot, found {len(sums)}', code='sum-slots')
    slot, = sums
    for t in slot.terms:
        if not t.domain_is_suspension:
            raise ExprError('multilinearity requires suspension', code='not-suspension')
    return [_replace(e, slot, t) for t in slot.terms]


def render(e: HwExpr, ambient_name: str = 'K') -> str:
    if isinstance(e, MapLeaf):
        return e.name
    if isinstance(e, Sum):
        return '(' + '+'.join(t.name for t in e.terms) + ')'
    if isinstance(e, Folded):
        return f'nabla[{e.fold}]' + render(e.inner, ambient_name)
    anchor = f'^{{{ambient_name}}}' if e.ambient is not None else ''
    return f'hw{anchor}(' + ','.join(render(a, ambient_name) for a in e.args) + ')'


def trivializing_complexes(e: Hw) -> List[Tuple[str, SimplicialComplex]]:
    """
    Complexes whose presence in the ambient kills e: the full-simplex
    substitution Δ⟨shapes⟩, and ∂Δ⟨…⟩ with a full simplex at a nested slot.
    """
    shapes = [cell(a) for a in e.args]
    out = [('R2', join_all(shapes))]
    for n, a in enumerate(e.args):
        if isinstance(a, Hw):
            filled = join_all(cell(b) for b in a.args)
            out.append(('R3', _boundary_over(shapes[:n] + [filled] + shapes[n + 1:])))
    return out


def reanchor(e: Hw, ambient: SimplicialComplex) -> Hw:
    return Hw(e.args, ambient)


def _is_null(e: HwExpr) -> bool:
    if isinstance(e, MapLeaf):
        return e.is_null
    if isinstance(e, Sum):
        return all(t.is_null for t in e.terms)
    if isinstance(e, Folded):
        return _is_null(e.inner)
    return any(_is_null(a) for a in e.args)


def _dj_shaped(e: Hw) -> bool:
    """Depth two, one nested map of plain leaves, every leaf a degree 2 point map into one space."""
    nested = [a for a in e.args if isinstance(a, Hw)]
    if len(nested) != 1:
        return False
    flat = [a for a in e.args if not isinstance(a, Hw)] + list(nested[0].args)
    if not all(isinstance(a, MapLeaf) for a in flat):
        return False
    if len({a.codomain for a in flat}) != 1:
        return False
    return all(a.sphere_dim == 2 and a.shape is None for a in flat)


def _hw_verdict(e: Hw, mode: Mode) -> Verdict:
    ambient = e.anchor
    triv = trivializing_complexes(e)
    for rule, k in triv:
        if k.is_subcomplex(ambient):
            return Verdict(TRIVIAL, rule)
    if mode is Mode.DJ and _dj_shaped(e):
        _, full = triv[0]
        missing = tuple(m for m in full.maximal_faces if not ambient.is_face(m))
        return Verdict(NONTRIVIAL, 'R5', tuple(sorted(missing, key=face_key)))
    return Verdict(UNKNOWN)


def triviality(e: HwExpr, mode: Mode = Mode.GENERAL) -> Verdict:
    """
    Rules, first match wins: R1 a null map; R2 the ambient contains
    Δ⟨shapes⟩; R3 it contains ∂Δ⟨…, Δ at a nested slot, …⟩; R4b (folded)
    the inner map re-anchored over L_ψ is trivial by R2/R3; R5 (DJ mode)
    the iff-criterion for depth-two maps of degree 2 classes.
    """
    if not isinstance(e, (Hw, Folded)):
        raise ExprError('triviality needs a higher Whitehead map', code='not-a-map')
    if _is_null(e):
        return Verdict(TRIVIAL, 'R1')
    if isinstance(e, Hw):
        return _hw_verdict(e, mode)
    lpsi = max_folding_complex(e.inner.anchor, e.fold)
    over = _hw_verdict(reanchor(e.inner, lpsi), Mode.GENERAL)
    if over.is_trivial:
        return Verdict(TRIVIAL, 'R4b')
    return Verdict(UNKNOWN)

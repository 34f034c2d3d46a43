"""
Identity complexes K_Π of ordered partitions and the families of relations
among higher Whitehead maps they carry.

Every relation has one summand per block P_i of the partition:

    hw^{K}(hw(f_j : j in Q_i), f_i : i in P_i) ∘ σ_i

with Q_i the complement of P_i, both sorted, and σ_i the permutation
listing Q_i then P_i. Summands are annotated with their Koszul sign (when
every leaf is a sphere map), their degree and a triviality verdict.
"""

import dataclasses
import functools as ft
import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import config
from .complex import (SimplicialComplex, VertexId, VertexLike, as_face, boundary_simplex,
                      is_full_subcomplex, join, point, simplex, union, vertex, vertex_range)
from .errors import InputError, InvariantError, RelationError
from .folds import (Fold, FoldCase, classify_partition_fold, folded_complex,
                    is_block_respecting)
from .polyjoin import composition, slot_labels, substitution
from .whitehead import (Folded, Hw, HwExpr, MapLeaf, Mode, Permutation, SpaceRef, Status,
                        Verdict, check_fold_space, degree, koszul_sign, normalize_spherical,
                        render, triviality)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """An ordered partition P_1 | … | P_k of a vertex set."""

    blocks: Tuple[FrozenSet[VertexId], ...]

    def __post_init__(self):
        blocks = tuple(as_face(b) for b in self.blocks)
        object.__setattr__(self, 'blocks', blocks)
        if not blocks:
            raise RelationError('a partition needs at least one block', code='bad-partition')
        seen = set()
        for b in blocks:
            if not b:
                raise RelationError('empty block', code='bad-partition')
            if seen & b:
                raise RelationError('blocks overlap', code='bad-partition', face=seen & b)
            seen |= b

    @classmethod
    def of(cls, *blocks: Iterable[VertexLike]) -> 'Partition':
        return cls(tuple(as_face(b) for b in blocks))

    @classmethod
    def parse(cls, s: str) -> 'Partition':
        """Read `1|2,3|4`."""
        blocks = []
        for chunk in s.split('|'):
            labels = [x.strip() for x in chunk.split(',')]
            if not chunk.strip() or '' in labels:
                raise InputError(f'bad partition {s!r}', code='bad-partition')
            blocks.append(as_face(labels))
        try:
            return cls(tuple(blocks))
        except RelationError as e:
            raise InputError(f'bad partition {s!r}: {e.message}', code='bad-partition', face=e.face)

    @classmethod
    def singletons(cls, m: int) -> 'Partition':
        return cls(tuple(frozenset([v]) for v in vertex_range(m)))

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def vertices(self) -> Tuple[VertexId, ...]:
        return tuple(sorted(frozenset().union(*self.blocks)))

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def positions(self) -> Dict[VertexId, int]:
        """1-based position of every vertex in sorted order."""
        return {v: n for n, v in enumerate(self.vertices, 1)}

    def complement(self, n: int) -> FrozenSet[VertexId]:
        """Q_n, for the 0-based block index n."""
        return frozenset(self.vertices) - self.blocks[n]

    def block_of(self, v: VertexLike) -> int:
        v = vertex(v)
        for n, b in enumerate(self.blocks):
            if v in b:
                return n
        raise RelationError(f'{v} is in no block', code='stray-vertex', vertex=v)

    def __str__(self):
        return '|'.join(','.join(str(v) for v in sorted(b)) for b in self.blocks)


@dataclass(frozen=True)
class Summand:
    expr: HwExpr
    permutation: Permutation
    sign: Optional[int] = None
    triviality: Verdict = Verdict(Status.UNKNOWN)
    degree: Optional[int] = None
    coefficient: int = 1
    block: Optional[int] = None


@dataclass(frozen=True)
class Relation:
    """Σ_i summand_i = 0 in [ΣX, Y] over the complex `ambient`."""

    ambient: SimplicialComplex
    summands: Tuple[Summand, ...]
    partition: Optional[Partition] = None
    fold: Optional[Fold] = None

    @property
    def survivors(self) -> List[Summand]:
        return [s for s in self.summands if not s.triviality.is_trivial]


def identity_complex(partition: Partition) -> SimplicialComplex:
    """K_Π = sk^{k-3}Δ^{k-1}(∂Δ[P_1], …, ∂Δ[P_k]) on the partition's own labels."""
    if partition.k < 3:
        raise RelationError('identity complex requires k ≥ 3', code='small-partition')
    out = _composed_identity(partition)
    if config.debug_checks():
        for name, other in (('missing faces', identity_complex_from_mf(partition)),
                            ('pieces', identity_complex_from_pieces(partition))):
            if other != out:
                raise InvariantError(f'identity complex of {partition} disagrees with its {name} '
                                     f'construction: {out!r} vs {other!r}')
        log.debug('identity complex of %s cross-checked', partition)
    return out


@ft.lru_cache(maxsize=4096)
def _composed_identity(partition: Partition) -> SimplicialComplex:
    k = partition.k
    outer = simplex(vertex_range(k)).skeleton(k - 3)
    return composition(outer, [boundary_simplex(b) for b in partition.blocks], relabel=False)


def identity_complex_from_mf(partition: Partition) -> SimplicialComplex:
    """The complex whose minimal missing faces are the block complements."""
    return SimplicialComplex.from_minimal_missing_faces(
        partition.vertices, [partition.complement(n) for n in range(partition.k)])


def identity_complex_from_pieces(partition: Partition) -> SimplicialComplex:
    """⋃_i ∂Δ⟨∂Δ[Q_i], i_1, …, i_{p_i}⟩."""
    if partition.k < 3:
        raise RelationError('identity complex requires k ≥ 3', code='small-partition')
    out = None
    for n, block in enumerate(partition.blocks):
        cells = [boundary_simplex(partition.complement(n))] + [point(v) for v in sorted(block)]
        piece = substitution(boundary_simplex(vertex_range(len(cells))), cells, relabel=False)
        out = piece if out is None else union(out, piece)
    return out


def singleton_sign(i: int, dims: Sequence[int]) -> int:
    """(−1)^{p_i(p_{i+1}+…+p_m)}, i counted from 1."""
    exponent = dims[i - 1] * sum(dims[i:])
    return -1 if exponent % 2 else 1


def default_leaves(m: int, dims: Optional[Sequence[int]] = None,
                   codomain: SpaceRef = SpaceRef('Y', is_h_space=True, is_associative=True)
                   ) -> List[MapLeaf]:
    """f1..fm at vertices 1..m into one space; sphere maps when `dims` is given."""
    if dims is not None and len(dims) != m:
        raise InputError(f'{len(dims)} dimensions for {m} maps', code='bad-dims')
    if dims is None:
        return [MapLeaf(f'f{n}', domain_is_suspension=True, codomain=codomain) for n in range(1, m + 1)]
    return [MapLeaf(f'f{n}', sphere_dim=p, codomain=codomain) for n, p in enumerate(dims, 1)]


def _check_leaves(partition: Partition, leaves: Sequence[MapLeaf]) -> List[MapLeaf]:
    vs = partition.vertices
    if len(leaves) != len(vs):
        raise RelationError(f'{len(vs)} vertices but {len(leaves)} maps', code='leaf-count')
    spherical = all(leaf.sphere_dim is not None for leaf in leaves)
    for leaf in leaves:
        if spherical and leaf.sphere_dim < 2:
            raise RelationError(f'{leaf.name} maps out of S^{leaf.sphere_dim}, '
                                f'sphere maps need dimension at least 2', code='low-dimension')
        if not leaf.domain_is_suspension:
            raise RelationError(f'the domain of {leaf.name} must be a suspension',
                                code='not-suspension')
    return [leaf if leaf.vertex == v else dataclasses.replace(leaf, vertex=v)
            for leaf, v in zip(leaves, vs)]


def _check_contained(small: SimplicialComplex, ambient: SimplicialComplex):
    for m in small.maximal_faces:
        if not ambient.is_face(m):
            raise RelationError('ambient does not contain the relation complex',
                                code='ambient-too-small', face=m)


Annotate = Callable[[int, HwExpr], Verdict]


def _summands(partition: Partition, leaves: Sequence[MapLeaf], ambient: SimplicialComplex,
              mode: Mode, fold: Optional[Fold] = None,
              annotate: Optional[Annotate] = None) -> Tuple[Summand, ...]:
    by_vertex = dict(zip(partition.vertices, leaves))
    pos = partition.positions
    dims = [leaf.sphere_dim for leaf in leaves]
    spherical = None not in dims
    out = []
    for n, block in enumerate(partition.blocks):
        q, p = sorted(partition.complement(n)), sorted(block)
        inner = Hw([by_vertex[v] for v in q])
        expr = Hw([inner] + [by_vertex[v] for v in p], ambient)
        if fold is not None:
            expr = Folded(expr, fold)
        perm = Permutation(tuple(pos[v] for v in q + p))
        verdict = annotate(n, expr) if annotate else triviality(expr, mode)
        out.append(Summand(expr, perm,
                           sign=koszul_sign(perm, dims) if spherical else None,
                           triviality=verdict, degree=degree(expr), block=n))
    return tuple(out)


def relation(partition: Partition, leaves: Sequence[MapLeaf], mode: Mode = Mode.GENERAL,
             ambient: Optional[SimplicialComplex] = None) -> Relation:
    """The k-term relation over K_Π, or over any `ambient` containing it."""
    k_pi = identity_complex(partition)
    leaves = _check_leaves(partition, leaves)
    if ambient is None:
        ambient = k_pi
    else:
        _check_contained(k_pi, ambient)
    return Relation(ambient, _summands(partition, leaves, ambient, mode), partition)


def _moved_inner(partition: Partition, inner: Sequence[SimplicialComplex]) -> List[SimplicialComplex]:
    if len(inner) != partition.m:
        raise RelationError(f'{partition.m} vertices but {len(inner)} inner complexes',
                            code='pair-count')
    return [s.relabel(slot_labels(v, s.vertices)) for v, s in zip(partition.vertices, inner)]


def _shaped(leaves: Sequence[MapLeaf], shapes: Sequence[SimplicialComplex]) -> List[MapLeaf]:
    out = []
    for leaf, shape in zip(leaves, shapes):
        plain = shape == point(leaf.vertex)
        out.append(dataclasses.replace(leaf, shape=None if plain else shape))
    return out


def substituted_relation(partition: Partition, inner: Sequence[SimplicialComplex],
                         leaves: Sequence[MapLeaf], ambient: Optional[SimplicialComplex] = None,
                         mode: Mode = Mode.GENERAL) -> Relation:
    """
    The relation over K_Π⟨S_1, …, S_m⟩: leaf i lands in S_i, relabelled to
    the paths i·v (a one-vertex S_i becomes the vertex i).
    """
    k_pi = identity_complex(partition)
    leaves = _shaped(_check_leaves(partition, leaves), _moved_inner(partition, inner))
    s_pi = substitution(k_pi, inner)
    if ambient is None:
        ambient = s_pi
    else:
        _check_contained(s_pi, ambient)
    return Relation(ambient, _summands(partition, leaves, ambient, mode), partition)


def folded_relation(partition: Partition, fold: Fold, leaves: Sequence[MapLeaf],
                    mode: Mode = Mode.GENERAL, collected: bool = False) -> Relation:
    """
    The relation among the folds ∇ψ hw^{K_Π}(…). Folds inside one block, and
    folds moving more than one vertex, kill every summand; a single fold
    across blocks leaves the two summands of the blocks it touches.
    """
    k_pi = identity_complex(partition)
    leaves = _check_leaves(partition, leaves)
    fold.validate(k_pi)
    split = classify_partition_fold(partition.blocks, fold)
    touched = set()
    if split.case is FoldCase.CROSS_BLOCK:
        (i, j), = fold.pairs
        touched = {partition.block_of(i), partition.block_of(j)}
    log.debug('fold %s of %s is %s', fold, partition, split.case.value)

    def annotate(n: int, expr: HwExpr) -> Verdict:
        verdict = triviality(expr, mode)
        if verdict.rule == 'R1' or n in touched:
            return verdict
        return Verdict(Status.TRIVIAL, split.case.value)

    ambient = folded_complex(k_pi, fold)
    rel = Relation(ambient, _summands(partition, leaves, k_pi, mode, fold, annotate), partition, fold)
    return collect(rel) if collected else rel


def fold_within_relation(partition: Partition, inner: Sequence[SimplicialComplex],
                         fold: Optional[Fold], leaves: Sequence[MapLeaf],
                         null_slots: Iterable[VertexLike] = (),
                         mode: Mode = Mode.GENERAL) -> Relation:
    """
    The relation over K_Π⟨(S_1)_∇, …, (S_m)_∇⟩ for a fold of K_Π⟨S⟩ that
    keeps every S_i in place. Leaves listed in `null_slots` are the
    folded maps known to be null, which kills every summand.
    """
    null_slots = {vertex(v) for v in null_slots}
    if fold is None and not null_slots:
        return substituted_relation(partition, inner, leaves, mode=mode)
    k_pi = identity_complex(partition)
    leaves = _check_leaves(partition, leaves)
    shapes = _moved_inner(partition, inner)
    stray = null_slots - set(partition.vertices)
    if stray:
        raise RelationError('null slot outside the partition', code='stray-vertex', face=stray)
    folded = list(shapes)
    if fold is not None:
        s_pi = substitution(k_pi, inner)
        fold.validate(s_pi)
        if not is_block_respecting(fold, [s.vertices for s in shapes]):
            raise RelationError(f'fold {fold} moves a vertex out of its inner complex',
                                code='not-block-respecting')
        for n, (leaf, shape) in enumerate(zip(leaves, shapes)):
            part = fold.restrict(shape.vertices)
            if part is None:
                continue
            for j, block in part.blocks.items():
                check_fold_space(leaf.codomain, shape, j, block)
            folded[n] = folded_complex(shape, part)
    ambient = substitution(k_pi, folded, relabel=False)
    if fold is not None and config.debug_checks():
        direct = folded_complex(substitution(k_pi, inner), fold)
        if direct != ambient:
            raise InvariantError(f'folding K_Π⟨S⟩ gives {direct!r}, folding each S_i gives {ambient!r}')
    leaves = _shaped(leaves, folded)
    leaves = [dataclasses.replace(leaf, is_null=True) if leaf.vertex in null_slots else leaf
              for leaf in leaves]
    return Relation(ambient, _summands(partition, leaves, ambient, mode), partition, fold)


def fold_across_relation(m: int, k1: SimplicialComplex, km: SimplicialComplex, fold: Fold,
                         leaves: Sequence[MapLeaf], mode: Mode = Mode.GENERAL) -> Relation:
    """
    The three-term relation for Π = {1} | {2,…,m−1} | {m} over K_Π⟨K_1, •, …, •, K_m⟩
    folded by ψ, which must carry K_m (labels m·v) isomorphically onto a full
    subcomplex of K_1 (labels 1·v). The folded ambient is ∂Δ⟨K_1, 2, …, m−1⟩.
    The middle summand, the one holding hw(f_1, f_m), is trivial exactly
    when folding K_1 ∗ K_m gives back K_1.
    """
    if m < 3:
        raise RelationError('folding across needs m ≥ 3', code='small-partition')
    partition = Partition.of([1], range(2, m), [m])
    inner = [k1] + [point(1)] * (m - 2) + [km]
    shapes = _moved_inner(partition, inner)
    s1, sm = shapes[0], shapes[-1]
    if fold.I != sm.vertex_set:
        raise RelationError('the fold must move exactly the vertices of K_m',
                            code='bad-fold', face=fold.I ^ sm.vertex_set)
    if not fold.J <= s1.vertex_set:
        raise RelationError('the fold must land in K_1', code='bad-fold', face=fold.J - s1.vertex_set)
    if len(fold.J) != len(fold.I):
        raise RelationError('the fold must be injective on K_m', code='bad-fold')
    image = sm.relabel(fold.mapping)
    if not is_full_subcomplex(s1, image):
        raise RelationError('the fold does not carry K_m onto a full subcomplex of K_1',
                            code='not-full-subcomplex')
    k_pi = identity_complex(partition)
    leaves = _shaped(_check_leaves(partition, leaves), shapes)
    s_pi = substitution(k_pi, inner)
    ambient = folded_complex(s_pi, fold)
    if config.debug_checks():
        cells = [s1] + [point(v) for v in range(2, m)]
        expected = substitution(boundary_simplex(vertex_range(m - 1)), cells, relabel=False)
        if expected != ambient:
            raise InvariantError(f'folded ambient {ambient!r} is not ∂Δ⟨K_1, 2, …⟩')
    middle = folded_complex(join(s1, sm), fold) == s1

    def annotate(n: int, expr: HwExpr) -> Verdict:
        verdict = triviality(expr, mode)
        if n != 1 or verdict.rule == 'R1':
            return verdict
        return Verdict(Status.TRIVIAL, 'fold-across') if middle else Verdict(Status.UNKNOWN)

    return Relation(ambient, _summands(partition, leaves, s_pi, mode, fold, annotate), partition, fold)


def collect(rel: Relation) -> Relation:
    """
    Merge equal surviving summands into integer coefficients. With signs,
    summands are compared after sorting their arguments, paying the Koszul
    sign; otherwise expression and permutation must both agree.
    """
    spherical = all(s.sign is not None for s in rel.summands)
    out: List[Summand] = []
    index: Dict[object, Tuple[int, int]] = {}
    for s in rel.summands:
        if s.triviality.is_trivial:
            out.append(s)
            continue
        if spherical:
            norm, paid = normalize_spherical(s.expr)
            key, unit = render(norm), s.sign * paid
        else:
            key, unit = (render(s.expr), s.permutation.images), 1
        if key not in index:
            index[key] = (len(out), unit)
            out.append(s)
            continue
        at, first_unit = index[key]
        kept = out[at]
        out[at] = dataclasses.replace(kept, coefficient=kept.coefficient + unit * first_unit * s.coefficient)
        log.debug('collected %s into summand %d', key, at)
    return dataclasses.replace(rel, summands=tuple(out))

"""
Folds: vertex identifications ψ: I → J of a complex, the folded complex
K_∇ and the largest complex L_ψ folding onto it.
"""

import enum
import functools as ft
import itertools as it
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import more_itertools as mit

from . import config
from .complex import (Face, SimplicialComplex, VertexId, VertexLike, as_face, boundary_simplex,
                      join, point, simplex, vertex)
from .errors import FoldError, InputError, InvariantError
from .polyjoin import substitution

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fold:
    """A surjection ψ: I → J between disjoint vertex sets, kept as sorted (i, ψ(i)) pairs."""

    pairs: Tuple[Tuple[VertexId, VertexId], ...]

    def __post_init__(self):
        if not self.pairs:
            raise FoldError('a fold needs at least one folded vertex', code='empty-fold')
        sources = [i for i, _ in self.pairs]
        if len(set(sources)) != len(sources):
            raise FoldError('a vertex is folded onto two targets', code='bad-fold')
        both = set(sources) & {j for _, j in self.pairs}
        if both:
            raise FoldError('folded and target vertices overlap', code='bad-fold', face=both)

    @classmethod
    def from_mapping(cls, mapping: Mapping[VertexLike, VertexLike]) -> 'Fold':
        return cls(tuple(sorted((vertex(i), vertex(j)) for i, j in mapping.items())))

    @classmethod
    def parse(cls, s: str) -> 'Fold':
        """Read `4->1;5->2`."""
        mapping = {}
        for chunk in s.split(';'):
            if not chunk.strip():
                continue
            if '->' not in chunk:
                raise InputError(f'bad fold entry {chunk!r}, expected i->j', code='bad-map')
            i, j = (part.strip() for part in chunk.split('->', 1))
            if i in mapping:
                raise InputError(f'vertex {i} is mapped twice', code='bad-map')
            mapping[i] = j
        return cls.from_mapping(mapping)

    @ft.cached_property
    def mapping(self) -> Dict[VertexId, VertexId]:
        return dict(self.pairs)

    @property
    def I(self) -> FrozenSet[VertexId]:
        return frozenset(i for i, _ in self.pairs)

    @property
    def J(self) -> FrozenSet[VertexId]:
        return frozenset(j for _, j in self.pairs)

    @property
    def blocks(self) -> Dict[VertexId, FrozenSet[VertexId]]:
        """I_j = ψ^{-1}(j) for every j in J."""
        out = {}
        for i, j in self.pairs:
            out.setdefault(j, set()).add(i)
        return {j: frozenset(out[j]) for j in sorted(out)}

    @property
    def is_single(self) -> bool:
        return len(self.pairs) == 1

    def psi(self, v: VertexId) -> VertexId:
        return self.mapping.get(v, v)

    def singles(self) -> List['Fold']:
        return [Fold((pair,)) for pair in self.pairs]

    def reversed(self) -> 'Fold':
        if not self.is_single:
            raise FoldError('only a single-vertex fold can be reversed', code='bad-fold')
        (i, j), = self.pairs
        return Fold(((j, i),))

    def restrict(self, vertices: Iterable[VertexLike]) -> Optional['Fold']:
        """The part of the fold moving vertices inside `vertices`, None if nothing moves."""
        keep = as_face(vertices)
        pairs = tuple(p for p in self.pairs if p[0] in keep)
        return Fold(pairs) if pairs else None

    def validate(self, k: SimplicialComplex):
        outside = (self.I | self.J) - k.vertex_set
        if outside:
            raise FoldError('fold uses vertices outside the complex', code='stray-vertex',
                            face=outside)

    def to_dict(self) -> Dict:
        return {
            'I': [str(i) for i in sorted(self.I)],
            'J': [str(j) for j in sorted(self.J)],
            'map': {str(i): str(j) for i, j in self.pairs},
        }

    def __str__(self):
        return ';'.join(f'{i}->{j}' for i, j in self.pairs)


def apply_fold_face(fold: Fold, sigma: Iterable[VertexLike]) -> Face:
    return frozenset(fold.psi(v) for v in as_face(sigma))


def folded_complex(k: SimplicialComplex, fold: Fold) -> SimplicialComplex:
    """ψ̄(K) on the vertices of K outside I; J keeps its labels."""
    fold.validate(k)
    out = SimplicialComplex(k.vertex_set - fold.I,
                            [apply_fold_face(fold, m) for m in k.maximal_faces])
    if config.debug_checks():
        check = folded_complex_by_preimage(k, fold)
        if check != out:
            raise InvariantError(f'fold image {out!r} disagrees with preimage scan {check!r}')
        log.debug('fold %s cross-checked', fold)
    return out


def folded_complex_by_preimage(k: SimplicialComplex, fold: Fold) -> SimplicialComplex:
    """
    The folded complex built from the other side: σ ⊆ V∖I is kept when some
    set mapping onto σ is a face of K. For a single fold i → j this is
    "σ ∈ K or (σ∖{j}) ⊔ {i} ∈ K".
    """
    fold.validate(k)
    blocks = fold.blocks
    rest = sorted(k.vertex_set - fold.I)
    kept = []
    for sigma in map(frozenset, mit.powerset(rest)):
        fixed = sigma - fold.J
        lifts = []
        for j in sorted(sigma & fold.J):
            fibre = sorted(blocks[j] | {j})
            lifts.append([frozenset(c) for c in mit.powerset(fibre) if c])
        if any(k.is_face(fixed.union(*choice)) for choice in it.product(*lifts)):
            kept.append(sigma)
    return SimplicialComplex(rest, kept)


def max_folding_complex(k: SimplicialComplex, fold: Fold) -> SimplicialComplex:
    """L_ψ = K_∇⟨Δ[{t} ⊔ I_t]⟩ on the original vertex set."""
    folded = folded_complex(k, fold)
    blocks = fold.blocks
    inner = [simplex({t} | blocks[t]) if t in blocks else point(t) for t in folded.vertices]
    return substitution(folded, inner, relabel=False)


def is_block_respecting(fold: Fold, blocks: Sequence[Iterable[VertexId]]) -> bool:
    """ψ(B ∩ I) ⊆ B for every block B."""
    owner = {}
    for n, block in enumerate(blocks):
        for v in as_face(block):
            owner[v] = n
    return all(i in owner and owner.get(i) == owner.get(j) for i, j in fold.pairs)


class FoldCase(enum.Enum):
    WITHIN_BLOCK = 'within-block'
    CROSS_BLOCK = 'cross-block'
    GENERAL = 'general'


@dataclass(frozen=True)
class FoldClassification:
    case: FoldCase
    block: Optional[int]
    folded: SimplicialComplex
    max_folding: SimplicialComplex


def classify_partition_fold(blocks: Sequence[Iterable[VertexLike]], fold: Fold) -> FoldClassification:
    """
    Expected fold and L_ψ of the identity complex of `blocks`:
    within a block P_l they are ∂Δ[V∖P_l] ∗ Δ[P_l∖I] and ∂Δ[V∖P_l] ∗ Δ[P_l];
    a single cross-block fold gives ∂Δ[V∖I] and the complex missing exactly
    V∖I and V∖J; anything else gives Δ[V∖I] and Δ[V].
    """
    blocks = [as_face(b) for b in blocks]
    everything = frozenset().union(*blocks)
    moved = fold.I | fold.J
    if not moved <= everything:
        raise FoldError('fold uses vertices outside the partition', code='stray-vertex',
                        face=moved - everything)
    for n, block in enumerate(blocks):
        if moved <= block:
            rest = everything - block
            return FoldClassification(FoldCase.WITHIN_BLOCK, n,
                                      join(boundary_simplex(rest), simplex(block - fold.I)),
                                      join(boundary_simplex(rest), simplex(block)))
    if fold.is_single:
        return FoldClassification(
            FoldCase.CROSS_BLOCK, None,
            boundary_simplex(everything - fold.I),
            SimplicialComplex.from_minimal_missing_faces(
                everything, [everything - fold.I, everything - fold.J]))
    return FoldClassification(FoldCase.GENERAL, None,
                              simplex(everything - fold.I), simplex(everything))

"""Polyhedral joins and their substitution / composition specialisations."""

import itertools as it
import logging
from typing import Dict, List, Sequence, Tuple

from .complex import (Face, SimplicialComplex, SimplicialPair, VertexId, empty_complex,
                      simplex)
from .errors import ComplexError
from .util import face_key

log = logging.getLogger(__name__)

Labels = Dict[VertexId, VertexId]


def slot_labels(slot: VertexId, vs: Sequence[VertexId], flatten: bool = True,
                relabel: bool = True) -> Labels:
    """Where the vertices of the pair at `slot` land in the join."""
    if not relabel:
        return {v: v for v in vs}
    if flatten and len(vs) == 1:
        return {vs[0]: slot}
    return {v: slot.child(v) for v in vs}


def _prepare(k: SimplicialComplex, pairs: Sequence[SimplicialPair],
             flatten: bool, relabel: bool) -> List[Labels]:
    if k.is_void:
        raise ComplexError('polyhedral join over a void complex', code='void')
    if len(pairs) != len(k.vertices):
        raise ComplexError(f'outer complex has {len(k.vertices)} vertices '
                           f'but {len(pairs)} pairs were given', code='pair-count')
    labels = []
    seen = set()
    for slot, pair in zip(k.vertices, pairs):
        if pair.big.is_void:
            raise ComplexError('void complex at a join slot', code='void', vertex=slot)
        slot_map = slot_labels(slot, pair.vertices, flatten, relabel)
        clash = seen & set(slot_map.values())
        if clash:
            raise ComplexError('join slots share vertices', code='overlap', face=clash)
        seen.update(slot_map.values())
        labels.append(slot_map)
    return labels


def _moved(faces: Sequence[Face], slot_map: Labels) -> List[Face]:
    return [frozenset(slot_map[v] for v in f) for f in faces]


def polyhedral_join(k: SimplicialComplex, pairs: Sequence[SimplicialPair],
                    flatten: bool = True, relabel: bool = True) -> SimplicialComplex:
    """
    The union over faces σ of k of the joins of S_i (i in σ) and T_i (i not
    in σ). The pair at slot i is matched with the i-th vertex of k in
    sorted order; its vertex v is renamed to the path i·v, or to i itself
    when the pair has a single vertex and `flatten` is on. With `relabel`
    off the pair labels are kept and must be disjoint.
    """
    pairs = list(pairs)
    labels = _prepare(k, pairs, flatten, relabel)
    bigs = [_moved(p.big.maximal_faces, m) for p, m in zip(pairs, labels)]
    smalls = [_moved(p.small.maximal_faces, m) for p, m in zip(pairs, labels)]
    out = set()
    for sigma in k.faces:
        choices = [bigs[n] if slot in sigma else smalls[n] for n, slot in enumerate(k.vertices)]
        for combo in it.product(*choices):
            out.add(frozenset().union(*combo))
    vertices = [v for m in labels for v in m.values()]
    return SimplicialComplex(vertices, out)


def substitution(k: SimplicialComplex, inner: Sequence[SimplicialComplex],
                 flatten: bool = True, relabel: bool = True) -> SimplicialComplex:
    """K⟨S_1,…,S_m⟩, the join with pairs (S_i, {∅})."""
    pairs = [SimplicialPair(s, empty_complex(s.vertices)) for s in inner]
    return polyhedral_join(k, pairs, flatten, relabel)


def composition(k: SimplicialComplex, inner: Sequence[SimplicialComplex],
                flatten: bool = True, relabel: bool = True) -> SimplicialComplex:
    """K(T_1,…,T_m), the join with pairs (Δ, T_i)."""
    pairs = [SimplicialPair(simplex(t.vertices), t) for t in inner]
    return polyhedral_join(k, pairs, flatten, relabel)


def mf_polyhedral_join(k: SimplicialComplex, pairs: Sequence[SimplicialPair],
                       flatten: bool = True, relabel: bool = True) -> Tuple[Face, ...]:
    """
    Minimal missing faces of the polyhedral join, from those of its pieces:
    MF(S_i) for every slot i, plus the joins of τ_i in MF(T_i) ∩ S_i over
    the slots of each κ in MF(k). Requires every vertex of k to be a face
    and nonvoid small members, else the join is enumerated.
    """
    pairs = list(pairs)
    labels = _prepare(k, pairs, flatten, relabel)
    if k.ghosts or any(p.small.is_void for p in pairs):
        log.debug('MF formula skipped (ghost outer vertex or void small member), enumerating')
        return polyhedral_join(k, pairs, flatten, relabel).minimal_missing_faces()
    out = set()
    for pair, slot_map in zip(pairs, labels):
        out.update(_moved(pair.big.minimal_missing_faces(), slot_map))
    index = {slot: n for n, slot in enumerate(k.vertices)}
    for kappa in k.minimal_missing_faces():
        options = []
        for slot in sorted(kappa):
            n = index[slot]
            big = pairs[n].big
            taus = [t for t in pairs[n].small.minimal_missing_faces() if big.is_face(t)]
            options.append(_moved(taus, labels[n]))
        for combo in it.product(*options):
            out.add(frozenset().union(*combo))
    return tuple(sorted(out, key=face_key))

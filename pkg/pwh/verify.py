"""
Brute-force oracles, instance generators and the η-matrix.

Every suite checks a module against a slow construction written here from
the defining property, touching nothing of the checked module beyond
`SimplicialComplex` itself.
"""

import itertools as it
import logging
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import more_itertools as mit

from .complex import (Face, SimplicialComplex, SimplicialPair, VertexId, boundary_simplex, point,
                      simplex, vertex_range, void_complex)
from .errors import PwhError, VerifyError
from .folds import (Fold, FoldCase, classify_partition_fold, folded_complex, folded_complex_by_preimage,
                    max_folding_complex)
from .polyjoin import mf_polyhedral_join, polyhedral_join, substitution
from .relations import (Partition, default_leaves, fold_across_relation, folded_relation,
                        identity_complex, identity_complex_from_mf, identity_complex_from_pieces,
                        relation, singleton_sign)
from .whitehead import Mode, Permutation, Status, codomain_complex, koszul_sign, triviality

log = logging.getLogger(__name__)

STAR, ONE, MINUS = '∗', '1', '−'

EXHAUSTIVE_MAX = 5
MAX_COUNTEREXAMPLES = 5


@dataclass(frozen=True)
class EtaMatrix:
    k: int
    entries: Tuple[Tuple[str, ...], ...]

    def __call__(self, i: int, j: int) -> str:
        """η(i, j), 1-based."""
        return self.entries[i - 1][j - 1]

    def render(self) -> str:
        return '\n'.join(' '.join(row) for row in self.entries)


def eta_matrix(k: int) -> EtaMatrix:
    """
    ∗ on the diagonal; 1 above the anti-diagonal and on its upper half;
    − elsewhere. For even k the entries (k/2+1, k/2−1) and (k/2+1, k/2)
    are swapped.
    """
    if k < 3:
        raise VerifyError(f'η-matrix needs k ≥ 3, got {k}', code='bad-k')
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if i == j:
                row.append(STAR)
            elif i + j < k + 1 or (i + j == k + 1 and i < j):
                row.append(ONE)
            else:
                row.append(MINUS)
        rows.append(row)
    if k % 2 == 0:
        row = rows[k // 2]
        row[k // 2 - 2], row[k // 2 - 1] = row[k // 2 - 1], row[k // 2 - 2]
    return EtaMatrix(k, tuple(tuple(r) for r in rows))


def check_eta_separation(k: int) -> bool:
    """Every pair i < j is separated by some r with η(i, r) = 1 and η(j, r) = −."""
    eta = eta_matrix(k)
    for i, j in it.combinations(range(1, k + 1), 2):
        if not any(eta(i, r) == ONE and eta(j, r) == MINUS
                   for r in range(1, k + 1) if r not in (i, j)):
            return False
    return True


# generators

def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every complex on the vertices 1..n, as the antichains of subsets of its faces."""
    if n > EXHAUSTIVE_MAX:
        raise VerifyError(f'exhaustive enumeration stops at {EXHAUSTIVE_MAX} vertices, got {n}',
                          code='too-large')
    vs = vertex_range(n)
    subsets = [frozenset(s) for s in mit.powerset(vs)]

    def extend(start: int, chosen: List[Face]) -> Iterator[List[Face]]:
        yield chosen
        for i in range(start, len(subsets)):
            s = subsets[i]
            if any(s <= c or c <= s for c in chosen):
                continue
            yield from extend(i + 1, chosen + [s])

    for antichain in extend(0, []):
        yield SimplicialComplex(vs, antichain)


def random_complex(n: int, seed: int, ghosts: bool = True) -> SimplicialComplex:
    rng = random.Random(seed)
    vs = vertex_range(n)
    faces = [frozenset()]
    if not ghosts:
        faces.extend(frozenset([v]) for v in vs)
    for _ in range(rng.randint(0, n + 1)):
        faces.append(frozenset(rng.sample(vs, rng.randint(1, n))))
    return SimplicialComplex(vs, faces)


def random_partition(m: int, k: int, seed: int) -> Partition:
    if not 1 <= k <= m:
        raise VerifyError(f'cannot split {m} vertices into {k} blocks', code='bad-partition')
    rng = random.Random(seed)
    vs = vertex_range(m)
    rng.shuffle(vs)
    blocks = [{v} for v in vs[:k]]
    for v in vs[k:]:
        blocks[rng.randrange(k)].add(v)
    return Partition.of(*blocks)


def random_fold(k: SimplicialComplex, seed: int) -> Fold:
    vs = list(k.vertices)
    if len(vs) < 2:
        raise VerifyError('a fold needs two vertices', code='too-small')
    rng = random.Random(seed)
    rng.shuffle(vs)
    nj = rng.randint(1, len(vs) // 2)
    ni = rng.randint(nj, len(vs) - nj)
    targets, sources = vs[:nj], vs[nj:nj + ni]
    mapping = {i: targets[n] if n < nj else rng.choice(targets) for n, i in enumerate(sources)}
    return Fold.from_mapping(mapping)


def enumerate_partitions(m: int, k_min: int = 3) -> Iterator[Partition]:
    for blocks in mit.set_partitions(vertex_range(m)):
        if len(blocks) >= k_min:
            yield Partition.of(*sorted(blocks, key=min))


def enumerate_folds(vertices: Sequence[VertexId]) -> Iterator[Fold]:
    """Every surjection between disjoint nonempty vertex subsets."""
    vs = sorted(vertices)
    for targets in map(list, mit.powerset(vs)):
        if not targets:
            continue
        rest = [v for v in vs if v not in targets]
        for sources in map(list, mit.powerset(rest)):
            if len(sources) < len(targets):
                continue
            for image in it.product(targets, repeat=len(sources)):
                if set(image) == set(targets):
                    yield Fold(tuple(zip(sources, image)))


def enumerate_partition_shapes(m: int, k_min: int = 3) -> Iterator[Partition]:
    """One partition of 1..m into contiguous blocks per multiset of block sizes, largest first."""
    for parts in mit.partitions(vertex_range(m)):
        sizes = [len(p) for p in parts]
        if len(parts) >= k_min and sizes == sorted(sizes, reverse=True):
            yield Partition.of(*parts)


def _block_symmetries(partition: Partition) -> List[Dict[VertexId, VertexId]]:
    """Generators of the relabellings fixing the partition up to block order."""
    blocks = [sorted(b) for b in partition.blocks]
    out = [{a: b, b: a} for block in blocks for a, b in mit.pairwise(block)]
    for p, q in mit.pairwise(blocks):
        if len(p) == len(q):
            out.append({**dict(zip(p, q)), **dict(zip(q, p))})
    return out


def fold_orbit_representatives(partition: Partition,
                               folds: Optional[Sequence[Fold]] = None) -> Iterator[Fold]:
    """
    One fold per orbit of the folds of the partition's vertices under the
    relabellings that preserve its blocks. The identity complex and the
    classification of a fold are the same along an orbit up to renaming.
    """
    symmetries = _block_symmetries(partition)
    seen: Set[FrozenSet[Tuple[VertexId, VertexId]]] = set()
    for fold in (folds if folds is not None else enumerate_folds(partition.vertices)):
        key = frozenset(fold.pairs)
        if key in seen:
            continue
        yield fold
        seen.add(key)
        frontier = [key]
        while frontier:
            pairs = frontier.pop()
            for g in symmetries:
                image = frozenset((g.get(i, i), g.get(j, j)) for i, j in pairs)
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)


# oracles

def _subsets(vs: Sequence[VertexId]) -> Iterator[Face]:
    return map(frozenset, mit.powerset(sorted(vs)))


def _brute_faces(k: SimplicialComplex) -> Set[Face]:
    return {s for s in _subsets(k.vertices) if k.is_face(s)}


def _brute_mf(k: SimplicialComplex) -> Set[Face]:
    return {s for s in _subsets(k.vertices)
            if not k.is_face(s) and all(k.is_face(s - {v}) for v in s)}


def _brute_dual(k: SimplicialComplex) -> Set[Face]:
    return {k.vertex_set - s for s in _subsets(k.vertices) if not k.is_face(s)}


def _slot_names(slot: VertexId, vs: Sequence[VertexId]) -> Dict[VertexId, VertexId]:
    if len(vs) == 1:
        return {vs[0]: slot}
    return {v: VertexId(slot.path + v.path) for v in vs}


def _brute_pjoin(k: SimplicialComplex, pairs: Sequence[SimplicialPair]) -> Set[Face]:
    """τ is a face iff every part lies in S_i and the parts outside T_i span a face of k."""
    back = {}
    for slot, pair in zip(k.vertices, pairs):
        for v, w in _slot_names(slot, pair.big.vertices).items():
            back[w] = (slot, pair, v)
    out = set()
    for tau in _subsets(list(back)):
        parts: Dict[VertexId, Set[VertexId]] = {slot: set() for slot in k.vertices}
        for w in tau:
            parts[back[w][0]].add(back[w][2])
        ok, loose = True, set()
        for slot, pair in zip(k.vertices, pairs):
            if not pair.big.is_face(parts[slot]):
                ok = False
                break
            if not pair.small.is_face(parts[slot]):
                loose.add(slot)
        if ok and k.is_face(loose):
            out.add(tau)
    return out


def _brute_fold(k: SimplicialComplex, fold: Fold) -> Set[Face]:
    m = fold.mapping
    return {frozenset(m.get(v, v) for v in s) for s in _brute_faces(k)}


def _brute_lpsi(k: SimplicialComplex, fold: Fold) -> Set[Face]:
    folded = _brute_fold(k, fold)
    m = fold.mapping
    return {s for s in _subsets(k.vertices) if frozenset(m.get(v, v) for v in s) in folded}


def _brute_identity(partition: Partition) -> Set[Face]:
    vs = set(partition.vertices)
    complements = [frozenset(vs - b) for b in partition.blocks]
    return {s for s in _subsets(partition.vertices) if not any(q <= s for q in complements)}


def _bubble_sign(images: Sequence[int], dims: Sequence[int]) -> int:
    xs, sign = list(images), 1
    for end in range(len(xs) - 1, 0, -1):
        for n in range(end):
            if xs[n] > xs[n + 1]:
                if dims[xs[n] - 1] * dims[xs[n + 1] - 1] % 2:
                    sign = -sign
                xs[n], xs[n + 1] = xs[n + 1], xs[n]
    return sign


# reports

@dataclass(frozen=True)
class Budget:
    max_vertices: int = 7
    samples: int = 200
    seed: int = 42


@dataclass
class CheckResult:
    suite: str
    check: str
    cases: int = 0
    failed: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def expect(self, ok: bool, detail: Callable[[], str]):
        self.cases += 1
        if not ok:
            self.failed += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(detail())

    def to_dict(self) -> Dict:
        return {'suite': self.suite, 'check': self.check, 'cases': self.cases,
                'failed': self.failed, 'counterexamples': list(self.counterexamples)}


@dataclass
class Report:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_dict(self) -> Dict:
        return {'ok': self.ok, 'results': [r.to_dict() for r in self.results]}

    def to_text(self) -> str:
        width = max([len(r.check) for r in self.results] + [5])
        lines = [f'{"suite":<14} {"check":<{width}} {"cases":>7}  result']
        for r in self.results:
            lines.append(f'{r.suite:<14} {r.check:<{width}} {r.cases:>7}  '
                         + ('ok' if r.ok else f'FAILED ({r.failed})'))
            lines.extend(f'    {c}' for c in r.counterexamples)
        lines.append('all checks passed' if self.ok else 'some checks failed')
        return '\n'.join(lines)


Suite = Callable[[Budget], List[CheckResult]]
SUITES: Dict[str, Suite] = {}


def _suite(name: str) -> Callable[[Suite], Suite]:
    def register(fn: Suite) -> Suite:
        SUITES[name] = fn
        return fn
    return register


def _exhaustive_sizes(budget: Budget, cap: int = EXHAUSTIVE_MAX) -> range:
    return range(0, min(budget.max_vertices, cap) + 1)


def _complexes(budget: Budget, random_max: int, count: int,
               cap: int = EXHAUSTIVE_MAX) -> Iterator[SimplicialComplex]:
    for n in _exhaustive_sizes(budget, cap):
        yield from enumerate_complexes(n)
    rng = random.Random(budget.seed)
    for _ in range(count):
        yield random_complex(rng.randint(1, random_max), rng.randrange(2 ** 32))


@_suite('mf')
def _mf_suite(budget: Budget) -> List[CheckResult]:
    scan = CheckResult('mf', 'minimal missing faces are the minimal non-faces')
    rebuild = CheckResult('mf', 'a complex is determined by its minimal missing faces')
    for k in _complexes(budget, 9, budget.samples):
        if k.is_void:
            continue
        mf = set(k.minimal_missing_faces())
        scan.expect(mf == _brute_mf(k), lambda: f'{k!r}')
        rebuild.expect(SimplicialComplex.from_minimal_missing_faces(k.vertices, mf) == k,
                       lambda: f'{k!r}')
    return [scan, rebuild]


@_suite('dual')
def _dual_suite(budget: Budget) -> List[CheckResult]:
    faces = CheckResult('dual', 'Alexander dual faces are the complements of non-faces')
    twice = CheckResult('dual', 'Alexander duality is an involution')
    swap = CheckResult('dual', 'missing faces of the Alexander dual complement the facets')
    for k in _complexes(budget, 9, budget.samples * 5 // 2):
        if k.is_void:
            continue
        d = k.alexander_dual()
        faces.expect(set(d.faces) == _brute_dual(k), lambda: f'{k!r}')
        if d.is_void:
            continue
        twice.expect(d.alexander_dual() == k, lambda: f'{k!r}')
        swap.expect(set(d.minimal_missing_faces()) == {k.vertex_set - m for m in k.maximal_faces},
                    lambda: f'{k!r}')
    return [faces, twice, swap]


def _random_pair(rng: random.Random, n: int) -> SimplicialPair:
    vs = vertex_range(n)
    big = random_complex(n, rng.randrange(2 ** 32))
    if rng.random() < 0.15:
        return SimplicialPair(big, void_complex(vs))
    kept = [m for m in big.maximal_faces if rng.random() < 0.5]
    small = SimplicialComplex(vs, [frozenset(rng.sample(sorted(m), rng.randint(0, len(m)))) for m in kept]
                              + [frozenset()])
    return SimplicialPair(big, small)


def _small_pairs(n_max: int) -> List[SimplicialPair]:
    """Every pair T ⊆ S on 1..n vertices for n ≤ n_max, void T and ghost vertices included."""
    out = []
    for n in range(1, n_max + 1):
        everything = list(enumerate_complexes(n))
        for big in everything:
            if big.is_void:
                continue
            out.extend(SimplicialPair(big, small) for small in everything if small.is_subcomplex(big))
    return out


def _outers(n: int) -> Iterator[SimplicialComplex]:
    return (k for k in enumerate_complexes(n) if not k.is_void and not k.ghosts)


@_suite('pjoin')
def _pjoin_suite(budget: Budget) -> List[CheckResult]:
    faces = CheckResult('pjoin', 'polyhedral join face criterion')
    mf = CheckResult('pjoin', 'missing-face formula for polyhedral joins')
    rng = random.Random(budget.seed)
    everything = _small_pairs(min(budget.max_vertices, 3))
    tiny = [p for p in everything if len(p.big.vertices) == 1]
    cases = []
    for n in range(1, min(budget.max_vertices, 3) + 1):
        for k in _outers(n):
            for pair in everything:
                cases.append((k, [pair] + [rng.choice(tiny) for _ in k.vertices[1:]]))
    if budget.max_vertices >= 4:
        narrow = [p for p in everything if len(p.big.vertices) <= 2]
        for k in _outers(4):
            cases.append((k, [rng.choice(narrow) for _ in k.vertices]))
    for _ in range(budget.samples):
        k = random_complex(rng.randint(3, 4), rng.randrange(2 ** 32), ghosts=False)
        cases.append((k, [_random_pair(rng, rng.randint(1, 2)) for _ in k.vertices]))
    for k, pairs in cases:
        joined = polyhedral_join(k, pairs)
        expected = _brute_pjoin(k, pairs)
        faces.expect(set(joined.faces) == expected, lambda: f'{k!r} with {pairs!r}')
        if joined.is_void:
            continue
        got = set(mf_polyhedral_join(k, pairs))
        mf.expect(got == _brute_mf(joined), lambda: f'{k!r} with {pairs!r}')
    return [faces, mf]


FIGURE_COMPLEX = SimplicialComplex(vertex_range(4), [{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}])


@_suite('folds')
def _folds_suite(budget: Budget) -> List[CheckResult]:
    fixture = CheckResult('folds', 'the square with a diagonal folds along 4->1 onto ∂Δ[1,2,3]')
    image = CheckResult('folds', 'a folded complex is the image of the faces')
    preimage = CheckResult('folds', 'a folded complex is described by preimages')
    symmetry = CheckResult('folds', 'folds i->j and j->i agree up to renaming')
    iterated = CheckResult('folds', 'a fold is the composite of its single folds in any order')
    commute = CheckResult('folds', 'block-respecting folds commute with substitution')
    maximal = CheckResult('folds', 'the largest folding complex holds every complex folding inside')

    fold = Fold.parse('4->1')
    fixture.expect(folded_complex(FIGURE_COMPLEX, fold) == boundary_simplex([1, 2, 3]),
                   lambda: repr(folded_complex(FIGURE_COMPLEX, fold)))

    rng = random.Random(budget.seed)
    instances = []
    for _ in range(budget.samples * 3 // 2):
        k = random_complex(rng.randint(2, 6), rng.randrange(2 ** 32))
        instances.append((k, random_fold(k, rng.randrange(2 ** 32))))
    for k, fold in instances:
        got = folded_complex(k, fold)
        image.expect(set(got.faces) == _brute_fold(k, fold), lambda: f'{k!r} by {fold}')
        preimage.expect(folded_complex_by_preimage(k, fold) == got, lambda: f'{k!r} by {fold}')
        singles = fold.singles()
        rng.shuffle(singles)
        step = k
        for single in singles:
            step = folded_complex(step, single)
        iterated.expect(step == got, lambda: f'{k!r} by {fold}')
        if fold.is_single:
            (i, j), = fold.pairs
            back = folded_complex(k, fold.reversed())
            symmetry.expect(got.relabel({j: i}) == back, lambda: f'{k!r} by {fold}')

    for _ in range(budget.samples * 3 // 2):
        outer = random_complex(rng.randint(1, 3), rng.randrange(2 ** 32), ghosts=False)
        inner = [random_complex(rng.randint(1, 3), rng.randrange(2 ** 32)) for _ in outer.vertices]
        wide = [n for n, s in enumerate(inner) if len(s.vertices) >= 2]
        if not wide:
            continue
        n = rng.choice(wide)
        slot = outer.vertices[n]
        names = _slot_names(slot, inner[n].vertices)
        local = random_fold(inner[n], rng.randrange(2 ** 32))
        fold = Fold.from_mapping({names[i]: names[j] for i, j in local.pairs})
        folded_inner = [s.relabel(_slot_names(v, s.vertices)) for v, s in zip(outer.vertices, inner)]
        folded_inner[n] = SimplicialComplex(
            set(folded_inner[n].vertices) - fold.I,
            _brute_fold(folded_inner[n], fold))
        expected = substitution(outer, folded_inner, relabel=False)
        got = folded_complex(substitution(outer, inner), fold)
        commute.expect(got == expected, lambda: f'{outer!r} slot {slot} by {fold}')

    for n in range(2, min(budget.max_vertices, 4) + 1):
        everything = list(enumerate_complexes(n))
        for fold in enumerate_folds(vertex_range(n)):
            images: Dict[FrozenSet[Face], List[SimplicialComplex]] = {}
            for other in everything:
                images.setdefault(frozenset(_brute_fold(other, fold)), []).append(other)
            # L depends on K only through its fold
            for target, owners in images.items():
                k = next((c for c in owners if not c.is_void), None)
                if k is None:
                    continue
                big = max_folding_complex(k, fold)
                for img, members in images.items():
                    if not img <= target:
                        continue
                    for other in members:
                        maximal.expect(other.is_subcomplex(big),
                                       lambda: f'{other!r} not under L for {k!r} by {fold}')
    return [fixture, image, preimage, symmetry, iterated, commute, maximal]


@_suite('lpsi')
def _lpsi_suite(budget: Budget) -> List[CheckResult]:
    fixture = CheckResult('lpsi', 'largest folding complex of the square with a diagonal')
    scan = CheckResult('lpsi', 'the largest folding complex is the preimage of the folded faces')
    refold = CheckResult('lpsi', 'the largest folding complex folds alike and contains K')
    expected = SimplicialComplex(vertex_range(4), [{1, 2, 4}, {1, 3, 4}, {2, 3}])
    got = max_folding_complex(FIGURE_COMPLEX, Fold.parse('4->1'))
    fixture.expect(got == expected, lambda: repr(got))
    for n in range(2, min(budget.max_vertices, 4) + 1):
        for k in enumerate_complexes(n):
            if k.is_void:
                continue
            for fold in enumerate_folds(k.vertices):
                big = max_folding_complex(k, fold)
                scan.expect(set(big.faces) == _brute_lpsi(k, fold), lambda: f'{k!r} by {fold}')
                refold.expect(folded_complex(big, fold) == folded_complex(k, fold)
                              and k.is_subcomplex(big), lambda: f'{k!r} by {fold}')
    rng = random.Random(budget.seed)
    for _ in range(budget.samples):
        k = random_complex(rng.randint(5, 6), rng.randrange(2 ** 32))
        fold = random_fold(k, rng.randrange(2 ** 32))
        big = max_folding_complex(k, fold)
        scan.expect(set(big.faces) == _brute_lpsi(k, fold), lambda: f'{k!r} by {fold}')
    return [fixture, scan, refold]


def _partitions(budget: Budget, up_to: Optional[int] = None) -> Iterator[Partition]:
    top = max(budget.max_vertices, 3) if up_to is None else min(budget.max_vertices, up_to)
    for m in range(3, top + 1):
        yield from enumerate_partitions(m)


def _shapes(budget: Budget, up_to: Optional[int] = None) -> Iterator[Partition]:
    top = max(budget.max_vertices, 3) if up_to is None else min(budget.max_vertices, up_to)
    for m in range(3, top + 1):
        yield from enumerate_partition_shapes(m)


LABELLED_MAX = 6


@_suite('identity')
def _identity_suite(budget: Budget) -> List[CheckResult]:
    fixture = CheckResult('identity', 'identity complex of 1|2,3|4 is the square with a diagonal')
    scan = CheckResult('identity', 'identity complex faces avoid every block complement')
    three = CheckResult('identity', 'identity complex three-construction agreement')
    mf = CheckResult('identity', 'identity complex missing faces are the block complements')
    skeleton = CheckResult('identity', 'identity complex of singletons is the dual of m points')
    got = identity_complex(Partition.parse('1|2,3|4'))
    fixture.expect(got == FIGURE_COMPLEX, lambda: repr(got))
    for partition in _partitions(budget):
        k = identity_complex(partition)
        scan.expect(set(k.faces) == _brute_identity(partition), lambda: str(partition))
        complements = {frozenset(partition.vertices) - b for b in partition.blocks}
        mf.expect(set(k.minimal_missing_faces()) == complements, lambda: str(partition))
    crossed = list(_partitions(budget, LABELLED_MAX))
    crossed.extend(p for p in _shapes(budget) if p.m > LABELLED_MAX)
    for partition in crossed:
        k = identity_complex(partition)
        three.expect(identity_complex_from_mf(partition) == k
                     and identity_complex_from_pieces(partition) == k, lambda: str(partition))
    for m in range(3, 9):
        points = SimplicialComplex(vertex_range(m), [[v] for v in vertex_range(m)])
        k = identity_complex(Partition.singletons(m))
        skeleton.expect(k == points.alexander_dual() == simplex(vertex_range(m)).skeleton(m - 3),
                        lambda: f'm={m}')
    return [fixture, scan, three, mf, skeleton]


@_suite('fold-classify')
def _fold_classify_suite(budget: Budget) -> List[CheckResult]:
    folded = CheckResult('fold-classify', 'fold classification of identity complexes: folded complex')
    lpsi = CheckResult('fold-classify', 'fold classification of identity complexes: largest folding complex')
    folds_of: Dict[int, List[Fold]] = {}
    for partition in _shapes(budget):
        k = identity_complex(partition)
        if partition.m not in folds_of:
            folds_of[partition.m] = list(enumerate_folds(partition.vertices))
        orbits = 0
        for fold in fold_orbit_representatives(partition, folds_of[partition.m]):
            orbits += 1
            split = classify_partition_fold(partition.blocks, fold)
            folded.expect(split.folded == folded_complex(k, fold), lambda: f'{partition} by {fold}')
            lpsi.expect(split.max_folding == max_folding_complex(k, fold), lambda: f'{partition} by {fold}')
        log.debug('%s: %d fold orbits', partition, orbits)

    rng = random.Random(budget.seed)
    top = min(max(budget.max_vertices, 3), LABELLED_MAX)
    for _ in range(budget.samples):
        m = rng.randint(3, top)
        partition = random_partition(m, rng.randint(3, m), rng.randrange(2 ** 32))
        k = identity_complex(partition)
        fold = random_fold(k, rng.randrange(2 ** 32))
        split = classify_partition_fold(partition.blocks, fold)
        folded.expect(set(split.folded.faces) == _brute_fold(k, fold)
                      and split.folded.vertex_set == k.vertex_set - fold.I,
                      lambda: f'{partition} by {fold}')
        lpsi.expect(set(split.max_folding.faces) == _brute_lpsi(k, fold),
                    lambda: f'{partition} by {fold}')
    return [folded, lpsi]


_FIGURE_ROWS = {
    7: ['∗ 1 1 1 1 1 1',
        '1 ∗ 1 1 1 1 −',
        '1 1 ∗ 1 1 − −',
        '1 1 1 ∗ − − −',
        '1 1 − − ∗ − −',
        '1 − − − − ∗ −',
        '− − − − − − ∗'],
    8: ['∗ 1 1 1 1 1 1 1',
        '1 ∗ 1 1 1 1 1 −',
        '1 1 ∗ 1 1 1 − −',
        '1 1 1 ∗ 1 − − −',
        '1 1 − 1 ∗ − − −',
        '1 1 − − − ∗ − −',
        '1 − − − − − ∗ −',
        '− − − − − − − ∗'],
}


@_suite('eta')
def _eta_suite(budget: Budget) -> List[CheckResult]:
    figures = CheckResult('eta', 'η-matrices for k=7 and k=8')
    separation = CheckResult('eta', 'η-matrix rows are pairwise separated')
    for k, rows in _FIGURE_ROWS.items():
        figures.expect(eta_matrix(k).render() == '\n'.join(rows), lambda: f'k={k}')
    for k in range(3, 17):
        separation.expect(check_eta_separation(k), lambda: f'k={k}')
    return [figures, separation]


@_suite('signs')
def _signs_suite(budget: Budget) -> List[CheckResult]:
    bubble = CheckResult('signs', 'Koszul sign is the sign of a bubble sort')
    closed = CheckResult('signs', 'closed form of the singleton relation signs')
    jacobi = CheckResult('signs', 'graded Jacobi identity signs')
    rng = random.Random(budget.seed)
    for _ in range(budget.samples * 5):
        m = rng.randint(1, 8)
        images = list(range(1, m + 1))
        rng.shuffle(images)
        dims = [rng.randint(1, 4) for _ in range(m)]
        bubble.expect(koszul_sign(Permutation(images), dims) == _bubble_sign(images, dims),
                      lambda: f'{images} {dims}')
    for m in range(3, 9):
        for dims in it.product((2, 3), repeat=m):
            rel = relation(Partition.singletons(m), default_leaves(m, dims))
            signs = [s.sign for s in rel.summands]
            closed.expect(signs == [singleton_sign(i, dims) for i in range(1, m + 1)],
                          lambda: f'dims {dims}')
    for p1, p2, p3 in it.product((2, 3), repeat=3):
        rel = relation(Partition.singletons(3), default_leaves(3, (p1, p2, p3)))
        twist = (-1) ** (p1 * p3)
        s1, s2, s3 = (s.sign * twist for s in rel.summands)
        s2 *= koszul_sign(Permutation((2, 1)), (p1, p3))
        jacobi.expect((s1, s2, s3) == ((-1) ** (p1 * p2), (-1) ** (p2 * p3), (-1) ** (p1 * p3)),
                      lambda: f'dims {(p1, p2, p3)}')
    return [bubble, closed, jacobi]


@_suite('relations')
def _relations_suite(budget: Budget) -> List[CheckResult]:
    shape = CheckResult('relations', 'a relation has k summands of one degree inside the ambient')
    dj = CheckResult('relations', 'every summand is essential for degree 2 maps over the identity complex')
    cross = CheckResult('relations', 'a single fold across blocks leaves the two summands it touches')
    dead = CheckResult('relations', 'within-block and multi-vertex folds kill every summand')
    agree = CheckResult('relations', 'folded summand annotations agree with the triviality rules')
    across = CheckResult('relations', 'folding a point into ∂Δ[3] keeps the middle summand')
    rng = random.Random(budget.seed)

    def check_folded(partition: Partition, fold: Fold):
        rel = folded_relation(partition, fold, default_leaves(partition.m, [2] * partition.m))
        split = classify_partition_fold(partition.blocks, fold)
        alive = len(rel.survivors)
        if split.case is FoldCase.CROSS_BLOCK:
            cross.expect(alive == 2, lambda: f'{partition} by {fold}: {alive} left')
        else:
            dead.expect(alive == 0, lambda: f'{partition} by {fold}: {alive} left')
        agree.expect(all(s.triviality.status == triviality(s.expr).status for s in rel.summands),
                     lambda: f'{partition} by {fold}')

    for _ in range(max(budget.samples // 2, 1)):
        m = rng.randint(3, 8)
        partition = random_partition(m, rng.randint(3, m), rng.randrange(2 ** 32))
        dims = [rng.choice((2, 3)) for _ in range(m)]
        rel = relation(partition, default_leaves(m, dims))
        degrees = {s.degree for s in rel.summands}
        shape.expect(len(rel.summands) == partition.k and degrees == {sum(dims) - 2}
                     and all(codomain_complex(s.expr).is_subcomplex(rel.ambient) for s in rel.summands),
                     lambda: str(partition))
        rel = relation(partition, default_leaves(m, [2] * m), Mode.DJ)
        dj.expect(all(s.triviality.status is Status.NONTRIVIAL for s in rel.summands),
                  lambda: str(partition))
        if m <= 6:
            check_folded(partition, random_fold(identity_complex(partition), rng.randrange(2 ** 32)))

    for partition in _shapes(budget, LABELLED_MAX):
        for fold in fold_orbit_representatives(partition):
            check_folded(partition, fold)

    k1 = boundary_simplex([1, 2, 3])
    rel = fold_across_relation(4, k1, point(1), Fold.parse('4->1_1'), default_leaves(4, [2] * 4))
    expected = substitution(boundary_simplex(vertex_range(3)),
                            [boundary_simplex(['1_1', '1_2', '1_3']), point(2), point(3)],
                            relabel=False)
    across.expect(rel.ambient == expected and not rel.summands[1].triviality.is_trivial,
                  lambda: repr(rel.ambient))
    return [shape, dj, cross, dead, agree, across]


ORDER = ('mf', 'dual', 'pjoin', 'folds', 'lpsi', 'identity', 'fold-classify', 'eta', 'signs',
         'relations')


def run_suite(name: str, budget: Optional[Budget] = None) -> Report:
    budget = budget or Budget()
    if name == 'all':
        names = list(ORDER)
    elif name in SUITES:
        names = [name]
    else:
        raise VerifyError(f'unknown suite {name!r}, expected one of {", ".join(ORDER)} or all',
                          code='unknown-suite')
    report = Report()
    for n in names:
        log.info('running suite %s', n)
        try:
            results = SUITES[n](budget)
        except PwhError as e:
            results = [CheckResult(n, 'suite raised', 1, 1, [str(e)])]
        for r in results:
            log.info('%s / %s: %d cases, %d failed', r.suite, r.check, r.cases, r.failed)
        report.results.extend(results)
    return report

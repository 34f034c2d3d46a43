import re
from typing import AbstractSet, FrozenSet, Hashable, Iterable, List, Tuple, TypeVar

T = TypeVar('T', bound=Hashable)


def face_key(face: AbstractSet[T]) -> Tuple[T, ...]:
    """Canonical sort key of a face: its sorted vertex tuple."""
    return tuple(sorted(face))


def maximal(sets: Iterable[AbstractSet[T]]) -> List[FrozenSet[T]]:
    """
    Inclusion-maximal members of `sets`, duplicates removed.
    maximal ∘ maximal = maximal
    """
    by_size = sorted({frozenset(s) for s in sets}, key=len, reverse=True)
    kept = []
    for s in by_size:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


def natural_key(name: str) -> Tuple:
    """Sort key reading digit runs as numbers, so f2 < f10."""
    return tuple((0, int(part)) if part.isdigit() else (1, part)
                 for part in re.split(r'(\d+)', name) if part != '')

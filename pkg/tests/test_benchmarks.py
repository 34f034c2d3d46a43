import time

from pwh import (Partition, SimplicialPair, boundary_simplex, empty_complex, folded_complex,
                 identity_complex, mf_polyhedral_join, point, polyhedral_join, simplex)
from pwh.folds import folded_complex_by_preimage
from pwh.relations import identity_complex_from_mf, identity_complex_from_pieces
from pwh.verify import random_complex, random_fold


def timed(fn, iterations=5):
    """Average wall time of fn() over the given number of runs."""
    total_time = 0
    for _ in range(iterations):
        start_time = time.time()
        fn()
        total_time += time.time() - start_time
    return total_time / iterations


def benchmark_identity(m):
    partition = Partition.singletons(m)
    return (timed(lambda: identity_complex(partition)),
            timed(lambda: identity_complex_from_mf(partition)),
            timed(lambda: identity_complex_from_pieces(partition)))


def benchmark_missing_faces(n):
    outer = random_complex(n, seed=n, ghosts=False)
    pairs = [SimplicialPair(simplex([1, 2, 3]), boundary_simplex([1, 2, 3])) if i % 2
             else SimplicialPair(point(1), empty_complex([1])) for i in range(n)]
    return (timed(lambda: polyhedral_join(outer, pairs).minimal_missing_faces()),
            timed(lambda: mf_polyhedral_join(outer, pairs)))


def benchmark_fold(n):
    k = random_complex(n, seed=n)
    fold = random_fold(k, seed=n)
    return (timed(lambda: folded_complex(k, fold)),
            timed(lambda: folded_complex_by_preimage(k, fold)))


def run_benchmarks():
    """Run all benchmarks and print results."""
    print("\nIdentity complex of m singletons:\n")
    print("┌─────┬─────────────┬─────────────┬─────────────┐")
    print("│ m   │ Compose(s)  │ Missing(s)  │ Pieces(s)   │")
    print("├─────┼─────────────┼─────────────┼─────────────┤")
    for m in range(3, 10):
        compose, missing, pieces = benchmark_identity(m)
        print(f"│ {m:<3} │ {compose:>11.6f} │ {missing:>11.6f} │ {pieces:>11.6f} │")
    print("└─────┴─────────────┴─────────────┴─────────────┘")

    print("\nMinimal missing faces of a polyhedral join:\n")
    print("┌─────┬─────────────┬─────────────┬───────────────┐")
    print("│ n   │ Enumerate(s)│ Formula(s)  │ Formula/Enum. │")
    print("├─────┼─────────────┼─────────────┼───────────────┤")
    for n in range(2, 6):
        enumerate_time, formula_time = benchmark_missing_faces(n)
        print(f"│ {n:<3} │ {enumerate_time:>11.6f} │ {formula_time:>11.6f} │ "
              f"{formula_time / enumerate_time:>13.2f} │")
    print("└─────┴─────────────┴─────────────┴───────────────┘")

    print("\nFolded complexes:\n")
    print("┌─────┬─────────────┬─────────────┐")
    print("│ n   │ Image(s)    │ Preimage(s) │")
    print("├─────┼─────────────┼─────────────┤")
    for n in range(2, 12):
        image, preimage = benchmark_fold(n)
        print(f"│ {n:<3} │ {image:>11.6f} │ {preimage:>11.6f} │")
    print("└─────┴─────────────┴─────────────┘")


if __name__ == "__main__":
    run_benchmarks()

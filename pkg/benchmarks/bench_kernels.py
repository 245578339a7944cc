"""Compare the compiled and pure-Python row-reduction kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Two workloads are timed per backend: raw Howell echelon of random
bit-sliced matrices, and the full generator round trip (reconstruct, compute,
reconstruct) on sampled cyclic codes with the kernel module swapped out.
"""
import argparse
import random
import timeit
from contextlib import contextmanager

from z2z4cyclic import _kernel_py, kernels
from z2z4cyclic.codes import equals
from z2z4cyclic.cyclicgen import compute_generators, reconstruct
from z2z4cyclic.oracle import sample_valid_generators
from z2z4cyclic.words import ymask

try:
    from z2z4cyclic import _ckernel
except ImportError:
    _ckernel = None

KERNEL_FUNCS = ("echelon", "reduce_word", "binary_echelon", "span_words")


@contextmanager
def using(backend):
    saved = {name: getattr(kernels, name) for name in KERNEL_FUNCS}
    for name in KERNEL_FUNCS:
        setattr(kernels, name, getattr(backend, name))
    try:
        yield
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)


def echelon_workload(seed=0, count=200, alpha=12, beta=31, nrows=40):
    rng = random.Random(seed)
    mask = ymask(alpha, beta)
    mats = [[(rng.getrandbits(alpha + beta), rng.getrandbits(alpha + beta) & mask)
             for _ in range(nrows)] for _ in range(count)]
    cols = list(range(alpha, alpha + beta)) + list(range(alpha))

    def run(backend):
        for rows in mats:
            backend.echelon(rows, mask, cols)
    return run


def round_trip_workload(seed=0):
    tuples = [sample_valid_generators(a, b, seed + 31 * a + b)
              for a in range(0, 9, 2) for b in (7, 9, 15, 21)]

    def run(backend):
        with using(backend):
            for g in tuples:
                C = reconstruct(g)
                assert equals(reconstruct(compute_generators(C)), C)
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [_kernel_py] + ([_ckernel] if _ckernel is not None else [])
    if _ckernel is None:
        print("compiled kernel not built; timing the pure-Python backend only")
    workloads = {"echelon": echelon_workload(), "round-trip": round_trip_workload()}
    print(f"{'workload':<12} {'backend':<8} {'best (s)':>10} {'speedup':>8}")
    for name, fn in workloads.items():
        base = None
        for backend in backends:
            best = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
            base = base or best
            print(f"{name:<12} {backend.BACKEND:<8} {best:>10.4f} {base / best:>7.2f}x")


if __name__ == "__main__":
    main()

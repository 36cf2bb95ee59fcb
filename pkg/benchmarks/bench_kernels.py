"""Compare the compiled and pure-Python kernels on the hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on a fixed workload and checks that both backends
return the same result before reporting the speedup.
"""
from __future__ import annotations

import argparse
import itertools
import random
import timeit

from zgrass import kernels
from zgrass.kernels import python_backend


def workloads(rng: random.Random):
    pairs = [(rng.randrange(1 << 16), rng.randrange(1 << 16)) for _ in range(20000)]
    a = {rng.randrange(1 << 14): rng.randint(-9, 9) for _ in range(300)}
    b = {rng.randrange(1 << 14): rng.randint(-9, 9) for _ in range(300)}
    perms = list(itertools.permutations(range(6)))
    masks = list(range(64))
    # s_4 over odd one-letter words: no nonzero tuple until the last words
    perms4 = list(itertools.permutations(range(4)))
    coefs = [(-1) ** sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j]) for p in perms4]
    lists = [[1 << (2 * i), (1 << (2 * i)) | (1 << (2 * i + 1))] for i in range(4)]
    return {
        "word_sign x20000": lambda K: [K.word_sign(u, v) for u, v in pairs],
        "mul_dicts 300x300": lambda K: K.mul_dicts(a, b),
        "perm_signs 720x64": lambda K: K.perm_signs(perms, masks),
        "first_nonzero s_4": lambda K: K.first_nonzero(perms4, coefs, lists),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    C = kernels.compiled_backend
    if C is None:
        print("compiled backend not built; only the Python timings are shown")
    print(f"{'kernel':22s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for name, job in workloads(random.Random(0)).items():
        tp = min(timeit.repeat(lambda: job(python_backend), number=1, repeat=args.repeat)) * 1e3
        if C is None:
            print(f"{name:22s} {tp:12.2f} {'-':>12s} {'-':>8s}")
            continue
        if job(C) != job(python_backend):
            raise SystemExit(f"backends disagree on {name}")
        tc = min(timeit.repeat(lambda: job(C), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:22s} {tp:12.2f} {tc:12.2f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

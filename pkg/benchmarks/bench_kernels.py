"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import itertools
import timeit

from tropdual import _pykernels
from tropdual.model import ModelParams, enumerate_indecs

try:
    from tropdual import _ckernels
except ImportError:
    _ckernels = None


def workloads(mod, params):
    m = params.m
    objects = enumerate_indecs(params)
    pairs = list(itertools.product(objects, repeat=2))
    triples = list(itertools.product(objects[:12], repeat=3))
    compat = mod.compat_matrix(objects)
    size = params.tilting_size

    def pairwise():
        for x, y in pairs:
            mod.intertwines(x, y)
            mod.hom_dim(x, y, m)

    def factor():
        for x, y, z in triples:
            mod.factors_through(x, y, z, m)

    return {
        "intertwines+hom": pairwise,
        "factors_through": factor,
        "compat_matrix": lambda: mod.compat_matrix(objects),
        "cliques": lambda: mod.cliques(compat, size, -1),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'grid':6s} {'kernel':16s} " + " ".join(f"{b:>11s}" for b, _ in backends) + "  speedup")
    for n, d in [(4, 1), (3, 2), (3, 3)]:
        params = ModelParams(n, d)
        timings = {}
        for name, mod in backends:
            for kernel, fn in workloads(mod, params).items():
                best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                timings.setdefault(kernel, {})[name] = best
        for kernel, row in timings.items():
            cells = " ".join(f"{row[b] * 1e3:9.2f}ms" for b, _ in backends)
            speed = f"{row['python'] / row['cython']:7.1f}x" if "cython" in row else "      -"
            print(f"({n},{d})  {kernel:16s} {cells}  {speed}")
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Builds the orbit set of a model once, then times the two closure-matrix
sweeps on every available backend and checks that the outputs are
bit-identical.

    python benchmarks/bench_kernels.py --cartan B2
    python benchmarks/bench_kernels.py --cartan A3 --threads 4 --skip-python
"""

import argparse
import time

import numpy as np

from orbitposet import CartanDatum, group_model, wonderful_model
from orbitposet import _kernels
from orbitposet.orbits import enumerate_orbits, group_for
from orbitposet.poset import _build_kernel_inputs


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cartan", default="B2")
    parser.add_argument("--model", default="wonderful",
                        choices=["wonderful", "group"])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=1,
                        help="threads for the compiled backend")
    parser.add_argument("--skip-python", action="store_true",
                        help="only run the compiled backend (for big models)")
    args = parser.parse_args()

    cartan = CartanDatum.from_type(args.cartan)
    model = (wonderful_model if args.model == "wonderful" else group_model)(cartan)
    group = group_for(model)
    orbits = enumerate_orbits(model)
    inputs = _build_kernel_inputs(model, group, orbits)
    n = len(orbits)
    print(f"model: {model.label} {cartan.describe()}  "
          f"orbits: {n}  pairs: {n * n}")
    print(f"available backends: {', '.join(_kernels.available_backends())}")

    backends = list(_kernels.available_backends())
    if args.skip_python and len(backends) > 1:
        backends.remove("python")

    results = {}
    for kernel_name, fn in [("closure", _kernels.closure_matrix),
                            ("bclosure", _kernels.bclosure_matrix)]:
        outputs = {}
        for backend in backends:
            threads = args.threads if backend == "compiled" else 1
            elapsed = best_of(
                args.repeat,
                lambda: outputs.__setitem__(
                    backend, fn(inputs, backend=backend, threads=threads)))
            results[(kernel_name, backend)] = elapsed
            rate = n * n / elapsed / 1e6
            print(f"{kernel_name:9s} {backend:9s} "
                  f"{elapsed * 1e3:10.2f} ms  {rate:8.1f} Mpairs/s"
                  + (f"  (threads={threads})" if backend == "compiled" else ""))
        if len(outputs) == 2:
            assert np.array_equal(outputs["python"], outputs["compiled"]), \
                f"{kernel_name}: backends disagree"
            speedup = (results[(kernel_name, "python")]
                       / results[(kernel_name, "compiled")])
            print(f"{kernel_name:9s} speedup   {speedup:10.1f}x "
                  "(outputs bit-identical)")


if __name__ == "__main__":
    main()

"""Kernel backends for the orbit-closure pair sweeps.

The same two kernels exist twice: a Cython extension (``_ckernels``,
built at install time when a C compiler is available) and a pure-Python
mirror (``_pykernels``).  The compiled backend is selected at import when
present; both produce bit-identical matrices, which the test suite
asserts.

Each kernel fills rows [row_start, row_stop) of a dense uint8 matrix
``out`` with out[a, b] = 1 iff orbit b lies in the closure of orbit a.
Inputs are flat integer tables (see :class:`KernelInputs`), so the
kernels know nothing about groups or models.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
    IMPLEMENTATION = "compiled"
except ImportError:  # extension not built; pure Python does the same work
    _ckernels = None
    IMPLEMENTATION = "python"


@dataclass(frozen=True)
class KernelInputs:
    """Flat tables driving both kernels.

    With m = number of family members, k = group order, n = orbit count:

    * orb_k, orb_v, orb_w: int32 (n,) member / element indices per orbit
    * ksub: uint8 (m, m), ksub[i, j] = 1 iff member_i is a subset of member_j
    * par_off: int32 (m + 1,), par_elem: int32 flat; the element ids of
      W_{I - p(K_i)} are par_elem[par_off[i]:par_off[i + 1]]
    * minrep: uint8 (m, k), minrep[i, x] = 1 iff x has no right descent
      in I - p(K_i)
    * mult: int32 (k, k) multiplication table, inv: int32 (k,)
    * bru: uint8 (k, k), bru[x, y] = 1 iff x <= y in Bruhat order
    """

    orb_k: np.ndarray
    orb_v: np.ndarray
    orb_w: np.ndarray
    ksub: np.ndarray
    par_off: np.ndarray
    par_elem: np.ndarray
    minrep: np.ndarray
    mult: np.ndarray
    inv: np.ndarray
    bru: np.ndarray

    @property
    def n_orbits(self) -> int:
        return len(self.orb_k)


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _ckernels is not None else ("python",)


def _module(backend: str | None):
    if backend is None:
        backend = IMPLEMENTATION
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")


def _run(rows_fn, args: KernelInputs, threads: int, extra: tuple) -> np.ndarray:
    n = args.n_orbits
    out = np.zeros((n, n), dtype=np.uint8)
    common = (args.orb_k, args.orb_v, args.orb_w, args.ksub,
              args.par_off, args.par_elem) + extra
    if threads <= 1 or n < 2 * threads:
        rows_fn(out, 0, n, *common)
        return out
    # Workers fill disjoint row blocks of the shared output, so the result
    # is identical for every worker count and schedule.
    bounds = [(i * n) // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(rows_fn, out, lo, hi, *common)
                   for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        for f in futures:
            f.result()
    return out


def closure_matrix(args: KernelInputs, *, threads: int = 1,
                   backend: str | None = None) -> np.ndarray:
    """Materialize the one-witness closure relation as a uint8 matrix."""
    mod = _module(backend)
    if mod is _pykernels:
        threads = 1  # pure Python gains nothing from threads; keep it simple
    return _run(mod.closure_rows, args, threads, (args.mult, args.bru))


def bclosure_matrix(args: KernelInputs, *, threads: int = 1,
                    backend: str | None = None) -> np.ndarray:
    """Materialize the two-witness closure relation as a uint8 matrix."""
    mod = _module(backend)
    if mod is _pykernels:
        threads = 1
    return _run(mod.bclosure_rows, args, threads,
                (args.minrep, args.mult, args.inv, args.bru))

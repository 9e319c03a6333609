"""Materialized orbit posets: closure order, covers, components, export.

The order is "b lies in the closure of a", stored as a dense uint8
matrix ``leq`` with leq[a, b] = 1 meaning exactly that (so b <= a as
poset elements and the unique maximum is the orbit of the open stratum,
[{}, e, w0]).  The matrix is built by one of the interchangeable kernel
backends; everything downstream (covers, components, verification) is a
pure deterministic function of it.
"""

from __future__ import annotations

import os
from typing import Callable

import numpy as np

from . import _kernels
from .coxeter import WeylElement, WeylGroup
from .embedding import EmbeddingModel
from .orbits import (DEFAULT_MAX_ORBITS, Orbit, coset_complement,
                     enumerate_orbits, format_orbit, group_for)

THREADS_ENV_VAR = "ORBITPOSET_THREADS"


def resolve_threads(threads: int | None) -> int:
    """Explicit argument, else the ORBITPOSET_THREADS env var, else 1."""
    if threads is not None:
        return max(1, int(threads))
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(
            f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None


class OrbitPoset:
    """The full orbit set of a model with its materialized closure order."""

    def __init__(self, model: EmbeddingModel, group: WeylGroup,
                 orbits: tuple[Orbit, ...], leq: np.ndarray,
                 kernel_inputs: _kernels.KernelInputs,
                 backend: str, threads: int):
        self.model = model
        self.group = group
        self.orbits = orbits
        self.index = {o: i for i, o in enumerate(orbits)}
        self.leq = leq
        self.kernel_inputs = kernel_inputs
        self.backend = backend
        self.threads = threads
        self._bool: np.ndarray | None = None
        self._bclosure: np.ndarray | None = None
        self._covers: tuple[tuple[int, int], ...] | None = None
        # enumeration is K-major, then v, then w, so each (K, v) block is a
        # contiguous slice of length |W|
        k = len(group.enumerate_group())
        self._offsets: dict = {}
        self._vpos: dict = {}
        pos = 0
        for K in model.members:
            reps = group.min_coset_reps(coset_complement(model, K))
            self._offsets[K] = pos
            self._vpos[K] = {v: i for i, v in enumerate(reps)}
            pos += len(reps) * k

    def __len__(self) -> int:
        return len(self.orbits)

    # -- lookups -----------------------------------------------------------

    @property
    def matrix(self) -> np.ndarray:
        """The closure relation as a boolean array (cached view)."""
        if self._bool is None:
            self._bool = self.leq.astype(bool)
        return self._bool

    def orbit_index(self, K, v: WeylElement, w: WeylElement) -> int:
        Kt = tuple(sorted(K))
        k = len(self.group.enumerate_group())
        return (self._offsets[Kt] + self._vpos[Kt][v] * k
                + self.group.tables().index[w])

    def block(self, K, v: WeylElement) -> slice:
        """Index slice of the orbits [K, v, *] in group-table order of w."""
        Kt = tuple(sorted(K))
        k = len(self.group.enumerate_group())
        start = self._offsets[Kt] + self._vpos[Kt][v] * k
        return slice(start, start + k)

    def closure_leq(self, a: Orbit, b: Orbit) -> bool:
        """True iff orbit b lies in the closure of orbit a."""
        return bool(self.leq[self.index[a], self.index[b]])

    def maximum(self) -> Orbit:
        """The unique orbit whose closure contains every orbit."""
        full = np.flatnonzero(self.matrix.all(axis=1))
        if len(full) != 1:
            raise AssertionError(
                f"expected a unique maximum, found {len(full)}")
        return self.orbits[int(full[0])]

    # -- two-witness criterion ------------------------------------------------

    def bclosure_matrix(self) -> np.ndarray:
        """The two-witness closure relation over the same orbit order."""
        if self._bclosure is None:
            self._bclosure = _kernels.bclosure_matrix(
                self.kernel_inputs, threads=self.threads,
                backend=self.backend)
        return self._bclosure

    # -- order structure --------------------------------------------------------

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Covering relations as (lower, upper) index pairs, sorted.

        Transitive reduction: b is covered by a iff b < a and no c lies
        strictly between.
        """
        if self._covers is None:
            strict = self.matrix & ~np.eye(len(self), dtype=bool)
            out = []
            for a in range(len(self)):
                below = np.flatnonzero(strict[a])
                if len(below) == 0:
                    continue
                # blocked: reachable through an intermediate element
                blocked = strict[np.ix_(below, below)].any(axis=0)
                out.extend((int(b), a) for b in below[~blocked])
            self._covers = tuple(sorted(out))
        return self._covers

    def maximal_below(self, predicate: Callable[[Orbit], bool]) -> tuple[Orbit, ...]:
        """Maximal elements of the sub-poset of orbits satisfying
        ``predicate``, in enumeration order."""
        sel = np.fromiter((bool(predicate(o)) for o in self.orbits),
                          dtype=bool, count=len(self))
        return self._maximal_of(sel)

    def intersection_components(self, z1: Orbit, z2: Orbit) -> tuple[Orbit, ...]:
        """Maximal orbits lying in the closures of both z1 and z2.

        Closed unions of orbits decompose into finitely many orbit
        closures, so these maxima are exactly the irreducible components
        of the intersection of the two closures.
        """
        common = self.matrix[self.index[z1]] & self.matrix[self.index[z2]]
        return self._maximal_of(common)

    def _maximal_of(self, sel: np.ndarray) -> tuple[Orbit, ...]:
        L = self.matrix
        out = []
        for o in np.flatnonzero(sel):
            above = L[:, o].copy()
            above[o] = False
            if not (above & sel).any():
                out.append(self.orbits[int(o)])
        return tuple(out)

    # -- export ------------------------------------------------------------------

    def to_dot(self) -> str:
        """Hasse diagram in DOT; nodes labeled by orbit literals.

        Byte-deterministic for a fixed model: node order is the orbit
        enumeration, edge order is the sorted cover list.
        """
        lines = ["digraph orbit_poset {", "  rankdir=BT;"]
        for i, o in enumerate(self.orbits):
            lines.append(f'  n{i} [label="{format_orbit(o)}"];')
        for lo, up in self.covers():
            lines.append(f"  n{lo} -> n{up};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "orbit-poset-hasse",
            "cartan": self.model.cartan.describe(),
            "model": self.model.label,
            "divisors": self.model.n_divisors,
            "orbit_count": len(self),
            "orbits": [format_orbit(o) for o in self.orbits],
            "covers": [[lo, up] for lo, up in self.covers()],
        }


def _build_kernel_inputs(model: EmbeddingModel, group: WeylGroup,
                         orbits: tuple[Orbit, ...]) -> _kernels.KernelInputs:
    T = group.tables()
    k = T.order
    members = model.members
    m = len(members)
    member_index = {K: i for i, K in enumerate(members)}

    ksub = np.zeros((m, m), dtype=np.uint8)
    for i, K in enumerate(members):
        for j, Kp in enumerate(members):
            ksub[i, j] = set(K) <= set(Kp)

    par_lists = []
    minrep = np.zeros((m, k), dtype=np.uint8)
    for i, K in enumerate(members):
        J = coset_complement(model, K)
        par_lists.append([T.index[el] for el in group.parabolic_elements(J)])
        cols = [j - 1 for j in sorted(J)]
        if cols:
            minrep[i] = ~T.rdesc[:, cols].any(axis=1)
        else:
            minrep[i] = 1

    par_off = np.zeros(m + 1, dtype=np.int32)
    for i, lst in enumerate(par_lists):
        par_off[i + 1] = par_off[i] + len(lst)
    par_elem = np.fromiter((x for lst in par_lists for x in lst),
                           dtype=np.int32, count=int(par_off[-1]))

    orb_k = np.fromiter((member_index[o.K] for o in orbits),
                        dtype=np.int32, count=len(orbits))
    orb_v = np.fromiter((T.index[o.v] for o in orbits),
                        dtype=np.int32, count=len(orbits))
    orb_w = np.fromiter((T.index[o.w] for o in orbits),
                        dtype=np.int32, count=len(orbits))
    return _kernels.KernelInputs(
        orb_k=orb_k, orb_v=orb_v, orb_w=orb_w, ksub=ksub,
        par_off=par_off, par_elem=par_elem, minrep=minrep,
        mult=T.mult, inv=T.inv, bru=T.bruhat)


def build_poset(model: EmbeddingModel, *,
                max_orbits: int = DEFAULT_MAX_ORBITS,
                threads: int | None = None,
                backend: str | None = None) -> OrbitPoset:
    """Enumerate the orbits of a model and materialize the closure order.

    Refuses (rather than degrading) when the orbit count exceeds
    ``max_orbits``; the dense relation would stop being desk scale.
    """
    group = group_for(model)
    orbits = enumerate_orbits(model, max_orbits=max_orbits)
    nthreads = resolve_threads(threads)
    inputs = _build_kernel_inputs(model, group, orbits)
    leq = _kernels.closure_matrix(inputs, threads=nthreads, backend=backend)
    used = backend if backend is not None else _kernels.IMPLEMENTATION
    return OrbitPoset(model, group, orbits, leq, inputs,
                      backend=used, threads=nthreads)


def covers(poset: OrbitPoset) -> tuple[tuple[int, int], ...]:
    return poset.covers()


def maximal_below(poset: OrbitPoset,
                  predicate: Callable[[Orbit], bool]) -> tuple[Orbit, ...]:
    return poset.maximal_below(predicate)

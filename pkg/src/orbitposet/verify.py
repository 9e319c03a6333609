"""Exhaustive verification suites over a materialized orbit poset.

Every check sweeps its full quantifier range on the given model and
reports pass/fail with the first counterexample in enumeration order
(the deterministic (K, v, w) order, so "first" is well defined).  The
checks hold for index families arising from genuine toroidal embeddings;
on hand-written families that are not realizable some of them may
legitimately fail, which is exactly what the report is for.

Check catalog:

* partial-order-axioms, unique-maximum: the closure relation is a
  partial order whose maximum is the orbit of the open stratum.
* v-monotonicity: containment in a closure forces v_a <= v_b.
* fixed-v-containment: with v fixed, closure containment is exactly
  (w' <= w and K' subset of K).
* maximal-rep-inclusion: comparing v-translates by the longest element
  of W_{I-p(K)} together with w' <= w forces containment.
* components-*: four families of intersections of two orbit closures in
  which a prescribed orbit closure is an irreducible component.
* divisorial-classification: the orbits that are NOT a component of any
  intersection of two other distinct orbit closures are exactly the
  maximum, the boundary strata of singleton K, and the codimension-1
  large Schubert classes.
* criteria-agreement: the one-witness and two-witness closure criteria
  produce identical relations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .coxeter import format_word
from .embedding import EmbeddingModel, format_set
from .orbits import (Orbit, coset_complement, divisorial_orbits, format_orbit)
from .poset import OrbitPoset, build_poset


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None


@dataclass
class VerifyReport:
    model_label: str
    cartan_label: str
    orbit_count: int
    backend: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"model: {self.model_label} ({self.cartan_label}), "
                 f"{self.orbit_count} orbits, backend={self.backend}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name} ({c.cases} cases)"
            if c.counterexample:
                line += f" counterexample: {c.counterexample}"
            lines.append(line)
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "verification-report",
            "model": self.model_label,
            "cartan": self.cartan_label,
            "orbit_count": self.orbit_count,
            "backend": self.backend,
            "checks": [
                {"name": c.name, "passed": c.passed, "cases": c.cases,
                 "counterexample": c.counterexample}
                for c in self.checks],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


# -- individual checks ----------------------------------------------------------


def check_poset_axioms(poset: OrbitPoset) -> CheckResult:
    """Reflexive, antisymmetric, transitive."""
    L = poset.matrix
    n = len(poset)
    name = "partial-order-axioms"
    fmt = lambda i: format_orbit(poset.orbits[i])
    if not L.diagonal().all():
        i = int(np.flatnonzero(~L.diagonal())[0])
        return CheckResult(name, False, n, f"not reflexive at {fmt(i)}")
    sym = L & L.T & ~np.eye(n, dtype=bool)
    if sym.any():
        a, b = map(int, np.argwhere(sym)[0])
        return CheckResult(name, False, n * n,
                           f"antisymmetry fails for {fmt(a)} / {fmt(b)}")
    Lf = L.astype(np.float32)
    reach = (Lf @ Lf) > 0
    bad = reach & ~L
    if bad.any():
        a, c = map(int, np.argwhere(bad)[0])
        b = int(np.flatnonzero(L[a] & L[:, c])[0])
        return CheckResult(
            name, False, n * n * n,
            f"transitivity fails for {fmt(a)} >= {fmt(b)} >= {fmt(c)}")
    return CheckResult(name, True, n * n)


def check_unique_maximum(poset: OrbitPoset) -> CheckResult:
    """A single orbit closure contains everything: [{}, e, w0]."""
    L = poset.matrix
    name = "unique-maximum"
    maxima = np.flatnonzero(L.all(axis=1))
    group = poset.group
    expected = Orbit((), group.identity, group.long_element())
    want = poset.index[expected]
    if len(maxima) != 1 or int(maxima[0]) != want:
        found = ", ".join(format_orbit(poset.orbits[int(i)]) for i in maxima)
        return CheckResult(name, False, len(poset),
                           f"maxima found: [{found or 'none'}]")
    return CheckResult(name, True, len(poset))


def check_v_monotonicity(poset: OrbitPoset) -> CheckResult:
    """Containment of b in the closure of a forces v_a <= v_b."""
    T = poset.group.tables()
    L = poset.matrix
    orb_v = poset.kernel_inputs.orb_v
    vleq = T.bruhat.astype(bool)[np.ix_(orb_v, orb_v)]
    bad = L & ~vleq
    cases = int(L.sum())
    if bad.any():
        a, b = map(int, np.argwhere(bad)[0])
        return CheckResult(
            "v-monotonicity", False, cases,
            f"{format_orbit(poset.orbits[b])} in closure of "
            f"{format_orbit(poset.orbits[a])} but v not below")
    return CheckResult("v-monotonicity", True, cases)


def check_fixed_v_containment(poset: OrbitPoset) -> CheckResult:
    """closure[K, v, w'] inside closure[K', v, w] iff w' <= w and K' in K."""
    group = poset.group
    T = group.tables()
    L = poset.matrix
    wleq = T.bruhat.astype(bool)  # wleq[x, y] = x <= y
    model = poset.model
    cases = 0
    for K in model.members:
        repsK = set(group.min_coset_reps(coset_complement(model, K)))
        for Kp in model.members:
            repsKp = group.min_coset_reps(coset_complement(model, Kp))
            kflag = set(Kp) <= set(K)
            for v in repsKp:
                if v not in repsK:
                    continue
                # rows: container [K', v, w]; cols: contained [K, v, w']
                sub = L[poset.block(Kp, v), poset.block(K, v)]
                expected = wleq.T & kflag
                cases += sub.size
                if not np.array_equal(sub, expected):
                    w, wp = map(int, np.argwhere(sub != expected)[0])
                    return CheckResult(
                        "fixed-v-containment", False, cases,
                        f"K={format_set(K)} K'={format_set(Kp)} "
                        f"v={format_word(v.word)} "
                        f"w={format_word(T.elements[w].word)} "
                        f"w'={format_word(T.elements[wp].word)}")
    return CheckResult("fixed-v-containment", True, cases)


def check_maximal_rep_inclusion(poset: OrbitPoset) -> CheckResult:
    """v w0^{I-p(K)} <= v' w0^{I-p(K)} and w' <= w imply that
    [K, v', w'] lies in the closure of [K, v, w]."""
    group = poset.group
    T = group.tables()
    L = poset.matrix
    wleq = T.bruhat.astype(bool)
    model = poset.model
    cases = 0
    for K in model.members:
        J = coset_complement(model, K)
        reps = group.min_coset_reps(J)
        wl = group.longest_element(J)
        shifted = {v: T.index[v * wl] for v in reps}
        for v in reps:
            for vp in reps:
                if not T.bruhat[shifted[v], shifted[vp]]:
                    continue
                # required: w' <= w forces leq on the (w, w') block
                sub = L[poset.block(K, v), poset.block(K, vp)]
                required = wleq.T
                cases += int(required.sum())
                missing = required & ~sub
                if missing.any():
                    w, wp = map(int, np.argwhere(missing)[0])
                    return CheckResult(
                        "maximal-rep-inclusion", False, cases,
                        f"K={format_set(K)} v={format_word(v.word)} "
                        f"v'={format_word(vp.word)} "
                        f"w={format_word(T.elements[w].word)} "
                        f"w'={format_word(T.elements[wp].word)}")
    return CheckResult("maximal-rep-inclusion", True, cases)


def _is_component(poset: OrbitPoset, z: int, z1: int, z2: int) -> bool:
    """z is a maximal orbit inside closure(z1) ^ closure(z2)."""
    L = poset.matrix
    common = L[z1] & L[z2]
    if not common[z]:
        return False
    above = L[:, z].copy()
    above[z] = False
    return not (common & above).any()


def check_components_bruhat(poset: OrbitPoset) -> CheckResult:
    """Every short-enough w admits w', w'' != w with [{}, e, w] a
    component of the intersection of their cell closures."""
    group = poset.group
    e = group.identity
    elements = group.enumerate_group()
    lmax = group.long_element().length
    cases = 0
    for w in elements:
        if w.length >= lmax - 1:
            continue
        cases += 1
        z = poset.orbit_index((), e, w)
        found = False
        for wp in elements:
            if wp is w:
                continue
            z1 = poset.orbit_index((), e, wp)
            for wpp in elements:
                if wpp is w:
                    continue
                if _is_component(poset, z, z1, poset.orbit_index((), e, wpp)):
                    found = True
                    break
            if found:
                break
        if not found:
            return CheckResult("components-bruhat-pairs", False, cases,
                               f"w={format_word(w.word)}")
    return CheckResult("components-bruhat-pairs", True, cases)


def check_components_boundary(poset: OrbitPoset) -> CheckResult:
    """[K, e, w] is a component of closure[{}, e, w] ^ closure[K, e, w0]."""
    group = poset.group
    e = group.identity
    w0 = group.long_element()
    cases = 0
    for K in poset.model.members:
        z2 = poset.orbit_index(K, e, w0)
        for w in group.enumerate_group():
            cases += 1
            z = poset.orbit_index(K, e, w)
            z1 = poset.orbit_index((), e, w)
            if not _is_component(poset, z, z1, z2):
                return CheckResult(
                    "components-boundary-mix", False, cases,
                    f"K={format_set(K)} w={format_word(w.word)}")
    return CheckResult("components-boundary-mix", True, cases)


def _minrep_descent_pairs(poset: OrbitPoset, K):
    """Pairs (v, v') of minimal representatives with v = s_i v' and
    l(v) = l(v') + 1, in deterministic order."""
    group = poset.group
    reps = group.min_coset_reps(coset_complement(poset.model, K))
    reps_set = set(reps)
    out = []
    for vp in reps:
        for i in poset.model.cartan.labels:
            v = group.gens[i - 1] * vp
            if v.length == vp.length + 1 and v in reps_set:
                out.append((v, vp, i))
    return out


def check_components_minrep_top(poset: OrbitPoset) -> CheckResult:
    """[K, v, w0] is a component of
    closure[K, v', w0] ^ closure[{}, e, w0 v^{-1}] when v = s_i v'."""
    group = poset.group
    e = group.identity
    w0 = group.long_element()
    cases = 0
    for K in poset.model.members:
        for v, vp, i in _minrep_descent_pairs(poset, K):
            cases += 1
            z = poset.orbit_index(K, v, w0)
            z1 = poset.orbit_index(K, vp, w0)
            z2 = poset.orbit_index((), e, w0 * v.inverse())
            if not _is_component(poset, z, z1, z2):
                return CheckResult(
                    "components-minrep-top", False, cases,
                    f"K={format_set(K)} v={format_word(v.word)} "
                    f"v'={format_word(vp.word)} (i={i})")
    return CheckResult("components-minrep-top", True, cases)


def check_components_minrep_general(poset: OrbitPoset) -> CheckResult:
    """[K, v, w] is a component of closure[K, v, w0] ^ closure[K, v', w]
    when v = s_i v', for every w."""
    group = poset.group
    w0 = group.long_element()
    cases = 0
    for K in poset.model.members:
        for v, vp, i in _minrep_descent_pairs(poset, K):
            z1 = poset.orbit_index(K, v, w0)
            for w in group.enumerate_group():
                cases += 1
                z = poset.orbit_index(K, v, w)
                z2 = poset.orbit_index(K, vp, w)
                if not _is_component(poset, z, z1, z2):
                    return CheckResult(
                        "components-minrep-general", False, cases,
                        f"K={format_set(K)} v={format_word(v.word)} "
                        f"v'={format_word(vp.word)} w={format_word(w.word)}")
    return CheckResult("components-minrep-general", True, cases)


def expressible_orbits(poset: OrbitPoset) -> np.ndarray:
    """Boolean vector: orbit z is a component of closure(Z1) ^ closure(Z2)
    for some orbits Z1 != z != Z2.

    Both Z_i must lie strictly above z, and z is such a component iff
    some pair of strict upper bounds of z has no common strict upper
    bound of z below both, i.e. no common lower bound within the strict
    upper set of z.
    """
    L = poset.matrix
    n = len(poset)
    out = np.zeros(n, dtype=bool)
    for z in range(n):
        upper = np.flatnonzero(L[:, z])
        upper = upper[upper != z]
        if len(upper) == 0:
            continue
        sub = L[np.ix_(upper, upper)].astype(np.float32)
        # common[i, j] = number of t in upper with t below both
        common = sub @ sub.T
        out[z] = not (common > 0).all()
    return out


def check_divisorial_classification(poset: OrbitPoset) -> CheckResult:
    """Excluding the maximum, the non-expressible orbits are exactly the
    divisorial ones: boundary strata of singleton K and the classes
    [{}, e, s_i w0]."""
    express = expressible_orbits(poset)
    boundary, schubert = divisorial_orbits(poset.model)
    divisorial = {poset.index[o] for o in boundary + schubert}
    maximum = poset.index[poset.maximum()]
    not_expressible = set(map(int, np.flatnonzero(~express))) - {maximum}
    name = "divisorial-classification"
    cases = len(poset)
    extra = sorted(not_expressible - divisorial)
    missing = sorted(divisorial - not_expressible)
    if extra:
        return CheckResult(
            name, False, cases,
            f"{format_orbit(poset.orbits[extra[0]])} is not a component of "
            "any intersection yet is not divisorial")
    if missing:
        return CheckResult(
            name, False, cases,
            f"divisorial orbit {format_orbit(poset.orbits[missing[0]])} is "
            "a component of an intersection")
    return CheckResult(name, True, cases)


def check_criteria_agreement(poset: OrbitPoset) -> CheckResult:
    """The one-witness and two-witness criteria give identical relations."""
    A = poset.leq
    B = poset.bclosure_matrix()
    cases = A.size
    if not np.array_equal(A, B):
        a, b = map(int, np.argwhere(A != B)[0])
        one = "holds" if A[a, b] else "fails"
        two = "holds" if B[a, b] else "fails"
        return CheckResult(
            "criteria-agreement", False, cases,
            f"pair ({format_orbit(poset.orbits[a])}, "
            f"{format_orbit(poset.orbits[b])}): one-witness {one}, "
            f"two-witness {two}")
    return CheckResult("criteria-agreement", True, cases)


ALL_CHECKS = (
    check_poset_axioms,
    check_unique_maximum,
    check_v_monotonicity,
    check_fixed_v_containment,
    check_maximal_rep_inclusion,
    check_components_bruhat,
    check_components_boundary,
    check_components_minrep_top,
    check_components_minrep_general,
    check_divisorial_classification,
    check_criteria_agreement,
)


def verify_poset(poset: OrbitPoset) -> VerifyReport:
    """Run every check against an already-built poset."""
    report = VerifyReport(
        model_label=poset.model.label,
        cartan_label=poset.model.cartan.describe(),
        orbit_count=len(poset),
        backend=poset.backend)
    for check in ALL_CHECKS:
        report.checks.append(check(poset))
    return report


def verify_suite(model: EmbeddingModel, *,
                 max_orbits: int | None = None,
                 threads: int | None = None,
                 backend: str | None = None) -> VerifyReport:
    """Build the poset of a model and run the full verification suite."""
    kwargs = {} if max_orbits is None else {"max_orbits": max_orbits}
    poset = build_poset(model, threads=threads, backend=backend, **kwargs)
    return verify_poset(poset)

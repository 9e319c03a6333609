"""The double-Borel orbit index set of a toroidal embedding model.

Orbits are triples [K, v, w]: K a member of the model's divisor family,
v a minimal-length representative of W / W_{I - p(K)}, and w any Weyl
element.  Containment of one orbit in the closure of another is decided
by two equivalent Bruhat-order criteria:

* the one-witness form: [K', v', w'] lies in the closure of [K, v, w]
  iff K is a subset of K' and some u in W_{I - p(K)} satisfies
  v u <= v' and w' <= w u;

* the two-witness form, which instead searches for u in W_{I - p(K')}
  and a minimal representative u' in W_{I - p(K)} ^ W^{I - p(K')} with
  v u' u^{-1} <= v' and w' u <= w u'.

Both searches are exhaustive with early exit; at desk scale the relevant
parabolic subgroups are tiny and correctness beats cleverness.

Orbit serialization: ``[K={1,3}; v=1,2; w=2,1,2]`` with ``{}`` for the
empty set and ``e`` for the identity.  The positional short form
``[{1,3};1,2;2,1,2]`` is accepted on input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import WeylElement, WeylGroup, format_word, parse_word, weyl_group
from .embedding import EmbeddingModel, Subset, format_set
from .errors import OrbitValidationError, SizeBoundError
from .rootsys import CartanDatum

DEFAULT_MAX_ORBITS = 20_000


@dataclass(frozen=True)
class Orbit:
    """The orbit index [K, v, w]."""

    K: Subset
    v: WeylElement
    w: WeylElement

    def __repr__(self) -> str:
        return f"<Orbit {format_orbit(self)}>"


def format_orbit(o: Orbit) -> str:
    return (f"[K={format_set(o.K)}; v={format_word(o.v.word)}; "
            f"w={format_word(o.w.word)}]")


def group_for(model: EmbeddingModel) -> WeylGroup:
    return weyl_group(model.cartan)


def _complement(cartan: CartanDatum, J: Subset) -> frozenset[int]:
    return frozenset(cartan.labels) - set(J)


def coset_complement(model: EmbeddingModel, K: Subset) -> frozenset[int]:
    """The subset I - p(K) whose parabolic acts on the stratum of K."""
    return _complement(model.cartan, model.p(K))


def make_orbit(model: EmbeddingModel, K, v: WeylElement, w: WeylElement) -> Orbit:
    """Validated construction of [K, v, w].

    Rejects K outside the model family and rejects v that is not the
    minimal-length representative of its coset (use
    :func:`normalize_orbit` to project explicitly; normalization is never
    applied silently).
    """
    Kt = tuple(sorted(K))
    if Kt not in model:
        raise OrbitValidationError(
            f"K={format_set(Kt)} is not in the divisor family of the model")
    group = group_for(model)
    group._check_context(v, w)
    J = coset_complement(model, Kt)
    bad = v.descents_right() & J
    if bad:
        u, _ = group.coset_factor(v, J)
        raise OrbitValidationError(
            f"v={format_word(v.word)} has right descents {sorted(bad)} inside "
            f"I-p(K)={sorted(J)}; minimal representative is "
            f"{format_word(u.word)}")
    return Orbit(Kt, v, w)


def normalize_orbit(model: EmbeddingModel, K, v: WeylElement,
                    w: WeylElement) -> tuple[Orbit, WeylElement]:
    """Project v to its minimal coset representative.

    Returns the resulting orbit together with the discarded
    W_{I-p(K)}-part of v, so the caller sees exactly what was dropped.
    """
    Kt = tuple(sorted(K))
    if Kt not in model:
        raise OrbitValidationError(
            f"K={format_set(Kt)} is not in the divisor family of the model")
    group = group_for(model)
    vmin, rest = group.coset_factor(v, coset_complement(model, Kt))
    return Orbit(Kt, vmin, w), rest


def orbit_count(model: EmbeddingModel) -> int:
    """Sum over K of |W^{I-p(K)}| * |W| without materializing orbits."""
    group = group_for(model)
    n = len(group.enumerate_group())
    total = 0
    for K in model.members:
        total += (n // len(group.parabolic_elements(coset_complement(model, K)))) * n
    return total


def enumerate_orbits(model: EmbeddingModel,
                     max_orbits: int = DEFAULT_MAX_ORBITS) -> tuple[Orbit, ...]:
    """All orbits of the model, ordered by (K lex, v ShortLex, w ShortLex).

    >>> from orbitposet.embedding import wonderful_model
    >>> from orbitposet.rootsys import CartanDatum
    >>> len(enumerate_orbits(wonderful_model(CartanDatum.from_type("A1"))))
    6
    """
    model.require_valid()
    group = group_for(model)
    count = orbit_count(model)
    if count > max_orbits:
        raise SizeBoundError(
            f"model has {count} orbits, exceeding the bound {max_orbits}")
    elements = group.enumerate_group()
    out = []
    for K in model.members:
        for v in group.min_coset_reps(coset_complement(model, K)):
            for w in elements:
                out.append(Orbit(K, v, w))
    return tuple(out)


# -- closure criteria (single-pair, object level) -------------------------------


def closure_leq_witness(model: EmbeddingModel, a: Orbit, b: Orbit
                        ) -> WeylElement | None:
    """Witness u for "b lies in the closure of a", or None.

    One-witness criterion: K_a subset of K_b and some u in W_{I-p(K_a)}
    with v_a u <= v_b and w_b <= w_a u.
    """
    if not set(a.K) <= set(b.K):
        return None
    group = group_for(model)
    for u in group.parabolic_elements(coset_complement(model, a.K)):
        if (group.bruhat_leq(a.v * u, b.v)
                and group.bruhat_leq(b.w, a.w * u)):
            return u
    return None


def closure_leq(model: EmbeddingModel, a: Orbit, b: Orbit) -> bool:
    """True iff orbit b lies in the closure of orbit a."""
    return closure_leq_witness(model, a, b) is not None


def closure_leq_bclosure_witness(model: EmbeddingModel, a: Orbit, b: Orbit
                                 ) -> tuple[WeylElement, WeylElement] | None:
    """Witness pair (u, u') for the two-witness criterion, or None.

    Requires K_a subset of K_b, u in W_{I-p(K_b)} and
    u' in W_{I-p(K_a)} ^ W^{I-p(K_b)} with v_a u' u^{-1} <= v_b and
    w_b u <= w_a u'.
    """
    if not set(a.K) <= set(b.K):
        return None
    group = group_for(model)
    Jb = coset_complement(model, b.K)
    us = [(u, u.inverse()) for u in group.parabolic_elements(Jb)]
    for up in group.parabolic_elements(coset_complement(model, a.K)):
        if up.descents_right() & Jb:
            continue  # not a minimal representative mod W_{I-p(K_b)}
        va_up = a.v * up
        wa_up = a.w * up
        for u, uinv in us:
            if (group.bruhat_leq(va_up * uinv, b.v)
                    and group.bruhat_leq(b.w * u, wa_up)):
                return u, up
    return None


def closure_leq_bclosure(model: EmbeddingModel, a: Orbit, b: Orbit) -> bool:
    """Two-witness closure criterion; provably equivalent to
    :func:`closure_leq` and swept against it in the verification suite."""
    return closure_leq_bclosure_witness(model, a, b) is not None


def divisorial_orbits(model: EmbeddingModel
                      ) -> tuple[tuple[Orbit, ...], tuple[Orbit, ...]]:
    """The two families of divisorial orbit closures.

    * boundary: [K, e, w0] for the singleton members K of the family
      (the closure of [K, e, w0] is the boundary stratum of K);
    * schubert: [{}, e, s_i w0] for i in I (the codimension-1 large
      Schubert varieties).
    """
    group = group_for(model)
    e = group.identity
    w0 = group.long_element()
    boundary = tuple(Orbit(K, e, w0) for K in model.members if len(K) == 1)
    schubert = tuple(Orbit((), e, group.gens[i - 1] * w0)
                     for i in model.cartan.labels)
    return boundary, schubert


# -- orbit literals ---------------------------------------------------------


def _parse_subset_literal(text: str) -> Subset:
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise OrbitValidationError(f"expected a set literal, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(sorted(int(x) for x in body.split(",")))
    except ValueError:
        raise OrbitValidationError(f"bad set literal {text!r}") from None


def parse_orbit(model: EmbeddingModel, text: str) -> Orbit:
    """Parse an orbit literal and validate it against the model.

    Accepts the canonical labeled form ``[K={1}; v=e; w=1,2]`` and the
    positional short form ``[{1};e;1,2]``.
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise OrbitValidationError(f"orbit literal must be bracketed: {text!r}")
    parts = s[1:-1].split(";")
    if len(parts) != 3:
        raise OrbitValidationError(
            f"orbit literal needs 3 ';'-separated fields: {text!r}")
    expected = ("K", "v", "w")
    fields = []
    for part, name in zip(parts, expected):
        p = part.strip()
        if "=" in p:
            key, _, val = p.partition("=")
            if key.strip() != name:
                raise OrbitValidationError(
                    f"field {key.strip()!r} out of order (expected {name!r})")
            p = val.strip()
        fields.append(p)
    K = _parse_subset_literal(fields[0])
    group = group_for(model)
    try:
        v = parse_word(group, fields[1])
        w = parse_word(group, fields[2])
    except ValueError as exc:
        raise OrbitValidationError(str(exc)) from None
    return make_orbit(model, K, v, w)

"""Combinatorial models of toroidal group embeddings.

A model records only the index data of the boundary strata: the number n
of boundary divisors, the family of divisor subsets K that occur as
intersection labels of orbit closures, and for each K the subset p(K) of
the simple-root index set I that the stratum maps to in the wonderful
compactification.  No fan or cone geometry is kept.

Model file format (one model per file)::

    # optional comment / blank lines
    cartan: B2                 (or a raw matrix literal: [[2,-1],[-2,2]])
    divisors: 2
    K = {} ; p = {}
    K = {1} ; p = {1}
    K = {1,2} ; p = {1,2}
    K = {2} ; p = {2}

``dumps`` always emits the canonical form above (members sorted
lexicographically, set elements ascending, no comments), so
save -> load -> save is byte identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain, combinations

from .errors import ModelParseError, ModelValidationError
from .rootsys import CartanDatum, parse_cartan_spec

Subset = tuple[int, ...]

_HEADER_RE = re.compile(r"^(\w+)\s*:\s*(.+?)\s*$")
_MEMBER_RE = re.compile(
    r"^K\s*=\s*\{([0-9,\s]*)\}\s*;\s*p\s*=\s*\{([0-9,\s]*)\}\s*$")


def _parse_set(body: str, line: int) -> Subset:
    body = body.strip()
    if not body:
        return ()
    try:
        items = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ModelParseError(line, f"bad set body {{{body}}}") from None
    if len(set(items)) != len(items):
        raise ModelParseError(line, f"repeated element in {{{body}}}")
    return tuple(sorted(items))


def format_set(s: Subset) -> str:
    return "{" + ",".join(str(i) for i in s) + "}"


@dataclass(frozen=True)
class EmbeddingModel:
    """Index data (n, family of K's, map p) of a toroidal embedding.

    ``entries`` holds (K, p(K)) pairs with K sorted lexicographically;
    ``label`` is a human-readable source tag that does not take part in
    equality.
    """

    cartan: CartanDatum
    n_divisors: int
    entries: tuple[tuple[Subset, Subset], ...]
    label: str = field(default="custom", compare=False)

    @cached_property
    def members(self) -> tuple[Subset, ...]:
        """The family of divisor subsets, lexicographically sorted."""
        return tuple(k for k, _ in self.entries)

    @cached_property
    def _p_dict(self) -> dict[Subset, Subset]:
        return dict(self.entries)

    def p(self, K: Subset) -> Subset:
        return self._p_dict[tuple(sorted(K))]

    def __contains__(self, K) -> bool:
        return tuple(sorted(K)) in self._p_dict

    def validate(self) -> list[str]:
        """Check the model invariants; an empty list means the model is ok.

        Violations are returned as data (strings naming the offending
        subsets), never raised.
        """
        out = []
        labels = set(self.cartan.labels)
        divisors = set(range(1, self.n_divisors + 1))
        if self.n_divisors < 0:
            out.append("divisor count is negative")
        seen = set()
        for K, pK in self.entries:
            if K in seen:
                out.append(f"duplicate member K={format_set(K)}")
            seen.add(K)
            if not set(K) <= divisors:
                out.append(f"K={format_set(K)} not a subset of the divisor set")
            if not set(pK) <= labels:
                out.append(f"p({format_set(K)})={format_set(pK)} not a subset of I")
        if () not in seen:
            out.append("the empty set (the open stratum) is missing from the family")
        elif self.p(()) != ():
            out.append(f"p({{}}) = {format_set(self.p(()))} differs from {{}}")
        members = self.members
        for K in members:
            for Kp in members:
                if K != Kp and set(K) < set(Kp):
                    if not set(self.p(K)) <= set(self.p(Kp)):
                        out.append(
                            f"monotonicity violated: K={format_set(K)} subset of "
                            f"K'={format_set(Kp)} but p(K)={format_set(self.p(K))} "
                            f"not inside p(K')={format_set(self.p(Kp))}")
        return out

    def require_valid(self) -> "EmbeddingModel":
        violations = self.validate()
        if violations:
            raise ModelValidationError(violations)
        return self


def _sorted_subsets(universe: tuple[int, ...]) -> list[Subset]:
    return sorted(chain.from_iterable(
        combinations(universe, r) for r in range(len(universe) + 1)))


def wonderful_model(cartan: CartanDatum) -> EmbeddingModel:
    """The wonderful compactification: n equals the rank, the family is
    the full power set of I, and p is the identity.

    >>> m = wonderful_model(CartanDatum.from_type("A2"))
    >>> len(m.members)
    4
    """
    subsets = _sorted_subsets(cartan.labels)
    return EmbeddingModel(
        cartan=cartan, n_divisors=cartan.rank,
        entries=tuple((s, s) for s in subsets), label="wonderful")


def group_model(cartan: CartanDatum) -> EmbeddingModel:
    """The group itself (no boundary): the family is {{}} and n = 0."""
    return EmbeddingModel(cartan=cartan, n_divisors=0,
                          entries=(((), ()),), label="group")


def loads(text: str, label: str = "custom") -> EmbeddingModel:
    """Parse a model from text; see the module docstring for the grammar.

    Raises :class:`ModelParseError` (with a line number) on syntax errors
    and :class:`ModelValidationError` when the parsed model violates an
    invariant.
    """
    cartan: CartanDatum | None = None
    n_divisors: int | None = None
    entries: list[tuple[Subset, Subset]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("K"):
            m = _MEMBER_RE.match(line)
            if not m:
                raise ModelParseError(lineno, f"bad member line {line!r}")
            if cartan is None or n_divisors is None:
                raise ModelParseError(
                    lineno, "member line before cartan:/divisors: headers")
            K = _parse_set(m.group(1), lineno)
            pK = _parse_set(m.group(2), lineno)
            if any(K == prev for prev, _ in entries):
                raise ModelParseError(lineno, f"duplicate member K={format_set(K)}")
            entries.append((K, pK))
            continue
        m = _HEADER_RE.match(line)
        if not m:
            raise ModelParseError(lineno, f"unrecognized line {line!r}")
        key, value = m.group(1), m.group(2)
        if key == "cartan":
            try:
                cartan = parse_cartan_spec(value)
            except Exception as exc:
                raise ModelParseError(lineno, str(exc)) from None
        elif key == "divisors":
            try:
                n_divisors = int(value)
            except ValueError:
                raise ModelParseError(lineno, f"bad divisor count {value!r}") from None
        else:
            raise ModelParseError(lineno, f"unknown header {key!r}")
    if cartan is None:
        raise ModelParseError(0, "missing cartan: header")
    if n_divisors is None:
        raise ModelParseError(0, "missing divisors: header")
    model = EmbeddingModel(cartan=cartan, n_divisors=n_divisors,
                           entries=tuple(sorted(entries)), label=label)
    return model.require_valid()


def dumps(model: EmbeddingModel) -> str:
    """Canonical text form of a model (byte-stable across round trips)."""
    if model.cartan.name:
        cartan_spec = model.cartan.name
    else:
        cartan_spec = "[" + ",".join(
            "[" + ",".join(str(x) for x in row) + "]"
            for row in model.cartan.matrix) + "]"
    lines = [f"cartan: {cartan_spec}", f"divisors: {model.n_divisors}"]
    for K, pK in sorted(model.entries):
        lines.append(f"K = {format_set(K)} ; p = {format_set(pK)}")
    return "\n".join(lines) + "\n"


def load_model(path) -> EmbeddingModel:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read(), label=str(path))


def save_model(model: EmbeddingModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(model))

"""Finite-type Cartan data and root systems.

Roots are integer coordinate vectors in the simple-root basis, so all
arithmetic is exact.  A Cartan datum is accepted either from the built-in
catalog (``A1``, ``B3``, ``G2``, ...) or as a raw integer matrix, which is
validated structurally here and for finite type by bounded root closure in
:func:`build_root_system`.

>>> rs = build_root_system(CartanDatum.from_type("A2"))
>>> rs.num_positive
3
>>> rs.positive_roots
((0, 1), (1, 0), (1, 1))
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidCartanError, NotFiniteTypeError

# E8 has 120 positive roots; anything past this is treated as non-finite type.
DEFAULT_MAX_POSITIVE_ROOTS = 400

_TYPE_RE = re.compile(r"^([A-G])\s*(\d+)$")


def catalog_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix for one of the crystallographic families A-G."""
    n = rank

    def chain(edges: Iterable[tuple[int, int, int, int]]) -> list[list[int]]:
        m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, down, up in edges:
            m[i - 1][j - 1] = -down
            m[j - 1][i - 1] = -up
        return m

    simply = [(i, i + 1, 1, 1) for i in range(1, n)]
    if family == "A" and n >= 1:
        m = chain(simply)
    elif family == "B" and n >= 2:
        m = chain(simply[:-1] + [(n - 1, n, 1, 2)])
    elif family == "C" and n >= 2:
        m = chain(simply[:-1] + [(n - 1, n, 2, 1)])
    elif family == "D" and n >= 3:
        m = chain([(i, i + 1, 1, 1) for i in range(1, n - 1)] + [(n - 2, n, 1, 1)])
    elif family == "E" and n in (6, 7, 8):
        edges = [(1, 3, 1, 1), (2, 4, 1, 1)]
        edges += [(i, i + 1, 1, 1) for i in range(3, n)]
        m = chain(edges)
    elif family == "F" and n == 4:
        m = chain([(1, 2, 1, 1), (2, 3, 1, 2), (3, 4, 1, 1)])
    elif family == "G" and n == 2:
        m = chain([(1, 2, 1, 3)])
    else:
        raise InvalidCartanError(f"no catalog entry for type {family}{rank}")
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class CartanDatum:
    """A finite-type Cartan matrix with 1-based index set I = {1, ..., rank}.

    ``matrix[i][j]`` (0-based storage) is the pairing of the j-th simple
    root against the i-th simple coroot, so that the simple reflection
    ``s_i`` acts on root coordinates ``v`` by subtracting
    ``sum_j matrix[i][j] * v[j]`` from coordinate ``i``.
    """

    matrix: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        m = self.matrix
        l = len(m)
        if l == 0:
            raise InvalidCartanError("empty matrix")
        for row in m:
            if len(row) != l:
                raise InvalidCartanError("matrix is not square")
            for x in row:
                if not isinstance(x, int):
                    raise InvalidCartanError(f"non-integer entry {x!r}")
        for i in range(l):
            if m[i][i] != 2:
                raise InvalidCartanError(f"diagonal entry a[{i + 1}][{i + 1}] != 2")
            for j in range(l):
                if i == j:
                    continue
                if m[i][j] > 0:
                    raise InvalidCartanError(
                        f"positive off-diagonal entry a[{i + 1}][{j + 1}]")
                if (m[i][j] == 0) != (m[j][i] == 0):
                    raise InvalidCartanError(
                        f"zero asymmetry at a[{i + 1}][{j + 1}]")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def labels(self) -> tuple[int, ...]:
        """The index set I = (1, ..., rank)."""
        return tuple(range(1, self.rank + 1))

    @classmethod
    def from_type(cls, type_string: str) -> "CartanDatum":
        """Catalog lookup from a type string such as ``"B2"``.

        >>> CartanDatum.from_type("B2").matrix
        ((2, -1), (-2, 2))
        """
        s = type_string.strip()
        m = _TYPE_RE.match(s)
        if not m:
            raise InvalidCartanError(f"cannot parse Cartan type {type_string!r}")
        family, rank = m.group(1), int(m.group(2))
        label = f"{family}{rank}"
        return cls(catalog_matrix(family, rank), name=label)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]],
                    name: str | None = None) -> "CartanDatum":
        return cls(tuple(tuple(int(x) for x in row) for row in rows), name=name)

    def describe(self) -> str:
        return self.name if self.name else f"rank-{self.rank} matrix"


def parse_cartan_spec(spec: str) -> CartanDatum:
    """Parse a type string (``"A2"``) or a raw matrix literal
    (``"[[2,-1],[-1,2]]"``) into a Cartan datum."""
    s = spec.strip()
    if s.startswith("["):
        try:
            rows = ast.literal_eval(s)
        except (ValueError, SyntaxError) as exc:
            raise InvalidCartanError(f"bad matrix literal: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InvalidCartanError("matrix literal must be a list of lists")
        return CartanDatum.from_matrix(rows)
    return CartanDatum.from_type(s)


@dataclass(frozen=True)
class RootSystem:
    """All positive roots of a finite-type Cartan datum, lexicographically
    ordered by coordinate vector."""

    cartan: CartanDatum
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """The i-th simple root (i is 1-based)."""
        l = self.cartan.rank
        return tuple(1 if j == i - 1 else 0 for j in range(l))

    def pairing(self, i: int, v: Sequence[int]) -> int:
        """Pairing of the vector ``v`` against the i-th simple coroot."""
        row = self.cartan.matrix[i - 1]
        return sum(row[j] * v[j] for j in range(len(row)))

    def reflect(self, i: int, v: Sequence[int]) -> tuple[int, ...]:
        """Apply the simple reflection ``s_i`` to ``v`` in root coordinates.

        Only coordinate ``i`` changes.
        """
        c = self.pairing(i, v)
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    def is_root(self, v: Sequence[int]) -> bool:
        t = tuple(v)
        return t in self._positive_set or tuple(-x for x in t) in self._positive_set

    def is_positive(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._positive_set

    def all_roots(self) -> tuple[tuple[int, ...], ...]:
        neg = tuple(tuple(-x for x in r) for r in self.positive_roots)
        return self.positive_roots + neg

    @property
    def _positive_set(self) -> frozenset:
        # cached on first use; the instance is otherwise immutable
        cached = self.__dict__.get("_posset")
        if cached is None:
            cached = frozenset(self.positive_roots)
            self.__dict__["_posset"] = cached
        return cached


@lru_cache(maxsize=None)
def build_root_system(cartan: CartanDatum,
                      max_positive: int = DEFAULT_MAX_POSITIVE_ROOTS) -> RootSystem:
    """Enumerate the positive roots by closing the simple roots under
    simple reflections.

    Every positive root is reachable from a simple root through a chain of
    simple reflections that stays positive, so a breadth-first closure
    finds exactly R+.  If more than ``max_positive`` positive roots appear
    the input cannot be finite type and :class:`NotFiniteTypeError` is
    raised instead of looping forever.
    """
    l = cartan.rank
    simple = [tuple(1 if j == i else 0 for j in range(l)) for i in range(l)]
    rs_probe = RootSystem(cartan, tuple(simple))  # for reflect() only
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(1, l + 1):
                image = rs_probe.reflect(i, r)
                if min(image) >= 0 and image not in seen:
                    seen.add(image)
                    nxt.append(image)
        if len(seen) > max_positive:
            raise NotFiniteTypeError(
                f"more than {max_positive} positive roots generated: "
                "not finite type")
        frontier = nxt
    return RootSystem(cartan, tuple(sorted(seen)))

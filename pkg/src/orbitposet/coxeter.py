"""Weyl group elements, length, Bruhat order, and parabolic machinery.

Elements are stored in a canonical form: the tuple of images of the
simple roots, written in root coordinates.  That makes equality and
hashing structural, keeps all arithmetic over the integers, and gives the
length function as an inversion count over the positive roots.

A :class:`WeylGroup` is a *group context*: it owns the root system, an
interning table so each element exists once, the Bruhat-order cache, and
the integer tables consumed by the closure kernels.  Elements from
different contexts cannot be combined.

>>> W = WeylGroup.from_type("A2")
>>> s1, s2 = W.gens
>>> (s1 * s2 * s1) == (s2 * s1 * s2)
True
>>> W.long_element().length
3
>>> W.bruhat_leq(s1, s1 * s2)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ContextMismatchError, SizeBoundError
from .rootsys import CartanDatum, RootSystem, build_root_system

DEFAULT_MAX_GROUP_ORDER = 10**6
# Full multiplication / Bruhat tables are dense in |W|^2; keep them desk scale.
DEFAULT_MAX_TABLE_ORDER = 4096
DEFAULT_MAX_SEARCH = 10**8


class WeylElement:
    """A Weyl group element in canonical form.

    ``images[j]`` is the root-coordinate vector of the image of the
    (j+1)-th simple root.  Instances are interned per group, so object
    identity coincides with group equality within one context.
    """

    __slots__ = ("group", "images", "_length", "_word", "_hash")

    def __init__(self, group: "WeylGroup", images: tuple[tuple[int, ...], ...]):
        self.group = group
        self.images = images
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._hash = hash(images)

    # -- structure ---------------------------------------------------------

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.group is other.group and self.images == other.images

    def __repr__(self) -> str:
        return f"<WeylElement {format_word(self.word)}>"

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Image of an arbitrary root-coordinate vector under this element."""
        cols = self.images
        l = len(cols)
        return tuple(
            sum(v[j] * cols[j][k] for j in range(l)) for k in range(l)
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.group is not other.group:
            raise ContextMismatchError("elements belong to different groups")
        return self.group._intern(
            tuple(self.apply(col) for col in other.images))

    # -- length, descents, words -------------------------------------------

    @property
    def length(self) -> int:
        """Number of positive roots sent negative (= reduced word length)."""
        if self._length is None:
            roots = self.group.roots
            self._length = sum(
                1 for r in roots.positive_roots if max(self.apply(r)) <= 0)
        return self._length

    def is_identity(self) -> bool:
        return self is self.group.identity

    def descents_right(self) -> frozenset[int]:
        """Indices i with l(w s_i) < l(w); equivalently w(alpha_i) < 0."""
        return frozenset(
            i + 1 for i, col in enumerate(self.images) if max(col) <= 0)

    def descents_left(self) -> frozenset[int]:
        """Indices i with l(s_i w) < l(w)."""
        W = self.group
        return frozenset(
            i for i in W.cartan.labels
            if (W.gens[i - 1] * self).length < self.length)

    @property
    def word(self) -> tuple[int, ...]:
        """The ShortLex-least reduced word (1-based generator indices).

        Computed greedily: repeatedly strip the smallest left descent.
        """
        if self._word is None:
            if self.length == 0:
                self._word = ()
            else:
                i = min(self.descents_left())
                rest = self.group.gens[i - 1] * self
                self._word = (i,) + rest.word
        return self._word

    def inverse(self) -> "WeylElement":
        W = self.group
        out = W.identity
        for i in reversed(self.word):
            out = out * W.gens[i - 1]
        return out

    def shortlex_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.word)


@dataclass
class GroupTables:
    """Dense integer tables over the full group, indexed by ShortLex
    enumeration position.  Input layer for the closure kernels."""

    elements: tuple[WeylElement, ...]
    index: dict[WeylElement, int]
    lengths: np.ndarray        # int32 (k,)
    rmul: np.ndarray           # int32 (k, l): index of x * s_i
    lmul: np.ndarray           # int32 (k, l): index of s_i * x
    mult: np.ndarray           # int32 (k, k): index of x * y
    inv: np.ndarray            # int32 (k,)
    bruhat: np.ndarray         # uint8 (k, k): x <= y in Bruhat order
    rdesc: np.ndarray          # bool  (k, l): i+1 is a right descent of x
    ldesc: np.ndarray          # bool  (k, l): i+1 is a left descent of x

    @property
    def order(self) -> int:
        return len(self.elements)


class WeylGroup:
    """Group context: root system, interning table, caches, bounds.

    Construction is single-threaded; afterwards the context is only ever
    read, so it may be shared freely between worker threads.
    """

    def __init__(self, cartan: CartanDatum, *,
                 max_order: int = DEFAULT_MAX_GROUP_ORDER,
                 max_table_order: int = DEFAULT_MAX_TABLE_ORDER):
        self.cartan = cartan
        self.roots: RootSystem = build_root_system(cartan)
        self.max_order = max_order
        self.max_table_order = max_table_order
        self._by_images: dict[tuple, WeylElement] = {}
        l = cartan.rank
        ident = tuple(self.roots.simple_root(i) for i in range(1, l + 1))
        self.identity = self._intern(ident)
        self.gens: tuple[WeylElement, ...] = tuple(
            self._intern(tuple(self.roots.reflect(i, self.roots.simple_root(j))
                               for j in range(1, l + 1)))
            for i in range(1, l + 1))
        self._bruhat_cache: dict[tuple[WeylElement, WeylElement], bool] = {}
        self._subword_sets: dict[WeylElement, frozenset[WeylElement]] = {}
        self._elements: tuple[WeylElement, ...] | None = None
        self._parabolic_cache: dict[frozenset[int], tuple[WeylElement, ...]] = {}
        self._tables: GroupTables | None = None

    @classmethod
    def from_type(cls, type_string: str) -> "WeylGroup":
        return weyl_group(CartanDatum.from_type(type_string))

    def __repr__(self) -> str:
        return f"WeylGroup({self.cartan.describe()})"

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def _intern(self, images: tuple[tuple[int, ...], ...]) -> WeylElement:
        el = self._by_images.get(images)
        if el is None:
            el = WeylElement(self, images)
            self._by_images[images] = el
        return el

    def _check_context(self, *els: WeylElement) -> None:
        for el in els:
            if el.group is not self:
                raise ContextMismatchError(
                    "element does not belong to this group context")

    # -- basic operations ---------------------------------------------------

    def multiply(self, x: WeylElement, y: WeylElement) -> WeylElement:
        self._check_context(x, y)
        return x * y

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        """Product of generators; the word need not be reduced."""
        out = self.identity
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"generator index {i} out of range")
            out = out * self.gens[i - 1]
        return out

    def long_element(self) -> WeylElement:
        """The unique element of maximal length."""
        return self.longest_element(frozenset(self.cartan.labels))

    # -- enumeration ---------------------------------------------------------

    def enumerate_group(self, max_order: int | None = None) -> tuple[WeylElement, ...]:
        """All elements in ShortLex order (by length, then least word).

        >>> len(WeylGroup.from_type("B3").enumerate_group())
        48
        """
        if self._elements is None:
            bound = self.max_order if max_order is None else max_order
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in self.gens:
                        y = x * s
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                if len(seen) > bound:
                    raise SizeBoundError(
                        f"group order exceeds bound {bound}")
                frontier = nxt
            self._elements = tuple(sorted(seen, key=WeylElement.shortlex_key))
        elif max_order is not None and len(self._elements) > max_order:
            raise SizeBoundError(f"group order exceeds bound {max_order}")
        return self._elements

    @property
    def order(self) -> int:
        return len(self.enumerate_group())

    # -- Bruhat order ---------------------------------------------------------

    def bruhat_leq(self, x: WeylElement, y: WeylElement) -> bool:
        """Decide x <= y in Bruhat order by the descent recursion.

        With i a left descent of y: if i is a left descent of x the
        question reduces to s_i x <= s_i y, otherwise to x <= s_i y.
        Results are memoized per group context.
        """
        self._check_context(x, y)
        if x is y:
            return True
        if x.length >= y.length:
            return False
        if x is self.identity:
            return True
        key = (x, y)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        i = min(y.descents_left())
        s = self.gens[i - 1]
        yp = s * y
        sx = s * x
        if sx.length < x.length:
            out = self.bruhat_leq(sx, yp)
        else:
            out = self.bruhat_leq(x, yp)
        self._bruhat_cache[key] = out
        return out

    def bruhat_leq_subword(self, x: WeylElement, y: WeylElement) -> bool:
        """Independent subword oracle: x <= y iff the fixed reduced word of
        y contains a reduced word of x as a subword.

        The set of elements with a reduced word embedded in word(y) is
        built once per y by extending partial products only when the
        extension is length-increasing.
        """
        self._check_context(x, y)
        down = self._subword_sets.get(y)
        if down is None:
            current: set[WeylElement] = {self.identity}
            for i in y.word:
                s = self.gens[i - 1]
                new = set()
                for z in current:
                    zs = z * s
                    if zs.length > z.length:
                        new.add(zs)
                current |= new
            down = frozenset(current)
            self._subword_sets[y] = down
        return x in down

    # -- parabolic subgroups and quotients -------------------------------------

    def parabolic_elements(self, J: Iterable[int]) -> tuple[WeylElement, ...]:
        """All elements of the standard parabolic subgroup W_J, ShortLex."""
        Jf = frozenset(J)
        cached = self._parabolic_cache.get(Jf)
        if cached is None:
            gens = [self.gens[j - 1] for j in sorted(Jf)]
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in gens:
                        y = x * s
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                if len(seen) > self.max_order:
                    raise SizeBoundError(
                        f"parabolic subgroup order exceeds bound {self.max_order}")
                frontier = nxt
            cached = tuple(sorted(seen, key=WeylElement.shortlex_key))
            self._parabolic_cache[Jf] = cached
        return cached

    def longest_element(self, J: Iterable[int]) -> WeylElement:
        """The longest element of W_J (an involution); identity for J empty.

        Greedy ascent: within W_J, only the longest element has every
        j in J as a right descent.
        """
        Js = sorted(set(J))
        w = self.identity
        while True:
            for j in Js:
                if max(w.images[j - 1]) > 0:  # j is a right ascent
                    w = w * self.gens[j - 1]
                    break
            else:
                return w

    def min_coset_reps(self, J: Iterable[int]) -> tuple[WeylElement, ...]:
        """Minimal-length representatives of W/W_J: the elements with no
        right descent inside J, in ShortLex order."""
        Jf = frozenset(J)
        return tuple(w for w in self.enumerate_group()
                     if not (w.descents_right() & Jf))

    def coset_factor(self, w: WeylElement, J: Iterable[int]
                     ) -> tuple[WeylElement, WeylElement]:
        """Unique factorization w = u * a with u in W^J, a in W_J and
        l(w) = l(u) + l(a).

        >>> W = WeylGroup.from_type("A2")
        >>> u, a = W.coset_factor(W.long_element(), [1])
        >>> (u.word, a.word)
        ((1, 2), (1,))
        """
        self._check_context(w)
        Jf = frozenset(J)
        u = w
        suffix: list[int] = []
        while True:
            ds = u.descents_right() & Jf
            if not ds:
                break
            j = min(ds)
            u = u * self.gens[j - 1]
            suffix.append(j)
        a = self.identity
        for j in reversed(suffix):
            a = a * self.gens[j - 1]
        assert u * a == w and u.length + a.length == w.length
        return u, a

    # -- verified factorization descent property -----------------------------

    def verify_he_factorization(self, J_outer: Iterable[int],
                                J_inner: Iterable[int], *,
                                max_search: int = DEFAULT_MAX_SEARCH
                                ) -> "HeFactorizationReport":
        """Exhaustively check the coset-descent property used by the
        one-witness closure criterion.

        For every u in W_outer factored as u = u1 * u2 with
        u1 in W_outer ^ W^inner and u2 in W_inner, and every pair w, w'
        with w' <= w u, there must exist u2' <= u2 (hence u2' in W_inner)
        such that w' * u2'^{-1} <= w * u1.
        """
        Jo, Ji = frozenset(J_outer), frozenset(J_inner)
        labels = set(self.cartan.labels)
        if not Ji <= Jo or not Jo <= labels:
            raise ValueError("need J_inner <= J_outer <= I")
        outer = self.parabolic_elements(Jo)
        group = self.enumerate_group()
        total = len(outer) * len(group) * len(group)
        if total > max_search:
            raise SizeBoundError(
                f"search space of {total} triples exceeds bound {max_search}; "
                "try a smaller rank")
        cases = 0
        for u in outer:
            u1, u2 = self.coset_factor(u, Ji)
            candidates = [(t, t.inverse())
                          for t in self.parabolic_elements(Ji)
                          if self.bruhat_leq(t, u2)]
            for w in group:
                wu = w * u
                wu1 = w * u1
                for wp in group:
                    if not self.bruhat_leq(wp, wu):
                        continue
                    cases += 1
                    if not any(self.bruhat_leq(wp * tinv, wu1)
                               for _, tinv in candidates):
                        return HeFactorizationReport(
                            passed=False, cases=cases,
                            counterexample=(
                                f"u={format_word(u.word)} "
                                f"w={format_word(w.word)} "
                                f"w'={format_word(wp.word)}"))
        return HeFactorizationReport(passed=True, cases=cases,
                                     counterexample=None)

    # -- dense tables for the kernels -----------------------------------------

    def tables(self) -> GroupTables:
        """Build (once) the dense index tables over the whole group."""
        if self._tables is not None:
            return self._tables
        elements = self.enumerate_group()
        k = len(elements)
        if k > self.max_table_order:
            raise SizeBoundError(
                f"group order {k} exceeds table bound {self.max_table_order}")
        index = {el: i for i, el in enumerate(elements)}
        l = self.rank
        lengths = np.fromiter((el.length for el in elements),
                              dtype=np.int32, count=k)
        rmul = np.empty((k, l), dtype=np.int32)
        lmul = np.empty((k, l), dtype=np.int32)
        for xi, el in enumerate(elements):
            for j in range(l):
                rmul[xi, j] = index[el * self.gens[j]]
                lmul[xi, j] = index[self.gens[j] * el]
        rdesc = lengths[rmul] < lengths[:, None]
        ldesc = lengths[lmul] < lengths[:, None]

        mult = np.empty((k, k), dtype=np.int32)
        base = np.arange(k, dtype=np.int32)
        for yi, el in enumerate(elements):
            col = base
            for i in el.word:
                col = rmul[col, i - 1]
            mult[:, yi] = col

        inv = np.fromiter((index[el.inverse()] for el in elements),
                          dtype=np.int32, count=k)

        # Bruhat matrix by the descent recursion, one column per element in
        # increasing length order (ShortLex enumeration guarantees that).
        bruhat = np.zeros((k, k), dtype=np.uint8)
        bruhat[0, 0] = 1
        for yi in range(1, k):
            i = int(np.argmax(ldesc[yi]))  # least left descent (exists: yi != e)
            yp = lmul[yi, i]
            col = bruhat[:, yp]
            bruhat[:, yi] = np.where(ldesc[:, i], col[lmul[:, i]], col)
        self._tables = GroupTables(
            elements=elements, index=index, lengths=lengths,
            rmul=rmul, lmul=lmul, mult=mult, inv=inv, bruhat=bruhat,
            rdesc=rdesc, ldesc=ldesc)
        return self._tables


@dataclass(frozen=True)
class HeFactorizationReport:
    passed: bool
    cases: int
    counterexample: str | None


@lru_cache(maxsize=None)
def weyl_group(cartan: CartanDatum) -> WeylGroup:
    """Shared group context per Cartan datum."""
    return WeylGroup(cartan)


# -- reduced-word serialization ------------------------------------------------

def format_word(word: Sequence[int]) -> str:
    """Render a word as comma-separated generator indices, ``"e"`` if empty.

    >>> format_word((1, 2, 1))
    '1,2,1'
    >>> format_word(())
    'e'
    """
    return ",".join(str(i) for i in word) if word else "e"


def format_element(w: WeylElement) -> str:
    return format_word(w.word)


def parse_word(group: WeylGroup, text: str) -> WeylElement:
    """Parse a comma-separated word (``"1,2,1"`` or ``"e"``) and
    canonicalize it; the word need not be reduced."""
    s = text.strip()
    if s == "e" or s == "":
        return group.identity
    try:
        word = [int(part) for part in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    return group.element_from_word(word)

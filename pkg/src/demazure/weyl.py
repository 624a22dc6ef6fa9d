"""Weyl group elements, Bruhat order, parabolic cosets and the Demazure product.

An element is stored by its image of ``rho`` (all-ones in the omega basis);
``rho`` has trivial stabilizer, so this is a canonical form.  The reduced
word is recovered greedily: ``s_i`` is a left descent of ``w`` exactly when
coordinate ``i`` of ``w(rho)`` is negative, and the smallest such ``i`` is
peeled off first.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .root_datum import Coweight, Root, RootDatum, RootDatumError, Weight, build_root_datum


class WeylGroupError(ValueError):
    pass


class WeylElt:
    """An element of the Weyl group of ``group.datum``."""

    __slots__ = ("group", "canonical", "word")

    def __init__(self, group: "WeylGroup", canonical: tuple[int, ...]):
        self.group = group
        self.canonical = canonical
        self.word = group._reduced_word(canonical)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElt)
            and other.canonical == self.canonical
            and other.group.datum == self.group.datum
        )

    def __hash__(self):
        return hash(self.canonical)

    def __lt__(self, other: "WeylElt"):
        # total order for deterministic output only; not Bruhat order
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.group.multiply(self, other)

    def __repr__(self):
        return f"WeylElt({self.group.datum.cartan_type}, {self})"

    def __str__(self):
        return " ".join(f"s{i}" for i in self.word) if self.word else "e"

    def __len__(self):
        return len(self.word)

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def act(self, weight: Sequence[int]) -> Weight:
        """``w(weight)`` by applying the reduced word right to left."""
        d = self.group.datum
        out = tuple(weight)
        for i in reversed(self.word):
            out = d.reflect_weight(i, out)
        return out

    def act_coweight(self, coweight: Sequence) -> Coweight:
        d = self.group.datum
        out = tuple(coweight)
        for i in reversed(self.word):
            out = d.reflect_coweight(i, out)
        return out

    def act_root(self, root: Root) -> Root:
        return self.group.datum.root(self.act(root.weight))

    def has_left_descent(self, i: int) -> bool:
        return self.canonical[i - 1] < 0

    def has_right_descent(self, i: int) -> bool:
        return self.group.datum.root(self.act(self.group.datum.simple_root(i))).is_negative()

    def to_list(self) -> list[int]:
        return list(self.word)


@dataclass(frozen=True)
class CosetDecomposition:
    """``w = min_rep * levi_part`` with lengths adding up."""

    min_rep: WeylElt
    levi_part: WeylElt


class WeylGroup:
    """Weyl group of a root datum with memoized Bruhat comparisons."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self._bruhat_cache: dict[tuple, bool] = {}
        self._interval_cache: dict[tuple, frozenset] = {}
        self._lock = threading.Lock()
        self._elements: tuple[WeylElt, ...] | None = None

    def __repr__(self):
        return f"WeylGroup({self.datum.cartan_type})"

    def __eq__(self, other):
        return isinstance(other, WeylGroup) and other.datum == self.datum

    def __hash__(self):
        return hash(("W", self.datum))

    # -- construction --------------------------------------------------------

    def _reduced_word(self, canonical: tuple[int, ...]) -> tuple[int, ...]:
        word = []
        vec = canonical
        d = self.datum
        while True:
            for i, c in enumerate(vec, start=1):
                if c < 0:
                    word.append(i)
                    vec = d.reflect_weight(i, vec)
                    break
            else:
                return tuple(word)

    def identity(self) -> WeylElt:
        return WeylElt(self, self.datum.rho)

    def simple_reflection(self, i: int) -> WeylElt:
        return self.from_word([i])

    def from_word(self, word: Iterable[int]) -> WeylElt:
        vec = self.datum.rho
        try:
            for i in reversed(list(word)):
                vec = self.datum.reflect_weight(i, vec)
        except RootDatumError as exc:
            raise WeylGroupError(str(exc)) from None
        return WeylElt(self, vec)

    def multiply(self, a: WeylElt, b: WeylElt) -> WeylElt:
        return WeylElt(self, a.act(b.canonical))

    def inverse(self, a: WeylElt) -> WeylElt:
        return self.from_word(reversed(a.word))

    def length(self, w: WeylElt) -> int:
        return w.length

    def elements(self) -> tuple[WeylElt, ...]:
        """All of ``W`` ordered by length then reduced word."""
        if self._elements is None:
            seen = {self.datum.rho: self.identity()}
            queue = deque([self.identity()])
            while queue:
                w = queue.popleft()
                for i in self.datum.indices:
                    if not w.has_left_descent(i):
                        vec = self.datum.reflect_weight(i, w.canonical)
                        if vec not in seen:
                            seen[vec] = WeylElt(self, vec)
                            queue.append(seen[vec])
            self._elements = tuple(sorted(seen.values()))
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def longest_element(self) -> WeylElt:
        return WeylElt(self, tuple(-c for c in self.datum.rho))

    # -- inversions, Bruhat order -------------------------------------------

    def inversion_set(self, w: WeylElt) -> frozenset[Root]:
        """Positive roots sent to negative roots by ``w``."""
        return frozenset(
            r for r in self.datum.positive_roots if self.datum.root(w.act(r.weight)).is_negative()
        )

    def bruhat_leq(self, x: WeylElt, w: WeylElt) -> bool:
        key = (x.canonical, w.canonical)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        result = self._bruhat_leq(x, w)
        with self._lock:
            self._bruhat_cache[key] = result
        return result

    def _bruhat_leq(self, x: WeylElt, w: WeylElt) -> bool:
        if x.length > w.length:
            return False
        if w.length == 0:
            return x.length == 0
        if x.length == 0:
            return True
        i = w.word[0]
        sw = self.from_word(w.word[1:])
        if x.has_left_descent(i):
            return self.bruhat_leq(WeylElt(self, self.datum.reflect_weight(i, x.canonical)), sw)
        return self.bruhat_leq(x, sw)

    def lower_interval(self, w: WeylElt) -> frozenset[WeylElt]:
        """``{x : x <= w}`` by deleting single letters from reduced words."""
        key = w.canonical
        if key in self._interval_cache:
            return self._interval_cache[key]
        seen = {w}
        layer = [w]
        while layer:
            nxt = []
            for u in layer:
                for k in range(u.length):
                    x = self.from_word(u.word[:k] + u.word[k + 1:])
                    if x.length == u.length - 1 and x not in seen:
                        seen.add(x)
                        nxt.append(x)
            layer = nxt
        result = frozenset(seen)
        with self._lock:
            self._interval_cache[key] = result
        return result

    # -- parabolic cosets ------------------------------------------------------

    def coset_decompose(self, w: WeylElt, eta: Sequence) -> CosetDecomposition:
        """Split ``w = pi^eta(w) * pi_eta(w)`` for the parabolic ``W_eta``."""
        J = self._levi(eta)
        v = w
        changed = True
        while changed:
            changed = False
            for j in J:
                if v.has_right_descent(j):
                    v = self.multiply(v, self.simple_reflection(j))
                    changed = True
                    break
        return CosetDecomposition(v, self.multiply(v.inverse(), w))

    def is_min_length_rep(self, v: WeylElt, eta: Sequence) -> bool:
        return all(not v.has_right_descent(j) for j in self._levi(eta))

    def min_length_reps(self, eta: Sequence) -> tuple[WeylElt, ...]:
        """Minimum-length coset representatives ``W^eta``."""
        J = self._levi(eta)
        return tuple(v for v in self.elements() if all(not v.has_right_descent(j) for j in J))

    def in_parabolic(self, u: WeylElt, J: Iterable[int]) -> bool:
        return set(u.word) <= set(J)

    def _levi(self, eta: Sequence) -> tuple[int, ...]:
        try:
            return self.datum.levi_indices(eta)
        except RootDatumError as exc:
            raise WeylGroupError(str(exc)) from None

    # -- Demazure product --------------------------------------------------------

    def demazure_product(self, v: WeylElt, w: WeylElt) -> WeylElt:
        """Bruhat-maximal element of ``{x q : x <= v, q <= w}``."""
        out = w
        for i in reversed(v.word):
            if not out.has_left_descent(i):
                out = WeylElt(self, self.datum.reflect_weight(i, out.canonical))
        return out


_GROUPS: dict[RootDatum, WeylGroup] = {}


def weyl_group(datum: RootDatum | str) -> WeylGroup:
    """Shared ``WeylGroup`` instance for a root datum or type string."""
    if isinstance(datum, str):
        datum = build_root_datum(datum)
    if datum not in _GROUPS:
        _GROUPS[datum] = WeylGroup(datum)
    return _GROUPS[datum]


def iter_reduced_words(w: WeylElt) -> Iterator[tuple[int, ...]]:
    """Every reduced word of ``w``."""
    if w.length == 0:
        yield ()
        return
    g = w.group
    for i in g.datum.indices:
        if w.has_left_descent(i):
            rest = WeylElt(g, g.datum.reflect_weight(i, w.canonical))
            for tail in iter_reduced_words(rest):
                yield (i,) + tail

"""The group ring Z[X*(T)], Demazure operators and Demazure characters."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .root_datum import RootDatum, Weight
from .weyl import WeylElt, weyl_group


class CharacterError(ValueError):
    pass


class Character(Mapping):
    """Finitely supported map weight -> integer, with no zero entries.

    Coefficients may be negative; intermediate results of the Demazure
    operators are virtual characters.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for wt, c in items:
            wt = tuple(wt)
            acc[wt] = acc.get(wt, 0) + int(c)
        self._terms = {wt: c for wt, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, weight: Sequence[int], coeff: int = 1) -> "Character":
        return cls({tuple(weight): coeff})

    def __getitem__(self, weight):
        return self._terms[tuple(weight)]

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Character") -> "Character":
        out = dict(self._terms)
        for wt, c in other._terms.items():
            out[wt] = out.get(wt, 0) + c
        return Character(out)

    def __neg__(self) -> "Character":
        return Character({wt: -c for wt, c in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __repr__(self):
        return f"Character({len(self)} terms)"

    def __str__(self):
        return format_character(self)

    def multiplicity(self, weight: Sequence[int]) -> int:
        return self._terms.get(tuple(weight), 0)

    def support(self) -> frozenset[Weight]:
        return frozenset(self._terms)

    def dimension(self) -> int:
        if any(c < 0 for c in self._terms.values()):
            raise CharacterError("dimension of a virtual character with negative coefficients")
        return sum(self._terms.values())

    def reflect(self, datum: RootDatum, i: int) -> "Character":
        """``s_i`` acting on exponents."""
        return Character({datum.reflect_weight(i, wt): c for wt, c in self._terms.items()})

    def to_list(self) -> list[dict]:
        return [{"weight": list(wt), "mult": self._terms[wt]} for wt in self]

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, data: Iterable[Mapping]) -> "Character":
        return cls((tuple(t["weight"]), t["mult"]) for t in data)


def multiplicity(f: Character, mu: Sequence[int]) -> int:
    return f.multiplicity(mu)


def dimension(f: Character) -> int:
    return f.dimension()


def _operator_on_term(datum: RootDatum, i: int, nu: Weight) -> list[tuple[Weight, int]]:
    p = nu[i - 1]
    alpha = datum.cartan_matrix[i - 1]
    if p >= 0:
        # e^nu + e^{nu - alpha} + ... + e^{s_i nu}
        return [(tuple(x - k * a for x, a in zip(nu, alpha)), 1) for k in range(p + 1)]
    if p == -1:
        return []
    # -(e^{nu + alpha} + ... + e^{s_i nu - alpha})
    return [(tuple(x + k * a for x, a in zip(nu, alpha)), -1) for k in range(1, -p)]


def demazure_operator(datum: RootDatum, i: int, f: Character) -> Character:
    """Apply ``D_i(x) = (x - e^{-alpha_i} s_i(x)) / (1 - e^{-alpha_i})``."""
    datum._check_index(i)
    acc: dict[Weight, int] = {}
    for nu, c in f.items():
        for wt, sign in _operator_on_term(datum, i, nu):
            acc[wt] = acc.get(wt, 0) + sign * c
    return Character(acc)


@lru_cache(maxsize=None)
def _demazure_along(datum: RootDatum, start: Weight, canonical: tuple[int, ...]) -> Character:
    # ch = D_{i1}(ch of s_{i1} w), memoized on every suffix of the reduced word
    w = WeylElt(weyl_group(datum), canonical)
    if not w.word:
        return Character.monomial(start)
    i = w.word[0]
    rest = datum.reflect_weight(i, canonical)
    return demazure_operator(datum, i, _demazure_along(datum, start, rest))


def apply_word(datum: RootDatum, word: Sequence[int], f: Character) -> Character:
    """``D_{i1} o ... o D_{ik}(f)`` for an arbitrary (not necessarily reduced) word."""
    for i in reversed(word):
        f = demazure_operator(datum, i, f)
    return f


def demazure_character(lam: Sequence[int], w: WeylElt) -> Character:
    """Character of the Demazure module ``V_lambda^w``."""
    datum = w.group.datum
    lam = tuple(lam)
    datum._check_len(lam)
    if not datum.is_dominant(lam):
        raise CharacterError(f"highest weight {lam} is not dominant")
    ch = _demazure_along(datum, lam, w.canonical)
    if any(c < 0 for c in ch.values()):
        raise CharacterError("Demazure character acquired a negative coefficient")
    return ch


def levi_demazure_character(
    datum: RootDatum, J: Iterable[int], lam: Sequence[int], u: WeylElt
) -> Character:
    """Demazure character of the standard Levi with simple indices ``J``.

    Computed in ambient omega-coordinates by applying only ``D_j``, ``j in J``.
    """
    J = tuple(sorted(set(J)))
    lam = tuple(lam)
    datum._check_len(lam)
    for j in J:
        datum._check_index(j)
    if any(lam[j - 1] < 0 for j in J):
        raise CharacterError(f"{lam} is not dominant for the Levi {J}")
    if not set(u.word) <= set(J):
        raise CharacterError(f"{u} does not lie in the parabolic subgroup W_{J}")
    return _demazure_along(datum, lam, u.canonical)


def is_weyl_invariant(datum: RootDatum, f: Character) -> bool:
    """True when ``f`` is invariant under every simple reflection."""
    return all(f.reflect(datum, i) == f for i in datum.indices)


def format_character(f: Character, max_terms: int | None = None) -> str:
    parts = []
    for k, wt in enumerate(sorted(f, reverse=True)):
        if max_terms is not None and k >= max_terms:
            parts.append("...")
            break
        c = f[wt]
        mono = "e^(" + ",".join(str(x) for x in wt) + ")"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts) if parts else "0"


"""Finite-type root data with exact weight and coweight arithmetic.

Weights are integer tuples in the fundamental-weight basis, coweights are
tuples of ``Fraction`` in the fundamental-coweight basis.  Simple indices
are 1-based throughout the public API.

The Cartan matrix is stored as ``a[i][j] = <alpha_i, alpha_j^vee>`` with
Bourbaki node numbering:

* ``B_n``: ``alpha_n`` is the short simple root (``a[n-1][n] = -2``).
* ``C_n``: ``alpha_n`` is the long simple root (``a[n][n-1] = -2``).
* ``D_n``: node ``n-2`` is the branch point joined to ``n-1`` and ``n``.
* ``E_n``: chain ``1-3-4-...-n`` with node ``2`` attached to ``4``.
* ``F_4``: ``alpha_1, alpha_2`` long, ``alpha_3, alpha_4`` short.
* ``G_2``: ``alpha_1`` short, ``alpha_2`` long.

With this convention the simple root ``alpha_i`` has omega-coordinates equal
to row ``i`` of the Cartan matrix and the simple coroot ``alpha_i^vee`` has
x-coordinates equal to column ``i``.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import sympy

Weight = tuple  # tuple[int, ...] in the omega basis
Coweight = tuple  # tuple[Fraction, ...] in the x basis

_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootDatumError(ValueError):
    """Invalid Cartan type, index or vector shape."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _ADMISSIBLE:
            raise RootDatumError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, int) or not _ADMISSIBLE[self.family](self.rank):
            raise RootDatumError(f"rank {self.rank} not admissible for type {self.family}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if m is None:
            raise RootDatumError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``a[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki labels)."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based nodes
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if f == "B":
            link(n - 1, n, -2, -1)
        elif f == "C":
            link(n - 1, n, -1, -2)
    elif f == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif f == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(2, 3, -2, -1)
        link(3, 4)
    elif f == "G":
        link(1, 2, -1, -3)
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class Root:
    """A root with its omega-, simple- and coroot coordinates."""

    simple_coords: tuple[int, ...]
    weight: Weight
    coroot: tuple[int, ...]  # alpha^vee in the x basis

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords)

    def is_negative(self) -> bool:
        return all(c <= 0 for c in self.simple_coords)

    def __neg__(self) -> "Root":
        return Root(
            tuple(-c for c in self.simple_coords),
            tuple(-c for c in self.weight),
            tuple(-c for c in self.coroot),
        )


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Root datum of a simply connected group of the given finite type."""

    cartan_type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "cartan_matrix", cartan_matrix(self.cartan_type))

    def __eq__(self, other):
        return isinstance(other, RootDatum) and other.cartan_type == self.cartan_type

    def __hash__(self):
        return hash(self.cartan_type)

    def __repr__(self):
        return f"RootDatum({self.cartan_type})"

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def indices(self) -> range:
        return range(1, self.rank + 1)

    # -- basis conversions -------------------------------------------------

    @cached_property
    def _inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        # (A^{-1})[j][k] = <omega_j, x_k>
        inv = sympy.Matrix(self.cartan_matrix).inv()
        return tuple(
            tuple(Fraction(int(inv[j, k].p), int(inv[j, k].q)) for k in range(self.rank))
            for j in range(self.rank)
        )

    @cached_property
    def determinant(self) -> int:
        return int(sympy.Matrix(self.cartan_matrix).det())

    @cached_property
    def _adjugate_t(self) -> tuple[tuple[int, ...], ...]:
        # det * A^{-T}, integral; maps omega coords to det * simple coords
        d = self.determinant
        inv = self._inverse
        return tuple(
            tuple(int(inv[j][i] * d) for j in range(self.rank)) for i in range(self.rank)
        )

    def simple_root(self, i: int) -> Weight:
        self._check_index(i)
        return self.cartan_matrix[i - 1]

    def simple_coroot(self, i: int) -> tuple[int, ...]:
        self._check_index(i)
        return tuple(row[i - 1] for row in self.cartan_matrix)

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(int(j == i) for j in self.indices)

    def fundamental_coweight(self, i: int) -> Coweight:
        self._check_index(i)
        return tuple(Fraction(int(j == i)) for j in self.indices)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def weight_from_simple(self, coords: Sequence[int]) -> Weight:
        """Omega-coordinates of ``sum coords[i] alpha_i``."""
        self._check_len(coords)
        a = self.cartan_matrix
        return tuple(
            sum(coords[i] * a[i][j] for i in range(self.rank)) for j in range(self.rank)
        )

    def simple_coords(self, weight: Sequence) -> tuple[Fraction, ...]:
        """Coordinates of ``weight`` in the simple-root basis (exact)."""
        self._check_len(weight)
        d = self.determinant
        return tuple(
            Fraction(sum(r[j] * weight[j] for j in range(self.rank)), d)
            for r in self._adjugate_t
        )

    def in_root_lattice(self, weight: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.simple_coords(weight))

    # -- pairing and reflections -------------------------------------------

    def pair(self, weight: Sequence, coweight: Sequence) -> Fraction:
        """Exact pairing ``<weight, coweight>``."""
        self._check_len(weight)
        self._check_len(coweight)
        inv = self._inverse
        n = self.rank
        return sum(
            (Fraction(weight[j]) * inv[j][k] * coweight[k] for j in range(n) for k in range(n)),
            Fraction(0),
        )

    def reflect_weight(self, i: int, weight: Sequence[int]) -> Weight:
        self._check_index(i)
        self._check_len(weight)
        p = weight[i - 1]
        if p == 0:
            return tuple(weight)
        alpha = self.cartan_matrix[i - 1]
        return tuple(x - p * a for x, a in zip(weight, alpha))

    def reflect_coweight(self, i: int, coweight: Sequence) -> Coweight:
        self._check_index(i)
        self._check_len(coweight)
        p = coweight[i - 1]
        if p == 0:
            return tuple(coweight)
        return tuple(c - p * row[i - 1] for c, row in zip(coweight, self.cartan_matrix))

    def is_dominant(self, vec: Sequence) -> bool:
        return all(c >= 0 for c in vec)

    # -- roots ---------------------------------------------------------------

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """Positive roots ordered by height, then lexicographically."""
        n = self.rank
        seen: dict[tuple[int, ...], Root] = {}
        queue = deque()
        for i in self.indices:
            s = tuple(int(j == i) for j in self.indices)
            r = Root(s, self.simple_root(i), self.simple_coroot(i))
            seen[s] = r
            queue.append(r)
        while queue:
            r = queue.popleft()
            for i in self.indices:
                wt = self.reflect_weight(i, r.weight)
                p = r.weight[i - 1]
                s = tuple(c - p * int(j == i - 1) for j, c in enumerate(r.simple_coords))
                if all(c >= 0 for c in s) and s not in seen:
                    new = Root(s, wt, self.reflect_coweight(i, r.coroot))
                    seen[s] = new
                    queue.append(new)
        roots = sorted(seen.values(), key=lambda r: (r.height, r.simple_coords))
        assert all(len(r.simple_coords) == n for r in roots)
        return tuple(roots)

    @cached_property
    def _root_by_weight(self) -> dict[Weight, Root]:
        table = {}
        for r in self.positive_roots:
            table[r.weight] = r
            table[tuple(-c for c in r.weight)] = -r
        return table

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    def root(self, weight: Sequence[int]) -> Root:
        """Look up a root by its omega-coordinates."""
        try:
            return self._root_by_weight[tuple(weight)]
        except KeyError:
            raise RootDatumError(f"{tuple(weight)} is not a root of {self.cartan_type}") from None

    def is_root(self, weight: Sequence[int]) -> bool:
        return tuple(weight) in self._root_by_weight

    def levi_indices(self, eta: Sequence) -> tuple[int, ...]:
        """Simple indices ``i`` with ``<alpha_i, eta> = 0``."""
        self._check_coweight_dominant(eta)
        return tuple(i for i in self.indices if eta[i - 1] == 0)

    def levi_subsystem(self, eta: Sequence) -> tuple[tuple[int, ...], tuple[Root, ...]]:
        """Simple index set and roots ``{alpha : <alpha, eta> = 0}`` of the Levi."""
        J = self.levi_indices(eta)
        roots = tuple(
            r for r in self.roots
            if sum(c * e for c, e in zip(r.simple_coords, eta)) == 0
        )
        return J, roots

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "positive_roots": [list(r.simple_coords) for r in self.positive_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "RootDatum":
        d = cls(CartanType.parse(data["type"]))
        stored = data.get("cartan_matrix")
        if stored is not None and [list(r) for r in d.cartan_matrix] != stored:
            raise RootDatumError("Cartan matrix does not match the declared type")
        return d

    # -- validation ----------------------------------------------------------

    def _check_index(self, i: int):
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise RootDatumError(f"simple index {i!r} out of range 1..{self.rank}")

    def _check_len(self, vec: Sequence):
        if len(vec) != self.rank:
            raise RootDatumError(f"expected a vector of length {self.rank}, got {len(vec)}")

    def _check_coweight_dominant(self, eta: Sequence):
        self._check_len(eta)
        if any(c < 0 for c in eta):
            raise RootDatumError(f"coweight {tuple(eta)} is not dominant")


def build_root_datum(t: CartanType | str) -> RootDatum:
    if isinstance(t, str):
        t = CartanType.parse(t)
    return _cached_datum(t)


_DATA: dict[CartanType, RootDatum] = {}


def _cached_datum(t: CartanType) -> RootDatum:
    if t not in _DATA:
        _DATA[t] = RootDatum(t)
    return _DATA[t]


def as_coweight(values: Iterable) -> Coweight:
    return tuple(Fraction(v) for v in values)

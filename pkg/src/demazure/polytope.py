"""Demazure weight polytopes: vertices, facet inequalities, lattice points, faces.

Membership uses the fundamental-coweight family

    <lambda, (w^{-1} * v) x_i>  <=  <mu, v x_i>     for every i, v in W^{P_i}.

For lattice work a weight is written ``mu = lambda - sum_j c_j alpha_j``.
Since ``<alpha_j, y>`` is the j-th x-coordinate of a coweight ``y``, every
inequality turns into the integer constraint ``c . y <= floor(<lambda, y> - rhs)``
when ``y = v x_i`` (an integral coweight).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .root_datum import Coweight, RootDatum, Weight, as_coweight
from .weyl import WeylElt, WeylGroup


class PolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class Inequality:
    """``rhs <= <mu, normal>`` where ``normal = v x_i``."""

    v: WeylElt
    i: int
    normal: Coweight
    rhs: Fraction

    def to_dict(self) -> dict:
        return {
            "v_word": self.v.to_list(),
            "i": self.i,
            "rhs_num": self.rhs.numerator,
            "rhs_den": self.rhs.denominator,
        }


@dataclass(frozen=True)
class FaceLabel:
    """Face label ``(v, eta)`` with ``v`` a minimal coset representative for ``W_eta``."""

    v: WeylElt
    eta: Coweight

    def __post_init__(self):
        object.__setattr__(self, "eta", as_coweight(self.eta))
        g = self.v.group
        g.datum._check_len(self.eta)
        if any(c < 0 for c in self.eta):
            raise PolytopeError(f"coweight {self.eta} is not dominant")
        if not g.is_min_length_rep(self.v, self.eta):
            raise PolytopeError(f"{self.v} is not a minimum-length representative for W_eta")

    def to_dict(self) -> dict:
        return {"v_word": self.v.to_list(), "eta": [str(c) for c in self.eta]}

    def __str__(self):
        return f"F({self.v}, ({', '.join(str(c) for c in self.eta)}))"


@dataclass(frozen=True, eq=False)
class DemazurePolytope:
    lam: Weight
    w: WeylElt
    vertex_candidates: frozenset = field(repr=False)
    inequalities: tuple[Inequality, ...] = field(repr=False)

    @property
    def group(self) -> WeylGroup:
        return self.w.group

    @property
    def datum(self) -> RootDatum:
        return self.w.group.datum

    # -- membership ----------------------------------------------------------

    def contains(self, mu: Sequence) -> bool:
        """Exact membership test against every inequality."""
        mu = tuple(mu)
        self.datum._check_len(mu)
        pair = self.datum.pair
        return all(pair(mu, ineq.normal) >= ineq.rhs for ineq in self.inequalities)

    def saturated(self, mu: Sequence) -> list[Inequality]:
        """Inequalities holding with equality at ``mu``."""
        pair = self.datum.pair
        return [q for q in self.inequalities if pair(tuple(mu), q.normal) == q.rhs]

    @cached_property
    def _integer_system(self) -> tuple[np.ndarray, np.ndarray]:
        pair = self.datum.pair
        rows, bounds = [], []
        for ineq in self.inequalities:
            rows.append([int(c) for c in ineq.normal])
            bounds.append(math.floor(pair(self.lam, ineq.normal) - ineq.rhs))
        return np.array(rows, dtype=np.int64), np.array(bounds, dtype=np.int64)

    @cached_property
    def _box(self) -> tuple[int, ...]:
        d = self.datum
        upper = [0] * d.rank
        for x in self.vertex_candidates:
            c = d.simple_coords(tuple(a - b for a, b in zip(self.lam, x)))
            upper = [max(u, math.floor(ci)) for u, ci in zip(upper, c)]
        return tuple(upper)

    @cached_property
    def _lattice_depths(self) -> np.ndarray:
        """Root-lattice depths ``c`` of all lattice points, as an (N, rank) array."""
        box = self._box
        grid = np.stack(
            np.meshgrid(*[np.arange(b + 1, dtype=np.int64) for b in box], indexing="ij"), axis=-1
        ).reshape(-1, len(box))
        A, b = self._integer_system
        ok = np.all(grid @ A.T <= b, axis=1)
        return grid[ok]

    def lattice_points(self) -> frozenset[Weight]:
        """All points of the polytope in ``lambda + Q``."""
        return frozenset(self._depth_to_weight(c) for c in self._lattice_depths)

    def _depth_to_weight(self, c) -> Weight:
        a = self.datum.cartan_matrix
        n = self.datum.rank
        return tuple(
            int(self.lam[j] - sum(int(c[i]) * a[i][j] for i in range(n))) for j in range(n)
        )

    # -- faces -----------------------------------------------------------------

    def face_value(self, face: FaceLabel) -> Fraction:
        """``<lambda, pi^eta(w^{-1} * v) eta>``, the constant on the face."""
        g = self.group
        y = g.demazure_product(self.w.inverse(), face.v)
        rep = g.coset_decompose(y, face.eta).min_rep
        return self.datum.pair(self.lam, rep.act_coweight(face.eta))

    def on_face(self, mu: Sequence, face: FaceLabel) -> bool:
        mu = tuple(mu)
        if not self.contains(mu):
            raise PolytopeError(f"{mu} is not in the polytope; face membership undefined")
        return self.datum.pair(mu, face.v.act_coweight(face.eta)) == self.face_value(face)

    def face_points(self, face: FaceLabel) -> list[Weight]:
        """Lattice points of the face, sorted."""
        d = self.datum
        y = face.v.act_coweight(face.eta)
        # <mu, y> = <lambda, y> - c . y
        target = d.pair(self.lam, y) - self.face_value(face)
        den = math.lcm(*(Fraction(c).denominator for c in y), target.denominator)
        yi = np.array([int(Fraction(c) * den) for c in y], dtype=np.int64)
        depths = self._lattice_depths
        hit = depths[(depths @ yi) == int(target * den)]
        return sorted(self._depth_to_weight(c) for c in hit)

    def faces_containing(
        self, mu: Sequence, etas: Iterable[Sequence] | None = None
    ) -> list[FaceLabel]:
        mu = tuple(mu)
        if not self.contains(mu):
            raise PolytopeError(f"{mu} is not in the polytope")
        if etas is None:
            etas = [self.datum.fundamental_coweight(i) for i in self.datum.indices]
        out = []
        for eta in etas:
            for v in self.group.min_length_reps(eta):
                f = FaceLabel(v, eta)
                if self.on_face(mu, f):
                    out.append(f)
        return out

    def face_labels(self, etas: Iterable[Sequence] | None = None) -> list[FaceLabel]:
        if etas is None:
            etas = [self.datum.fundamental_coweight(i) for i in self.datum.indices]
        return [FaceLabel(v, eta) for eta in etas for v in self.group.min_length_reps(eta)]

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "type": str(self.datum.cartan_type),
            "lambda": list(self.lam),
            "w_word": self.w.to_list(),
            "vertices": [list(x) for x in sorted(self.vertex_candidates)],
            "inequalities": [q.to_dict() for q in self.inequalities],
        }


def build_polytope(lam: Sequence[int], w: WeylElt) -> DemazurePolytope:
    lam = tuple(lam)
    w.group.datum._check_len(lam)
    if not w.group.datum.is_dominant(lam):
        raise PolytopeError(f"{lam} is not dominant")
    return _build(lam, w)


@lru_cache(maxsize=4096)
def _build(lam: Weight, w: WeylElt) -> DemazurePolytope:
    g = w.group
    d = g.datum
    winv = w.inverse()
    verts = frozenset(x.act(lam) for x in g.lower_interval(w))
    ineqs = []
    for i in d.indices:
        xi = d.fundamental_coweight(i)
        for v in g.min_length_reps(xi):
            y = g.demazure_product(winv, v)
            ineqs.append(Inequality(v, i, v.act_coweight(xi), d.pair(lam, y.act_coweight(xi))))
    return DemazurePolytope(lam, w, verts, tuple(ineqs))


def contains(P: DemazurePolytope, mu: Sequence) -> bool:
    return P.contains(mu)


def on_face(P: DemazurePolytope, mu: Sequence, face: FaceLabel) -> bool:
    return P.on_face(mu, face)


def faces_containing(P: DemazurePolytope, mu: Sequence, etas=None) -> list[FaceLabel]:
    return P.faces_containing(mu, etas)


def lattice_points(P: DemazurePolytope) -> frozenset[Weight]:
    return P.lattice_points()


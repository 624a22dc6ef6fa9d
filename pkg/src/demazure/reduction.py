"""Reduction of Demazure weight multiplicities on polytope faces to a Levi.

For a face ``F(v, eta)`` of ``P_lambda^w`` put ``y = w^{-1} * v`` and

* ``q = v y^{-1}``  (so ``w^{-1} * v = q^{-1} v``),
* ``w_L = v pi_eta(y)^{-1} v^{-1}``,
* ``lambda_L = v pi^eta(y)^{-1} lambda``.

Weights on the face then have the same multiplicity in ``V_lambda^w``,
``V_lambda^q`` and the Levi Demazure module ``V_{lambda_L}^{w_L}``.  The Levi
side is evaluated in the standard Levi after transporting by ``v^{-1}``: the
multiplicity of ``mu`` equals that of ``v^{-1} mu`` in the ``W_J`` Demazure
character with highest weight ``pi^eta(y)^{-1} lambda`` and element
``pi_eta(y)^{-1}``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .character import demazure_character, levi_demazure_character
from .polytope import DemazurePolytope, FaceLabel, PolytopeError, build_polytope
from .root_datum import Coweight, Weight, build_root_datum
from .weyl import WeylElt, WeylGroup, weyl_group


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionData:
    lam: Weight
    w: WeylElt
    v: WeylElt
    eta: Coweight
    q: WeylElt
    w_L: WeylElt
    lam_L: Weight
    levi_indices: tuple[int, ...]
    u_L: WeylElt  # v^{-1} w_L v, in W_J
    lam_std: Weight  # v^{-1} lambda_L, J-dominant

    @property
    def face(self) -> FaceLabel:
        return FaceLabel(self.v, self.eta)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "w_word": self.w.to_list(),
            "v_word": self.v.to_list(),
            "eta": [str(c) for c in self.eta],
            "q_word": self.q.to_list(),
            "w_L_word": self.w_L.to_list(),
            "lambda_L": list(self.lam_L),
            "levi_indices": list(self.levi_indices),
            "u_L_word": self.u_L.to_list(),
            "lambda_std": list(self.lam_std),
        }

    @classmethod
    def from_dict(cls, group: WeylGroup, data: dict) -> "ReductionData":
        return cls(
            lam=tuple(data["lambda"]),
            w=group.from_word(data["w_word"]),
            v=group.from_word(data["v_word"]),
            eta=tuple(Fraction(c) for c in data["eta"]),
            q=group.from_word(data["q_word"]),
            w_L=group.from_word(data["w_L_word"]),
            lam_L=tuple(data["lambda_L"]),
            levi_indices=tuple(data["levi_indices"]),
            u_L=group.from_word(data["u_L_word"]),
            lam_std=tuple(data["lambda_std"]),
        )


def reduction_data(lam: Sequence[int], w: WeylElt, face: FaceLabel) -> ReductionData:
    g = w.group
    lam = tuple(lam)
    if not g.datum.is_dominant(lam):
        raise ReductionError(f"{lam} is not dominant")
    v, eta = face.v, face.eta
    if not g.is_min_length_rep(v, eta):
        raise ReductionError(f"{v} is not a minimum-length representative for W_eta")
    y = g.demazure_product(w.inverse(), v)
    dec = g.coset_decompose(y, eta)
    rep_inv = dec.min_rep.inverse()
    u_L = dec.levi_part.inverse()
    vinv = v.inverse()
    return ReductionData(
        lam=lam,
        w=w,
        v=v,
        eta=eta,
        q=v * y.inverse(),
        w_L=v * u_L * vinv,
        lam_L=(v * rep_inv).act(lam),
        levi_indices=g.datum.levi_indices(eta),
        u_L=u_L,
        lam_std=rep_inv.act(lam),
    )


def levi_character(rd: ReductionData):
    """Standard-Levi Demazure character for ``rd`` (weights in ``v^{-1}`` frame)."""
    return levi_demazure_character(rd.w.group.datum, rd.levi_indices, rd.lam_std, rd.u_L)


def levi_multiplicity(rd: ReductionData, mu: Sequence[int], check: bool = True) -> int:
    """``dim V_{lambda_L}^{w_L}(mu)`` for ``mu`` on the face."""
    mu = tuple(mu)
    if check:
        P = build_polytope(rd.lam, rd.w)
        try:
            on = P.on_face(mu, rd.face)
        except PolytopeError:
            on = False
        if not on:
            raise ReductionError(f"{mu} does not lie on {rd.face}")
    return levi_character(rd).multiplicity(rd.v.inverse().act(mu))


@dataclass(frozen=True)
class WeightRow:
    mu: Weight
    m_w: int
    m_q: int
    m_L: int


@dataclass
class VerificationReport:
    """Per-weight multiplicities on a face with theorem violations flagged.

    A flag ``{"weight": mu, "part": 1}`` means ``m_L != m_q``; ``"part": 2``
    means ``m_q != m_w``.
    """

    cartan_type: str
    lam: Weight
    w_word: tuple[int, ...]
    face: FaceLabel
    reduction: ReductionData
    rows: list[WeightRow] = field(default_factory=list)
    flags: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.flags

    def to_dict(self) -> dict:
        return {
            "instance": {
                "type": self.cartan_type,
                "lambda": list(self.lam),
                "w_word": list(self.w_word),
                "face": self.face.to_dict(),
            },
            "reduction": self.reduction.to_dict(),
            "rows": [
                {"weight": list(r.mu), "m_w": r.m_w, "m_q": r.m_q, "m_L": r.m_L} for r in self.rows
            ],
            "flags": self.flags,
            "seconds": self.seconds,
        }


def verify_theorem(lam: Sequence[int], w: WeylElt, face: FaceLabel) -> VerificationReport:
    """Compare ``m_w``, ``m_q`` and the Levi multiplicity on every face lattice point."""
    t0 = time.perf_counter()
    lam = tuple(lam)
    rd = reduction_data(lam, w, face)
    P = build_polytope(lam, w)
    ch_w = demazure_character(lam, w)
    ch_q = demazure_character(lam, rd.q)
    ch_L = levi_character(rd)
    vinv = face.v.inverse()
    report = VerificationReport(str(w.group.datum.cartan_type), lam, w.word, face, rd)
    for mu in P.face_points(face):
        m_w, m_q = ch_w.multiplicity(mu), ch_q.multiplicity(mu)
        m_L = ch_L.multiplicity(vinv.act(mu))
        report.rows.append(WeightRow(mu, m_w, m_q, m_L))
        if m_L != m_q:
            report.flags.append({"weight": list(mu), "part": 1})
        if m_q != m_w:
            report.flags.append({"weight": list(mu), "part": 2})
    report.seconds = time.perf_counter() - t0
    return report


# -- supporting identities ------------------------------------------------------


def connecting_multiplicity_check(lam: Sequence[int], w: WeylElt, face: FaceLabel) -> bool:
    """Multiplicities on ``F(v, eta)`` of ``P^w`` match those of ``v^{-1} mu``
    in ``V^{v^{-1} * w}``, and ``v^{-1} mu`` lies on ``F(e, eta)`` there."""
    g = w.group
    lam = tuple(lam)
    vinv = face.v.inverse()
    w2 = g.demazure_product(vinv, w)
    P, P2 = build_polytope(lam, w), build_polytope(lam, w2)
    ch, ch2 = demazure_character(lam, w), demazure_character(lam, w2)
    base = FaceLabel(g.identity(), face.eta)
    target = set(P2.face_points(base))
    for mu in P.face_points(face):
        nu = vinv.act(mu)
        if nu not in target or ch.multiplicity(mu) != ch2.multiplicity(nu):
            return False
    return True


def step_multiplicity_check(lam: Sequence[int], w: WeylElt, i: int, mu: Sequence[int]) -> bool:
    """Multiplicity of ``mu`` in ``V^w`` equals that of ``s_i mu`` in ``V^{s_i * w}``.

    Requires ``mu`` on some fundamental face ``F(v, x_k)`` with ``s_i v < v``.
    """
    g = w.group
    lam, mu = tuple(lam), tuple(mu)
    P = build_polytope(lam, w)
    if not P.contains(mu) or not any(
        f.v.has_left_descent(i) for f in P.faces_containing(mu)
    ):
        raise ReductionError(f"{mu} lies on no face F(v, x_k) with s_{i} v < v")
    si = g.simple_reflection(i)
    w2 = g.demazure_product(si, w)
    return demazure_character(lam, w).multiplicity(mu) == demazure_character(lam, w2).multiplicity(
        g.datum.reflect_weight(i, mu)
    )


def inversion_positivity_check(rd: ReductionData) -> bool:
    """``v^{-1} beta`` is positive for every inversion ``beta`` of ``q^{-1}``."""
    g = rd.w.group
    vinv = rd.v.inverse()
    return all(vinv.act_root(beta).is_positive() for beta in g.inversion_set(rd.q.inverse()))


def saturation_check(lam: Sequence[int], w: WeylElt) -> bool:
    """Support of ``ch(V_lambda^w)`` equals the lattice points of ``P_lambda^w``."""
    lam = tuple(lam)
    return demazure_character(lam, w).support() == build_polytope(lam, w).lattice_points()


def sign_condition_check(v: WeylElt, eta: Coweight, i: int) -> bool:
    """For ``s_i v < v``: ``<v^{-1} alpha_i, eta> < 0``."""
    d = v.group.datum
    root = v.inverse().act(d.simple_root(i))
    return d.pair(root, eta) < 0


def string_range(P: DemazurePolytope, mu: Sequence[int], i: int) -> tuple[int, int]:
    """Integers ``k`` with ``mu + k alpha_i`` in ``P`` form ``[k_min, k_max]``."""
    d = P.datum
    mu = tuple(mu)
    pair = d.pair
    lo, hi = -math.inf, math.inf
    for ineq in P.inequalities:
        # rhs <= <mu, n> + k <alpha_i, n>
        slack = pair(mu, ineq.normal) - ineq.rhs
        coef = ineq.normal[i - 1]
        if coef > 0:
            lo = max(lo, math.ceil(-slack / coef))
        elif coef < 0:
            hi = min(hi, math.floor(slack / -coef))
        elif slack < 0:
            raise ReductionError(f"string through {mu} misses the polytope")
    return int(lo), int(hi)


def string_bounds_check(P: DemazurePolytope, mu: Sequence[int], i: int) -> bool:
    """``-<mu, alpha_i^vee> <= k <= 0`` for every ``mu + k alpha_i`` in ``P``."""
    lo, hi = string_range(P, mu, i)
    return hi <= 0 and lo >= -mu[i - 1]


def face_transport_check(lam: Sequence[int], w: WeylElt, face: FaceLabel, i: int, mu) -> bool:
    """``s_i mu`` lies on ``F(s_i v, eta)`` of ``P^{s_i * w}``."""
    g = w.group
    si = g.simple_reflection(i)
    P2 = build_polytope(lam, g.demazure_product(si, w))
    nu = g.datum.reflect_weight(i, mu)
    return P2.contains(nu) and P2.on_face(nu, FaceLabel(si * face.v, face.eta))


# -- sweeps ---------------------------------------------------------------------


def dominant_weights(rank: int, max_coord: int) -> Iterator[Weight]:
    return iter(itertools.product(range(max_coord + 1), repeat=rank))


def sweep_instances(
    type_string: str, max_coord: int, etas: Iterable[Sequence] | None = None
) -> Iterator[tuple[Weight, WeylElt, FaceLabel]]:
    """Every ``(lambda, w, (v, eta))`` with ``lambda`` coords in ``0..max_coord``."""
    d = build_root_datum(type_string)
    g = weyl_group(d)
    if etas is None:
        etas = [d.fundamental_coweight(i) for i in d.indices]
    etas = list(etas)
    labels = [FaceLabel(v, eta) for eta in etas for v in g.min_length_reps(eta)]
    for lam in dominant_weights(d.rank, max_coord):
        for w in g.elements():
            for f in labels:
                yield lam, w, f


@dataclass
class SweepSummary:
    cartan_type: str
    max_coord: int
    instances: int = 0
    nonempty_faces: int = 0
    weights_checked: int = 0
    flags: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.flags

    def to_dict(self) -> dict:
        return {
            "type": self.cartan_type,
            "max_coord": self.max_coord,
            "instances": self.instances,
            "nonempty_faces": self.nonempty_faces,
            "weights_checked": self.weights_checked,
            "flags": self.flags,
            "seconds": self.seconds,
        }


def theorem_sweep(type_string: str, max_coord: int) -> SweepSummary:
    t0 = time.perf_counter()
    out = SweepSummary(type_string, max_coord)
    for lam, w, f in sweep_instances(type_string, max_coord):
        out.instances += 1
        rep = verify_theorem(lam, w, f)
        if rep.rows:
            out.nonempty_faces += 1
            out.weights_checked += len(rep.rows)
        for flag in rep.flags:
            out.flags.append(
                {"lambda": list(lam), "w_word": list(w.word), "face": f.to_dict(), **flag}
            )
    out.seconds = time.perf_counter() - t0
    return out


def saturation_sweep(type_string: str, max_coord: int) -> list[tuple[Weight, WeylElt, bool]]:
    g = weyl_group(type_string)
    return [
        (lam, w, saturation_check(lam, w))
        for lam in dominant_weights(g.datum.rank, max_coord)
        for w in g.elements()
    ]


def string_ranges(P: DemazurePolytope, points: Sequence[Weight], i: int) -> list[tuple[int, int]]:
    """Vectorized ``string_range`` for lattice points of ``P``."""
    if not points:
        return []
    d = P.datum
    A, b = P._integer_system
    depth = np.array(
        [[int(c) for c in d.simple_coords(tuple(l - m for l, m in zip(P.lam, mu)))] for mu in points],
        dtype=np.int64,
    )
    # depth of mu + k alpha_i is c - k e_i:  A c - k A[:, i] <= b
    slack = b[None, :] - depth @ A.T
    col = A[:, i - 1]
    out = []
    for row in slack:
        pos, neg = col > 0, col < 0
        lo = max((-(row[pos] // col[pos])).tolist(), default=-math.inf)
        hi = min((row[neg] // -col[neg]).tolist(), default=math.inf)
        out.append((lo, hi))
    return out


@dataclass
class IdentitySummary:
    """Violation counts for the supporting identities over a sweep."""

    cartan_type: str
    max_coord: int
    checks: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)
    seconds: float = 0.0

    def record(self, name: str, ok: bool):
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.violations[name] = self.violations.get(name, 0) + 1

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())


def identity_sweep(type_string: str, max_coord: int) -> IdentitySummary:
    """Check the structural and step identities behind the reduction rule.

    Per face label: ``w_L lambda_L = q lambda``, ``q <= w``, ``u_L in W_J``,
    ``lambda_std`` J-dominant, inversion positivity, the connecting identity
    through ``v^{-1}``, and the face equals ``v`` applied to the Levi weights.
    Per left descent ``s_i`` of ``v`` (and every face lattice point where
    relevant): the sign condition, both string bounds, the one-step
    multiplicity identity and the face transport.
    """
    t0 = time.perf_counter()
    out = IdentitySummary(type_string, max_coord)
    g = weyl_group(type_string)
    d = g.datum
    for lam, w, f in sweep_instances(type_string, max_coord):
        rd = reduction_data(lam, w, f)
        P = build_polytope(lam, w)
        pts = P.face_points(f)
        out.record("structure", rd.w_L.act(rd.lam_L) == rd.q.act(lam))
        out.record("q_leq_w", g.bruhat_leq(rd.q, w))
        out.record("levi_part", g.in_parabolic(rd.u_L, rd.levi_indices)
                   and all(rd.lam_std[j - 1] >= 0 for j in rd.levi_indices))
        out.record("inversion_positivity", inversion_positivity_check(rd))
        out.record("connecting", connecting_multiplicity_check(lam, w, f))
        ch_L = levi_character(rd)
        out.record("face_is_levi_polytope",
                   set(pts) == {rd.v.act(nu) for nu in ch_L.support()})
        if not pts:
            continue
        ch_w = demazure_character(lam, w)
        for i in d.indices:
            if not f.v.has_left_descent(i):
                continue
            out.record("sign", sign_condition_check(f.v, f.eta, i))
            si = g.simple_reflection(i)
            w2 = g.demazure_product(si, w)
            ch2 = demazure_character(lam, w2)
            P2 = build_polytope(lam, w2)
            moved = set(P2.face_points(FaceLabel(si * f.v, f.eta)))
            for mu, (lo, hi) in zip(pts, string_ranges(P, pts, i)):
                nu = d.reflect_weight(i, mu)
                out.record("string_upper", hi <= 0)
                out.record("string_lower", lo >= -mu[i - 1])
                out.record("step", ch_w.multiplicity(mu) == ch2.multiplicity(nu))
                out.record("transport", nu in moved)
    out.seconds = time.perf_counter() - t0
    return out

"""Euclidean coordinates for weights, used by the plot-data emitter.

Classical types and G2 use the usual epsilon basis with Bourbaki labels, so a
B3 weight ``rho = (1, 1, 1)`` lands at ``(5/2, 3/2, 1/2)``.  Other types fall
back to raw omega-coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .root_datum import RootDatum

F = Fraction


def _fundamental_weights_epsilon(datum: RootDatum) -> list[list[Fraction]] | None:
    t = datum.cartan_type
    n = t.rank
    if t.family == "A":
        return [
            [F(1) - F(i, n + 1) if k < i else -F(i, n + 1) for k in range(n + 1)]
            for i in range(1, n + 1)
        ]
    if t.family == "B":
        rows = [[F(int(k < i)) for k in range(n)] for i in range(1, n)]
        rows.append([F(1, 2)] * n)
        return rows
    if t.family == "C":
        return [[F(int(k < i)) for k in range(n)] for i in range(1, n + 1)]
    if t.family == "D":
        rows = [[F(int(k < i)) for k in range(n)] for i in range(1, n - 1)]
        rows.append([F(1, 2)] * (n - 1) + [F(-1, 2)])
        rows.append([F(1, 2)] * n)
        return rows
    if t.family == "G":
        # alpha_1 = e1 - e2 (short), alpha_2 = -2e1 + e2 + e3 (long)
        return [[F(0), F(-1), F(1)], [F(-1), F(-1), F(2)]]
    return None


def embedding_description(datum: RootDatum) -> str:
    fam = datum.cartan_type.family
    if fam == "A":
        return "epsilon basis of R^{n+1}: omega_i = e_1+...+e_i - i/(n+1) (e_1+...+e_{n+1})"
    if fam == "B":
        return "epsilon basis: omega_i = e_1+...+e_i (i<n), omega_n = (e_1+...+e_n)/2"
    if fam == "C":
        return "epsilon basis: omega_i = e_1+...+e_i"
    if fam == "D":
        return ("epsilon basis: omega_i = e_1+...+e_i (i<=n-2), "
                "omega_{n-1} = (e_1+...+e_{n-1}-e_n)/2, omega_n = (e_1+...+e_n)/2")
    if fam == "G":
        return "plane x+y+z=0 in R^3: alpha_1 = e1-e2, alpha_2 = -2e1+e2+e3"
    return "fundamental-weight coordinates (no Euclidean embedding)"


def embed(datum: RootDatum, weight: Sequence[int]) -> tuple[Fraction, ...]:
    """Euclidean coordinates of ``weight``."""
    rows = _fundamental_weights_epsilon(datum)
    if rows is None:
        return tuple(F(c) for c in weight)
    dim = len(rows[0])
    return tuple(sum((c * rows[i][k] for i, c in enumerate(weight)), F(0)) for k in range(dim))


def inner_product(datum: RootDatum, a: Sequence[int], b: Sequence[int]) -> Fraction:
    x, y = embed(datum, a), embed(datum, b)
    return sum((p * q for p, q in zip(x, y)), F(0))

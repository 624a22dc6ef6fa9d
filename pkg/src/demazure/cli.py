"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .character import Character, CharacterError, demazure_character
from .embedding import embed, embedding_description
from .polytope import FaceLabel, PolytopeError, build_polytope
from .reduction import (
    ReductionError,
    saturation_sweep,
    saturation_check,
    theorem_sweep,
    verify_theorem,
)
from .root_datum import RootDatumError, build_root_datum
from .weyl import WeylGroupError, weyl_group

SCHEMA = "demazure/v1"

USAGE_ERRORS = (RootDatumError, WeylGroupError, CharacterError, PolytopeError, ReductionError)


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rationals(text: str) -> list[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _types(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


# -- parsing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table", "plotdata"), default="table")
    common.add_argument("--output", "-o", help="write to this path instead of stdout")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("type", nargs="?", help="Cartan type, e.g. B3")
    instance.add_argument("--lambda", dest="lam", type=_ints, help="highest weight, omega coords")
    instance.add_argument("--word", type=_ints, default=[], help="word for w, e.g. 1,3,2")

    face = argparse.ArgumentParser(add_help=False)
    face.add_argument("--v", dest="v_word", type=_ints, default=None, help="word for v")
    face.add_argument("--eta", type=_rationals, default=None, help="dominant coweight, x coords")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--sweep", type=_types, default=None, help="comma-separated types")
    sweep.add_argument("--max-coord", type=int, default=2)

    p = argparse.ArgumentParser(prog="demazure", description="Demazure characters and polytopes")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("character", parents=[common, instance], help="Demazure character")
    c.set_defaults(func=cmd_character)
    c = sub.add_parser("polytope", parents=[common, instance], help="Demazure weight polytope")
    c.add_argument("--with-character", action="store_true")
    c.set_defaults(func=cmd_polytope)
    c = sub.add_parser("face", parents=[common, instance, face], help="face membership")
    c.add_argument("--mu", type=_ints, default=None, help="list the faces through this weight")
    c.set_defaults(func=cmd_face)
    c = sub.add_parser("reduce", parents=[common, instance, face, sweep], help="reduction rule")
    c.set_defaults(func=cmd_reduce)
    c = sub.add_parser("saturation", parents=[common, instance, sweep], help="saturation check")
    c.set_defaults(func=cmd_saturation)
    return p


def _instance(args):
    if not args.type:
        raise UsageError("a Cartan type is required")
    d = build_root_datum(args.type)
    g = weyl_group(d)
    if args.lam is None:
        raise UsageError("--lambda is required")
    if len(args.lam) != d.rank:
        raise UsageError(f"--lambda needs {d.rank} entries for {d.cartan_type}")
    if any(c < 0 for c in args.lam):
        raise UsageError(f"highest weight {tuple(args.lam)} is not dominant")
    return d, g, tuple(args.lam), g.from_word(args.word)


def _face(args, d, g) -> FaceLabel:
    if args.v_word is None or args.eta is None:
        raise UsageError("--v and --eta are required")
    return FaceLabel(g.from_word(args.v_word), tuple(args.eta))


# -- output helpers ------------------------------------------------------------------


def _emit(args, payload: dict | None, table: list[list] | None):
    fmt = args.format
    if fmt in ("json", "plotdata"):
        text = json.dumps({"schema": SCHEMA, **payload}, indent=1) + "\n"
    else:
        text = "".join("\t".join(str(x) for x in row) + "\n" for row in table)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _plot_points(d, weights, mult: Character | None = None) -> list[dict]:
    out = []
    for wt in sorted(weights):
        xyz = embed(d, wt)
        row = {"weight": list(wt), "coords": [float(c) for c in xyz], "exact": [_frac(c) for c in xyz]}
        if mult is not None:
            row["mult"] = mult.multiplicity(wt)
        out.append(row)
    return out


def _plot_meta(d) -> dict:
    return {"type": str(d.cartan_type), "embedding": embedding_description(d)}


# -- commands --------------------------------------------------------------------------


def cmd_character(args) -> int:
    d, g, lam, w = _instance(args)
    ch = demazure_character(lam, w)
    head = {"type": str(d.cartan_type), "lambda": list(lam), "w_word": w.to_list()}
    if args.format == "plotdata":
        payload = {**head, "metadata": _plot_meta(d), "points": _plot_points(d, ch.support(), ch)}
    else:
        payload = {**head, "dimension": ch.dimension(), "character": ch.to_list()}
    table = [["weight", "mult"]] + [[",".join(map(str, wt)), ch[wt]] for wt in ch]
    _emit(args, payload, table)
    return 0


def cmd_polytope(args) -> int:
    d, g, lam, w = _instance(args)
    P = build_polytope(lam, w)
    pts = P.lattice_points()
    ch = demazure_character(lam, w) if args.with_character else None
    if args.format == "plotdata":
        payload = {
            "type": str(d.cartan_type), "lambda": list(lam), "w_word": w.to_list(),
            "metadata": _plot_meta(d),
            "vertices": _plot_points(d, P.vertex_candidates),
            "points": _plot_points(d, pts, ch),
        }
    else:
        payload = P.to_dict()
        payload["lattice_points"] = [
            {"weight": list(p), **({"mult": ch.multiplicity(p)} if ch is not None else {})}
            for p in sorted(pts)
        ]
    table = [["kind", "weight"] + (["mult"] if ch is not None else [])]
    for kind, group in (("vertex", P.vertex_candidates), ("point", pts)):
        for x in sorted(group):
            row = [kind, ",".join(map(str, x))]
            if ch is not None:
                row.append(ch.multiplicity(x))
            table.append(row)
    _emit(args, payload, table)
    return 0


def cmd_face(args) -> int:
    d, g, lam, w = _instance(args)
    P = build_polytope(lam, w)
    if args.mu is not None:
        mu = tuple(args.mu)
        etas = [tuple(args.eta)] if args.eta is not None else None
        faces = P.faces_containing(mu, etas)
        payload = {"weight": list(mu), "faces": [f.to_dict() for f in faces]}
        table = [["v_word", "eta"]] + [
            [",".join(map(str, f.v.word)) or "e", ",".join(map(_frac, f.eta))] for f in faces
        ]
        _emit(args, payload, table)
        return 0
    f = _face(args, d, g)
    pts = P.face_points(f)
    if args.format == "plotdata":
        payload = {"face": f.to_dict(), "metadata": _plot_meta(d), "points": _plot_points(d, pts)}
    else:
        payload = {"face": f.to_dict(), "value": _frac(P.face_value(f)), "points": [list(p) for p in pts]}
    table = [["weight"]] + [[",".join(map(str, p))] for p in pts]
    _emit(args, payload, table)
    return 0


def cmd_reduce(args) -> int:
    if args.sweep:
        summaries = [theorem_sweep(t, args.max_coord) for t in args.sweep]
        payload = {"sweeps": [s.to_dict() for s in summaries]}
        table = [["type", "instances", "nonempty_faces", "weights", "flags", "seconds"]] + [
            [s.cartan_type, s.instances, s.nonempty_faces, s.weights_checked, len(s.flags),
             f"{s.seconds:.2f}"]
            for s in summaries
        ]
        _emit(args, payload, table)
        return 0 if all(s.ok for s in summaries) else 1
    d, g, lam, w = _instance(args)
    f = _face(args, d, g)
    rep = verify_theorem(lam, w, f)
    rd = rep.reduction
    if args.format == "plotdata":
        ch = demazure_character(lam, w)
        payload = {"face": f.to_dict(), "metadata": _plot_meta(d),
                   "points": _plot_points(d, [r.mu for r in rep.rows], ch)}
    else:
        payload = rep.to_dict()
    table = [
        ["q", str(rd.q)],
        ["w_L", str(rd.w_L)],
        ["lambda_L", ",".join(map(str, rd.lam_L))],
        ["levi_indices", ",".join(map(str, rd.levi_indices))],
        ["u_L", str(rd.u_L)],
        ["lambda_std", ",".join(map(str, rd.lam_std))],
        ["weight", "m_w", "m_q", "m_L"],
    ] + [[",".join(map(str, r.mu)), r.m_w, r.m_q, r.m_L] for r in rep.rows]
    table.append(["flags", len(rep.flags)])
    _emit(args, payload, table)
    return 0 if rep.ok else 1


def cmd_saturation(args) -> int:
    rows = []
    if args.sweep:
        for t in args.sweep:
            for lam, w, ok in saturation_sweep(t, args.max_coord):
                rows.append((t, lam, w, ok))
    else:
        d, g, lam, w = _instance(args)
        rows.append((str(d.cartan_type), lam, w, saturation_check(lam, w)))
    payload = {
        "results": [
            {"type": t, "lambda": list(lam), "w_word": w.to_list(), "saturated": ok}
            for t, lam, w, ok in rows
        ],
        "all_saturated": all(ok for *_, ok in rows),
    }
    table = [["type", "lambda", "w", "saturated"]] + [
        [t, ",".join(map(str, lam)), str(w), ok] for t, lam, w, ok in rows
    ]
    _emit(args, payload, table)
    return 0 if payload["all_saturated"] else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, *USAGE_ERRORS) as exc:
        print(f"demazure: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on unreadable
input, 3 when the input violates a precondition (genericity, emptiness, ...).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Any, Callable

from . import abacus, kgroup, typea
from .arrangement.polarized import ArrangementError, GaleDual, sign_str
from .audit import audit_hypertoric, per_flat_counts
from .exactlin import LinAlgError
from .fixtures import random_arrangement
from .report import AuditReport
from .schemas import (
    SchemaError,
    arrangement_from_json,
    arrangement_to_json,
    composition_from_json,
    load_json,
    multipartition_from_json,
    package_from_json,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class Precondition(Exception):
    pass


def _read(path: str) -> Any:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from None
    return load_json(text)


def _q(x: Fraction) -> str:
    return str(x)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _emit_report(args, rep: AuditReport) -> int:
    _emit(args, rep.to_json(), rep.text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def _load_arrangement(args):
    if getattr(args, "random", None):
        d, n = args.random
        rng = random.Random(args.seed)
        arr = random_arrangement(rng, d, n)
        return arr, {"seed": args.seed, "random": [d, n]}
    if not args.input:
        raise SchemaError("an input file (or --random D N) is required")
    return arrangement_from_json(_read(args.input)), {}


# -- subcommands -----------------------------------------------------------


def cmd_tutte(args) -> int:
    arr, _ = _load_arrangement(args)
    t = arr.tutte()
    values = {"T(1,1)": t(1, 1), "T(1,0)": t(1, 0), "T(0,1)": t(0, 1)}
    payload = {
        "polynomial": str(t),
        "coefficients": [[i, j, c] for (i, j), c in sorted(t.coeffs.items())],
        **{k: int(v) for k, v in values.items()},
    }
    lines = [f"T = {t}"]
    table = t.table()
    lines.append("coefficients (row i: x^i, column j: y^j)")
    lines += ["  " + " ".join(f"{c:>4}" for c in row) for row in table]
    lines.append("; ".join(f"{k}={int(v)}" for k, v in values.items()))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_fixed_points(args) -> int:
    arr, meta = _load_arrangement(args)
    pts = arr.fixed_points()
    pkg = kgroup.from_arrangement(arr)
    rows = []
    for p in pts:
        rows.append(
            {
                "signs": p.name,
                "vertex": [_q(x) for x in p.vertex],
                "basis": sorted(p.basis),
                "leaf": sorted(arr.leaf_flat(p.signs)),
                "weights": list(pkg.weights[p.name]),
            }
        )
    order = [[sign_str(a), sign_str(b)] for a, b in arr.closure_order.pairs()]
    payload = {"arrangement": arrangement_to_json(arr), "fixed_points": rows, "order": order, **meta}
    lines = [f"{len(pts)} fixed points (T(1,1) = {int(arr.tutte()(1, 1))})"]
    for r in rows:
        lines.append(
            f"  {r['signs']}  vertex=({', '.join(r['vertex'])})  basis={r['basis']}  leaf={r['leaf']}  weights={r['weights']}"
        )
    lines.append("order: " + (", ".join(f"{a} < {b}" for a, b in order) or "discrete"))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_audit_hypertoric(args) -> int:
    arr, meta = _load_arrangement(args)
    rep = audit_hypertoric(arr)
    rep.info.update(meta)
    rep.info["arrangement"] = arrangement_to_json(arr)
    rep.info["leaf_counts"] = per_flat_counts(arr)
    return _emit_report(args, rep)


def cmd_audit_s3(args) -> int:
    data = _read(args.input)
    if not isinstance(data, dict) or "mu" not in data or "nu" not in data:
        raise SchemaError("expected an object with keys 'mu' and 'nu'")
    mu = composition_from_json(data["mu"])
    nu = composition_from_json(data["nu"])
    if mu.total != nu.total:
        raise Precondition(f"|mu| = {mu.total} but |nu| = {nu.total}")
    rep = typea.s3_dual_check(mu, nu)
    return _emit_report(args, rep)


def _fmt_multi(comps) -> str:
    return "(" + ",".join("(" + ",".join(map(str, c)) + ")" for c in comps) + ")"


def _random_multipartition(rng: random.Random):
    e, ell = rng.randint(1, 5), rng.randint(1, 5)
    size = rng.randint(0, 12)
    sizes = [0] * ell
    for _ in range(size):
        sizes[rng.randrange(ell)] += 1
    comps = [rng.choice(typea.partitions_of(k)) for k in sizes]
    return e, [rng.randint(-3, 3) for _ in range(ell)], comps


def cmd_abacus_flip(args) -> int:
    if args.random:
        e, s, comps = _random_multipartition(random.Random(args.seed))
    else:
        if not args.input:
            raise SchemaError("an input file (or --random) is required")
        e, s, comps = multipartition_from_json(_read(args.input))
    if len(s) != len(comps):
        raise Precondition(f"{len(comps)} components but {len(s)} charges")
    f = abacus.uglov_flip(comps, s, e)
    back = abacus.uglov_flip(f.components, f.charges, f.e)
    ok = back.components == tuple(map(tuple, comps)) and back.charges == tuple(s) and back.e == e
    payload = {
        "input": {"e": e, "s": list(s), "components": [list(c) for c in comps]},
        "dual": {"e": f.e, "ell": f.ell, "t": list(f.charges), "components": [list(c) for c in f.components]},
        "involution": ok,
    }
    if args.random:
        payload["seed"] = args.seed
    text = (
        f"e={f.e} ℓ={f.ell} t=({','.join(map(str, f.charges))}) ξ={_fmt_multi(f.components)}\n"
        f"involution: {'OK' if ok else 'FAILED'}"
    )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_intersection_form(args) -> int:
    data = _read(args.input)
    if isinstance(data, dict) and "points" in data:
        pkg = package_from_json(data)
    else:
        pkg = kgroup.from_arrangement(arrangement_from_json(data))
    names = list(pkg.order.linear_extension())
    vs = {a: kgroup.v_class(pkg, a) for a in names}
    gram = [[kgroup.pairing(pkg, vs[a], vs[b]) for b in names] for a in names]
    orthonormal = all(gram[i][j] == (i == j) for i in range(len(names)) for j in range(len(names)))
    rep = AuditReport(f"intersection form on {len(names)} fixed points")
    rep.add("v-classes are orthonormal", orthonormal, {"gram": [[_q(x) for x in r] for r in gram]})
    payload_extra: dict = {
        "points": names,
        "euler": {a: _q(kgroup.euler_e(pkg, a)) for a in names},
        "v_restrictions": {a: _q(vs[a][a]) for a in names},
        "characters": {a: kgroup.standard_character(pkg, a, args.max_degree) for a in names},
        "character_weight": "leading weight normalized to 0",
    }
    if pkg.source is not None:
        tr = kgroup.transition_unitriangular(pkg)
        rep.add("[X] to v transition is unitriangular", tr.ok, None if tr.ok else list(tr.witness))
        payload_extra["transition"] = {"order": tr.order, "matrix": [[_q(x) for x in r] for r in tr.matrix]}
    dims = kgroup.leaf_filtration_dims(pkg)
    payload_extra["leaf_dims"] = [
        {"leaf": kgroup._label(s), "dim": dims.graded[s], "cumulative": dims.cumulative[s]} for s in pkg.leaf_order.elements
    ]
    payload_extra["point_stratum"] = kgroup._label(dims.point_stratum)
    payload_extra["dense_stratum"] = kgroup._label(dims.dense_stratum)
    rep.info.update(payload_extra)
    if args.json:
        print(rep.dumps())
    else:
        lines = [rep.text(), "points: " + " ".join(names)]
        if "transition" in payload_extra:
            lines.append("transition ([X_row] in the v basis):")
            lines += ["  " + " ".join(f"{v:>4}" for v in r) for r in payload_extra["transition"]["matrix"]]
        for a in names:
            lines.append(f"  char {a}: {payload_extra['characters'][a]}")
        for row in payload_extra["leaf_dims"]:
            lines.append(f"  leaf {row['leaf']}: dim {row['dim']} (cumulative {row['cumulative']})")
        print("\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_gm_check(args) -> int:
    arr, meta = _load_arrangement(args)
    rep = kgroup.gm_perp_check(arr)
    rep.info.update(meta)
    gd = GaleDual.of(arr)
    rep.info["bases"] = [
        {"point": p.name, "basis": sorted(p.basis), "dual_basis": sorted(q.basis)}
        for p in arr.fixed_points()
        for q in gd.arrangement.fixed_points()
        if q.signs == gd.dual_point(p.signs)
    ]
    return _emit_report(args, rep)


# -- argument parsing --------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="emit JSON instead of text")
    p.add_argument("--seed", type=int, default=default if suppress else 0, help="seed for random inputs")
    p.add_argument("--max-degree", type=int, default=default if suppress else 10,
                   help="truncation degree for standard-module characters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symdual", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    def arrangement_cmd(name: str, func: Callable, help: str):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("input", nargs="?", help="arrangement JSON file ('-' for stdin)")
        p.add_argument("--random", nargs=2, type=int, metavar=("D", "N"),
                       help="use a seeded random unimodular arrangement instead of a file")
        p.set_defaults(func=func)

    arrangement_cmd("tutte", cmd_tutte, "Tutte polynomial of the normals")
    arrangement_cmd("fixed-points", cmd_fixed_points, "fixed points, closure order and leaves")
    arrangement_cmd("audit-hypertoric", cmd_audit_hypertoric, "audit the Gale dual pair")
    arrangement_cmd("gm-check", cmd_gm_check, "lattice perp and basis complementarity")

    p = sub.add_parser("audit-s3", parents=[common], help="audit a type A pair {mu, nu}")
    p.add_argument("input")
    p.set_defaults(func=cmd_audit_s3)

    p = sub.add_parser("abacus-flip", parents=[common], help="rank-level flip of a charged multipartition")
    p.add_argument("input", nargs="?")
    p.add_argument("--random", action="store_true", help="flip a seeded random multipartition")
    p.set_defaults(func=cmd_abacus_flip)

    p = sub.add_parser("intersection-form", parents=[common],
                       help="intersection form, transition matrix and characters")
    p.add_argument("input", help="arrangement or fixed-point package JSON")
    p.set_defaults(func=cmd_intersection_form)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree is not None and args.max_degree < 0:
        parser.error("--max-degree must be nonnegative")
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Precondition, ArrangementError, LinAlgError, typea.TypeAError, abacus.AbacusError, kgroup.PackageError) as exc:
        print(f"precondition failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

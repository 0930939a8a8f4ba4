"""Duality audits for Gale-dual hypertoric pairs."""
from __future__ import annotations

from .arrangement.polarized import (
    GaleDual,
    GenericityError,
    LeafAssignmentFailure,
    PolarizedArrangement,
    _normalize,
    sign_str,
)
from .exactlin import solve
from .kgroup import duality_pairing_check, from_arrangement, gm_perp_check
from .report import AuditReport


def _flat(f) -> list[int]:
    return sorted(f)


def twisting_in_objective_space(arr: PolarizedArrangement, dual: PolarizedArrangement) -> set | None:
    """The twisting hyperplanes of ``dual`` carried to the objective space of ``arr``.

    A hyperplane of dual constants with normal ``A^T h`` is the hyperplane of
    objectives with normal ``h`` (the constants ``w`` satisfy ``A w = -xi``).
    Returns None if some normal is not in the row space of ``A``.
    """
    out = set()
    for nu in dual.twisting_arrangement():
        h = solve(arr.normals.T, nu)
        if h is None:
            return None
        out.add(_normalize(h))
    return out


def per_flat_counts(arr: PolarizedArrangement) -> list[dict]:
    """Leaf counts per coloop-free flat next to the Tutte product prediction."""
    counts: dict = {}
    for p in arr.fixed_points():
        f = arr.leaf_flat(p.signs)
        counts[f] = counts.get(f, 0) + 1
    rows = []
    for f in arr.coloop_free_flats():
        t_res = arr.restriction(f).tutte()(1, 0)
        t_loc = arr.localization(f).tutte()(0, 1)
        rows.append({"flat": _flat(f), "count": counts.get(f, 0), "tutte": int(t_res * t_loc)})
    stray = [f for f in counts if f not in set(arr.coloop_free_flats())]
    for f in stray:
        rows.append({"flat": _flat(f), "count": counts[f], "tutte": None})
    return rows


def audit_hypertoric(arr: PolarizedArrangement) -> AuditReport:
    """Run every duality check on ``arr`` and its Gale dual.

    Genericity failures of ``arr`` itself propagate as exceptions; a dual
    that fails to be generic is reported as a failed check.
    """
    rep = AuditReport(f"hypertoric pair d={arr.d} n={arr.n}")
    try:
        gd = GaleDual.of(arr)
    except GenericityError as exc:
        rep.add("Gale dual is generic", False, {"error": str(exc)})
        return rep
    dual = gd.arrangement
    rep.add("Gale dual is generic", True)
    rep.info["dual"] = {
        "d": dual.d,
        "normals": [[int(x) for x in r] for r in dual.normals.rows()],
        "constants": [str(x) for x in dual.constants],
        "objective": [str(x) for x in dual.objective],
    }

    t, td = arr.tutte(), dual.tutte()
    rep.add("Tutte polynomials swap variables", t == td.swap(), {"T": str(t), "T_dual": str(td)})
    fp, dfp = arr.fixed_points(), dual.fixed_points()
    rep.add("fixed points counted by T(1,1)", len(fp) == t(1, 1) and len(dfp) == td(1, 1),
            {"fixed": len(fp), "dual_fixed": len(dfp), "T11": int(t(1, 1))})

    dual_by_signs = {p.signs: p for p in dfp}
    bad = [p.name for p in fp if gd.dual_point(p.signs) not in dual_by_signs]
    rep.add("fixed-point bijection is defined", not bad and len(fp) == len(dfp), {"points": bad})
    if bad:
        return rep

    n = arr.n
    flats = {frozenset(f) for f in arr.coloop_free_flats()}
    dflats = {frozenset(f) for f in dual.coloop_free_flats()}
    comp = {GaleDual.flat_map(n, f) for f in flats}
    rep.add("coloop-free flats complement", comp == dflats,
            {"complements": sorted(map(_flat, comp)), "dual": sorted(map(_flat, dflats))})

    try:
        for a in (arr, dual):
            for p in a.fixed_points():
                a.leaf_flat(p.signs)
    except LeafAssignmentFailure as exc:
        rep.add("leaf flats are coloop-free flats", False, {"error": str(exc)})
        return rep
    rep.add("leaf flats are coloop-free flats", True)

    for label, a in (("", arr), ("dual ", dual)):
        rows = per_flat_counts(a)
        wrong = [r for r in rows if r["count"] != r["tutte"]]
        rep.add(f"{label}leaf counts equal Tutte products", not wrong, wrong)

    pkg, dpkg = from_arrangement(arr), from_arrangement(dual)
    pmap = {sign_str(a): sign_str(b) for a, b in gd.point_map().items()}
    lmap = {f: GaleDual.flat_map(n, f) for f in pkg.leaf_order.elements}
    if comp == dflats:
        rep.extend(duality_pairing_check(pkg, dpkg, pmap, lmap))

    sh = arr.shuffling_arrangement()
    tw = twisting_in_objective_space(arr, dual)
    rep.add("shuffling hyperplanes are the dual twisting hyperplanes", tw == sh,
            {"shuffling": sorted(map(list, sh)), "dual_twisting": None if tw is None else sorted(map(list, tw))})
    dsh = dual.shuffling_arrangement()
    dtw = twisting_in_objective_space(dual, arr)
    rep.add("dual shuffling hyperplanes are the twisting hyperplanes", dtw == dsh,
            {"dual_shuffling": sorted(map(list, dsh)), "twisting": None if dtw is None else sorted(map(list, dtw))})

    rep.add("Namikawa and Hamiltonian Weyl groups swap",
            arr.namikawa_weyl() == dual.hamiltonian_weyl() and arr.hamiltonian_weyl() == dual.namikawa_weyl(),
            {"W": arr.namikawa_weyl(), "W_ham": arr.hamiltonian_weyl(),
             "dual_W": dual.namikawa_weyl(), "dual_W_ham": dual.hamiltonian_weyl()})

    rep.extend(gm_perp_check(arr))
    return rep

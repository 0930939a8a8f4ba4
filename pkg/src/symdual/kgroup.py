"""Localization data at isolated fixed points.

A :class:`FixedPointPackage` records, for each fixed point, the integer
weights of the rank-one torus on the tangent space (2d of them, closed under
negation), the closure order and a leaf label.  Classes are functions from
fixed points to rationals; the equivariant intersection form is

    <b, c> = (-1)^d * sum_a b|_a c|_a / e(a)

with ``e(a)`` the product of all weights at ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm, prod
from typing import Hashable, Mapping

from .arrangement.polarized import GaleDual, PolarizedArrangement, sign_str
from .exactlin import kernel_basis, row_space_equal
from .poset import FinitePoset, reversal_witness
from .report import AuditReport


class PackageError(ValueError):
    pass


class UnknownPoint(PackageError, KeyError):
    pass


class NoChamberData(PackageError):
    pass


class BijectionMismatch(PackageError):
    pass


@dataclass(frozen=True)
class LocalizedClass:
    values: Mapping[str, Fraction]

    def __getitem__(self, point: str) -> Fraction:
        return self.values[point]


@dataclass
class FixedPointPackage:
    """Fixed points with tangent weights, closure order and leaves.

    ``leaf_order`` is a poset on leaf labels in which smaller means a smaller
    (more special) stratum.  ``source`` is set for packages built from an
    arrangement and enables the [X]-class operations.
    """

    d: int
    points: tuple[str, ...]
    weights: dict[str, tuple[int, ...]]
    order: FinitePoset
    leaf: dict[str, Hashable]
    leaf_order: FinitePoset
    source: PolarizedArrangement | None = None
    weight_scale: int = 1
    _chamber: frozenset = field(default=frozenset(), repr=False)

    def __post_init__(self):
        if set(self.weights) != set(self.points) or set(self.leaf) != set(self.points):
            raise PackageError("weights and leaf labels must be given for every point")
        for p in self.points:
            w = sorted(self.weights[p])
            if len(w) != 2 * self.d or 0 in w:
                raise PackageError(f"point {p}: need {2 * self.d} nonzero weights")
            if w != sorted(-x for x in w):
                raise PackageError(f"point {p}: weights are not closed under negation")
        if not self.order.is_antisymmetric():
            raise PackageError("closure order has a cycle")
        if set(self.order.elements) != set(self.points):
            raise PackageError("closure order must be on the fixed points")
        if not set(self.leaf.values()) <= set(self.leaf_order.elements):
            raise PackageError("leaf labels missing from the leaf poset")

    def _check(self, point: str) -> None:
        if point not in self.weights:
            raise UnknownPoint(point)

    def positive_weights(self, point: str) -> list[int]:
        self._check(point)
        return sorted(w for w in self.weights[point] if w > 0)

    def negative_weights(self, point: str) -> list[int]:
        self._check(point)
        return sorted(w for w in self.weights[point] if w < 0)

    def below(self, beta: str, alpha: str) -> bool:
        """Whether the vertex of ``beta`` lies in the chamber of ``alpha``."""
        if self.source is None:
            raise NoChamberData("package has no arrangement data")
        return (alpha, beta) in self._chamber

    @classmethod
    def from_dict(cls, data: Mapping) -> "FixedPointPackage":
        """Build from the JSON fixed-point schema.

        Leaf labels carry no order of their own in that schema, so the leaf
        poset is the discrete one.
        """
        d = int(data["d"])
        points = tuple(str(p["name"]) for p in data["points"])
        weights = {str(p["name"]): tuple(int(w) for w in p["weights"]) for p in data["points"]}
        order = FinitePoset(points, [tuple(map(str, pr)) for pr in data.get("order", [])])
        leaf = {str(k): str(v) for k, v in (data.get("leaf") or {p: "*" for p in points}).items()}
        labels = sorted(set(leaf.values()))
        return cls(d, points, weights, order, leaf, FinitePoset(labels, []))


def leaf_poset(arr: PolarizedArrangement) -> FinitePoset:
    """Coloop-free flats ordered so that larger flats (smaller strata) come first."""
    flats = arr.coloop_free_flats()
    rel = [(f, g) for f in flats for g in flats if g <= f]
    return FinitePoset(flats, rel)


def from_arrangement(arr: PolarizedArrangement) -> FixedPointPackage:
    """Package of a generic unimodular arrangement.

    The objective is rescaled by the common denominator of its entries so that
    the weights ``+-<xi, u_i>`` are integers; ``weight_scale`` records the factor.
    """
    scale = lcm(*(x.denominator for x in arr.objective)) if arr.objective else 1
    pts = arr.fixed_points()
    names = tuple(p.name for p in pts)
    weights = {}
    for p in pts:
        ws = []
        for w in arr.edge_weights(p).values():
            w = w * scale
            if w.denominator != 1:
                raise PackageError("edge weights are not integral; normals must be unimodular")
            ws += [int(w), -int(w)]
        weights[p.name] = tuple(sorted(ws))
    co = arr.closure_order
    order = FinitePoset(names, [(sign_str(a), sign_str(b)) for a, b in co.pairs()])
    leaf = {p.name: arr.leaf_flat(p.signs) for p in pts}
    chamber = frozenset(
        (a.name, b.name) for a in pts for b in pts if arr.in_chamber(a.signs, b.vertex)
    )
    return FixedPointPackage(arr.d, names, weights, order, leaf, leaf_poset(arr), arr, scale, chamber)


def v_class(pkg: FixedPointPackage, alpha: str) -> LocalizedClass:
    """Supported at ``alpha`` only, with value the product of the negative weights."""
    pkg._check(alpha)
    return LocalizedClass({p: Fraction(prod(pkg.negative_weights(alpha))) if p == alpha else Fraction(0) for p in pkg.points})


def euler_e(pkg: FixedPointPackage, alpha: str) -> Fraction:
    pkg._check(alpha)
    return Fraction(prod(pkg.weights[alpha]))


def pairing(pkg: FixedPointPackage, beta: LocalizedClass, gamma: LocalizedClass) -> Fraction:
    total = sum((beta[a] * gamma[a] / euler_e(pkg, a) for a in pkg.points), Fraction(0))
    return (-1) ** pkg.d * total


def x_class(pkg: FixedPointPackage, alpha: str) -> LocalizedClass:
    """Class of the closure of the attracting set of ``alpha``.

    At a point ``beta`` whose vertex lies in the chamber of ``alpha`` the value
    is the product over the tight hyperplanes ``i`` at ``beta`` of
    ``alpha_i * <xi, u_i>``; elsewhere it is zero.  At ``alpha`` itself this is
    the product of the negative weights.
    """
    pkg._check(alpha)
    arr = pkg.source
    if arr is None:
        raise NoChamberData("[X]-classes need an arrangement-built package")
    a = arr.fixed_point(_signs(alpha))
    vals = {}
    for b in arr.fixed_points():
        if not pkg.below(b.name, alpha):
            vals[b.name] = Fraction(0)
            continue
        ew = arr.edge_weights(b)
        vals[b.name] = Fraction(prod(a.signs[i] * ew[i] * pkg.weight_scale for i in sorted(b.basis)))
    return LocalizedClass(vals)


def _signs(name: str) -> tuple[int, ...]:
    return tuple(1 if c == "+" else -1 for c in name)


@dataclass
class Transition:
    ok: bool
    order: list[str]
    matrix: list[list[Fraction]]
    witness: tuple | None = None


def transition_unitriangular(pkg: FixedPointPackage) -> Transition:
    """Coefficients of each [X_alpha] in the v-basis.

    Rows and columns follow a linear extension of the closure order; row
    ``alpha``, column ``beta`` is the coefficient of ``v_beta``.  Unitriangular
    means ones on the diagonal, integer entries, and a nonzero entry only when
    ``beta`` precedes ``alpha`` in the closure order.
    """
    names = pkg.order.linear_extension()
    vs = {b: v_class(pkg, b) for b in names}
    matrix = []
    witness = None
    for a in names:
        xa = x_class(pkg, a)
        row = [pairing(pkg, xa, vs[b]) for b in names]
        matrix.append(row)
        for b, c in zip(names, row):
            if witness is not None:
                break
            if a == b and c != 1:
                witness = (a, b, str(c))
            elif c.denominator != 1:
                witness = (a, b, str(c))
            elif c != 0 and not pkg.order.leq(b, a):
                witness = (a, b, str(c))
    return Transition(witness is None, names, matrix, witness)


@dataclass
class LeafDims:
    graded: dict
    cumulative: dict
    point_stratum: Hashable | None
    dense_stratum: Hashable | None


def leaf_filtration_dims(pkg: FixedPointPackage) -> LeafDims:
    """Per-leaf counts ``#{alpha : leaf(alpha) = S}`` and ``#{alpha : leaf(alpha) <= S}``."""
    lp = pkg.leaf_order
    graded = {s: 0 for s in lp.elements}
    for p in pkg.points:
        graded[pkg.leaf[p]] += 1
    cumulative = {s: sum(graded[t] for t in lp.elements if lp.leq(t, s)) for s in lp.elements}
    mins = [s for s in lp.elements if all(lp.leq(s, t) for t in lp.elements)]
    maxs = [s for s in lp.elements if all(lp.leq(t, s) for t in lp.elements)]
    return LeafDims(graded, cumulative, mins[0] if mins else None, maxs[0] if maxs else None)


def _label(x) -> object:
    if isinstance(x, frozenset):
        return sorted(x)
    return x


def duality_pairing_check(
    pkg: FixedPointPackage,
    dual: FixedPointPackage,
    point_map: Mapping[str, str],
    leaf_map: Mapping,
) -> AuditReport:
    """Compatibility of a proposed duality between two packages.

    Raises :class:`BijectionMismatch` if the maps are not even defined on
    every point and leaf; everything else is reported as checks.
    """
    missing = [a for a in pkg.points if a not in point_map] + [
        _label(s) for s in pkg.leaf_order.elements if s not in leaf_map
    ]
    if missing:
        raise BijectionMismatch(f"maps undefined on {missing}")
    rep = AuditReport("fixed-point duality")
    f = lambda a: point_map.get(a)
    w = reversal_witness(pkg.order, dual.order, f)
    rep.add("fixed-point bijection reverses order", w is None, None if w is None else [str(x) for x in w])
    g = lambda s: leaf_map.get(s)
    w = reversal_witness(pkg.leaf_order, dual.leaf_order, g)
    rep.add("leaf bijection reverses order", w is None, None if w is None else [_label(x) for x in w])
    bad = [a for a in pkg.points if point_map.get(a) not in dual.leaf or dual.leaf[point_map[a]] != leaf_map.get(pkg.leaf[a])]
    rep.add("leaves of dual points match dual leaves", not bad, {"points": bad} if bad else None)
    dims = leaf_filtration_dims(pkg)
    ddims = leaf_filtration_dims(dual)
    mism = [
        {"leaf": _label(s), "dim": dims.graded[s], "dual_dim": ddims.graded.get(leaf_map.get(s))}
        for s in pkg.leaf_order.elements
        if ddims.graded.get(leaf_map.get(s)) != dims.graded[s]
    ]
    rep.add("per-leaf dimensions pair up", not mism, mism or None)
    ok1 = dims.point_stratum is not None and ddims.dense_stratum is not None and (
        dims.graded[dims.point_stratum] == ddims.graded[ddims.dense_stratum]
    )
    ok2 = dims.dense_stratum is not None and ddims.point_stratum is not None and (
        dims.graded[dims.dense_stratum] == ddims.graded[ddims.point_stratum]
    )
    rep.add(
        "point stratum matches dual dense stratum",
        ok1 and ok2,
        None if ok1 and ok2 else {"point": _label(dims.point_stratum), "dual_dense": _label(ddims.dense_stratum)},
    )
    return rep


def gm_perp_check(arr: PolarizedArrangement) -> AuditReport:
    """Kernel/perp relation of the dual lattices and complementarity of optimal bases."""
    rep = AuditReport("coordinate-subspace complementarity")
    gd = GaleDual.of(arr)
    a = arr.normals
    b = gd.arrangement.normals
    n = arr.n
    zero = all(x == 0 for x in (a @ b.T).entries)
    rep.add("normals times dual normals transpose vanishes", zero)
    rep.add("kernel equals dual row space", row_space_equal(kernel_basis(a), b))
    rep.add("dual kernel equals row space", row_space_equal(kernel_basis(b), a))
    bad = []
    dual_pts = {p.signs: p for p in gd.arrangement.fixed_points()}
    for p in arr.fixed_points():
        q = dual_pts.get(gd.dual_point(p.signs))
        if q is None or q.basis & p.basis or len(q.basis) + len(p.basis) != n:
            bad.append(p.name)
    rep.add("optimal bases are complementary", not bad, {"points": bad} if bad else None)
    return rep


def standard_character(pkg: FixedPointPackage, alpha: str, degree: int) -> list[int]:
    """Coefficients of ``q^(-k)``, ``k = 0..degree``, of ``prod (1 - q^(-chi))^(-1)``
    over the positive weights ``chi`` at ``alpha``.  The leading weight is
    normalized to 0.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [1] + [0] * degree
    for chi in pkg.positive_weights(alpha):
        for k in range(chi, degree + 1):
            coeffs[k] += coeffs[k - chi]
    return coeffs


def dual_package(arr: PolarizedArrangement) -> tuple[FixedPointPackage, FixedPointPackage, dict, dict]:
    """Packages of ``arr`` and its Gale dual with the point and leaf bijections."""
    gd = GaleDual.of(arr)
    pkg = from_arrangement(arr)
    dpkg = from_arrangement(gd.arrangement)
    pmap = {sign_str(a): sign_str(b) for a, b in gd.point_map().items()}
    lmap = {f: GaleDual.flat_map(arr.n, f) for f in pkg.leaf_order.elements}
    return pkg, dpkg, pmap, lmap

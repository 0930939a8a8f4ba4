"""Polarized hyperplane arrangements and their fixed-point combinatorics.

An arrangement is a triple ``(A, r, xi)``: a ``d x n`` integer matrix whose
columns ``a_i`` are the normals, constants ``r_i`` and a linear objective
``xi``.  Hyperplane ``i`` is ``{x : <a_i, x> + r_i = 0}`` and a sign vector
``alpha`` cuts out the closed region
``Delta_alpha = {x : alpha_i (<a_i, x> + r_i) >= 0 for all i}``.

Hyperplanes are indexed from 0.  Sign vectors are tuples of +1/-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Sequence

from ..exactlin import (
    RatMatrix,
    dot,
    gale_complement,
    integer_kernel,
    is_unimodular,
    kernel_basis,
    primitive_vector,
    saturate,
    solve,
    to_fraction,
)
from ..poset import FinitePoset
from .matroid import TuttePolynomial, VectorMatroid

SignVector = tuple[int, ...]
Flat = frozenset


class ArrangementError(ValueError):
    pass


class InvalidArrangement(ArrangementError):
    """Malformed data: wrong shapes, zero normals, rank or unimodularity failures."""


class GenericityError(ArrangementError):
    pass


class NonSimple(GenericityError):
    pass


class DegenerateObjective(GenericityError):
    pass


class NotAFlat(ArrangementError):
    pass


class HasColoop(ArrangementError):
    pass


class LeafAssignmentFailure(ArrangementError):
    pass


def sign_str(alpha: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in alpha)


def parse_signs(s: str) -> SignVector:
    table = {"+": 1, "-": -1}
    try:
        return tuple(table[c] for c in s)
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r}") from None


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class FixedPoint:
    signs: SignVector
    vertex: tuple[Fraction, ...]
    basis: frozenset

    @property
    def name(self) -> str:
        return sign_str(self.signs)


class PolarizedArrangement:
    """Normals, constants and objective of a polarized arrangement.

    With ``check=True`` (the default) the data is validated eagerly: integer
    normals of full row rank, unimodular, no zero column, simple constants and
    a generic objective.  Derived arrangements (restrictions, localizations)
    are built with ``check=False`` because genericity need not survive.
    """

    def __init__(self, normals, constants: Sequence, objective: Sequence, check: bool = True):
        if not isinstance(normals, RatMatrix):
            rows = [list(r) for r in normals]
            normals = RatMatrix(rows, ncols=len(rows[0]) if rows else len(constants))
        self.normals = normals
        self.constants = tuple(to_fraction(x) for x in constants)
        self.objective = tuple(to_fraction(x) for x in objective)
        if len(self.constants) != normals.ncols:
            raise InvalidArrangement("one constant per hyperplane is required")
        if len(self.objective) != normals.nrows:
            raise InvalidArrangement("objective length must equal the rank d")
        if check:
            self.validate()

    @property
    def d(self) -> int:
        return self.normals.nrows

    @property
    def n(self) -> int:
        return self.normals.ncols

    def normal(self, i: int) -> tuple[Fraction, ...]:
        return self.normals.col(i)

    def __repr__(self) -> str:
        return (
            f"PolarizedArrangement(normals={self.normals.to_lists()}, "
            f"constants={[str(c) for c in self.constants]}, objective={[str(c) for c in self.objective]})"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolarizedArrangement):
            return NotImplemented
        return (self.normals, self.constants, self.objective) == (other.normals, other.constants, other.objective)

    def __hash__(self):
        return hash((self.normals, self.constants, self.objective))

    # -- validation -------------------------------------------------------

    def validate(self) -> None:
        if not self.normals.is_integer():
            raise InvalidArrangement("normals must be integers")
        if self.normals.rank() < self.d:
            raise InvalidArrangement("normals must have full row rank")
        for i in range(self.n):
            if not any(self.normal(i)):
                raise InvalidArrangement(f"normal {i} is zero")
        if not is_unimodular(self.normals):
            raise InvalidArrangement("normals are not unimodular")
        self.check_simple()
        self.check_objective()

    def check_simple(self) -> None:
        for b, v in self._vertices():
            extra = [j for j in range(self.n) if j not in b and self.slack(j, v) == 0]
            if extra:
                raise NonSimple(f"hyperplanes {sorted(b) + extra} meet at {[str(x) for x in v]}")

    def check_objective(self) -> None:
        for b in self.matroid.bases():
            for i, u in self._dual_basis(b).items():
                if dot(self.objective, u) == 0:
                    raise DegenerateObjective(
                        f"objective vanishes on edge direction {[str(x) for x in u]}"
                    )

    # -- matroid ----------------------------------------------------------

    @cached_property
    def matroid(self) -> VectorMatroid:
        return VectorMatroid.from_matrix(self.normals)

    def tutte(self) -> TuttePolynomial:
        return self.matroid.tutte()

    def coloop_free_flats(self) -> list[Flat]:
        return self.matroid.coloop_free_flats()

    def is_coloop_free(self) -> bool:
        return not any(self.matroid.is_coloop(e) for e in range(self.n))

    # -- geometry ---------------------------------------------------------

    def slack(self, i: int, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal(i), x) + self.constants[i]

    def in_chamber(self, alpha: SignVector, x: Sequence[Fraction]) -> bool:
        return all(s * self.slack(i, x) >= 0 for i, s in enumerate(alpha))

    def _vertex(self, basis) -> tuple[Fraction, ...]:
        b = sorted(basis)
        sub = self.normals.select_columns(b).T
        v = solve(sub, [-self.constants[i] for i in b])
        if v is None:
            raise ArrangementError(f"{b} is not a basis")
        return v

    def _dual_basis(self, basis) -> dict[int, tuple[Fraction, ...]]:
        """Vectors ``u_i`` (i in basis) with ``<a_j, u_i> = delta_ij`` on the basis."""
        cache = self.__dict__.setdefault("_dual_cache", {})
        key = frozenset(basis)
        if key not in cache:
            cache[key] = self._compute_dual_basis(key)
        return cache[key]

    def _compute_dual_basis(self, basis) -> dict[int, tuple[Fraction, ...]]:
        b = sorted(basis)
        sub = self.normals.select_columns(b).T
        out = {}
        for k, i in enumerate(b):
            rhs = [Fraction(int(k == m)) for m in range(len(b))]
            out[i] = solve(sub, rhs)
        return out

    @cached_property
    def _vertex_table(self) -> list[tuple[frozenset, tuple[Fraction, ...]]]:
        return [(b, self._vertex(b)) for b in self.matroid.bases()]

    def _vertices(self) -> list[tuple[frozenset, tuple[Fraction, ...]]]:
        return self._vertex_table

    @cached_property
    def _ray_candidates(self) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
        """Lines cut out by independent (d-1)-subsets, with all normal pairings."""
        d = self.d
        out = []
        seen = set()
        for s in combinations(range(self.n), d - 1) if d >= 1 else ():
            if self.matroid.rank(s) != d - 1:
                continue
            c = kernel_basis(self.normals.select_columns(list(s)).T).row(0)
            key = _normalize(c)
            if key in seen:
                continue
            seen.add(key)
            out.append((c, tuple(dot(self.normal(i), c) for i in range(self.n))))
        return out

    def recession_rays(self, alpha: SignVector) -> list[tuple[Fraction, ...]]:
        """Extreme rays of ``{c : alpha_i <a_i, c> >= 0}`` (a pointed cone)."""
        rays = []
        for c, pairings in self._ray_candidates:
            for sgn in (1, -1):
                if all(sgn * a * p >= 0 for a, p in zip(alpha, pairings)):
                    rays.append(tuple(sgn * x for x in c))
        return rays

    def feasible(self, alpha: SignVector) -> bool:
        """Whether ``Delta_alpha`` is nonempty.

        With full-rank normals every nonempty chamber is pointed, so it is
        nonempty exactly when one of the basis vertices lies in it.
        """
        self._check_signs(alpha)
        if self.d == 0:
            return all(s * r >= 0 for s, r in zip(alpha, self.constants))
        return any(self.in_chamber(alpha, v) for _, v in self._vertices())

    def bounded(self, alpha: SignVector) -> bool:
        """Whether the objective is bounded above on ``Delta_alpha``.

        Uses the recession cone test, so it is meaningful for infeasible
        sign vectors as well.
        """
        self._check_signs(alpha)
        return all(dot(self.objective, c) <= 0 for c in self.recession_rays(alpha))

    def _check_signs(self, alpha: SignVector) -> None:
        if len(alpha) != self.n or any(s not in (1, -1) for s in alpha):
            raise ValueError(f"sign vector must have {self.n} entries in {{+1, -1}}")

    # -- fixed points -----------------------------------------------------

    @cached_property
    def _fixed_points(self) -> tuple[FixedPoint, ...]:
        out = []
        for b, v in self._vertices():
            signs = [0] * self.n
            for j in range(self.n):
                if j in b:
                    continue
                s = _sgn(self.slack(j, v))
                if s == 0:
                    raise NonSimple(f"hyperplane {j} passes through the vertex of basis {sorted(b)}")
                signs[j] = s
            for i, u in self._dual_basis(b).items():
                w = _sgn(dot(self.objective, u))
                if w == 0:
                    raise DegenerateObjective(f"objective is constant along an edge at basis {sorted(b)}")
                # the chamber must go downhill along every edge leaving the vertex
                signs[i] = -w
            out.append(FixedPoint(tuple(signs), v, b))
        out.sort(key=lambda p: sorted(p.basis))
        return tuple(out)

    def fixed_points(self) -> list[FixedPoint]:
        """Feasible and bounded sign vectors, one per basis of the matroid."""
        return list(self._fixed_points)

    def fixed_point(self, alpha: SignVector) -> FixedPoint:
        for p in self._fixed_points:
            if p.signs == tuple(alpha):
                return p
        raise KeyError(sign_str(alpha))

    def edge_weights(self, p: FixedPoint) -> dict[int, Fraction]:
        """``<xi, u_i>`` for each ``i`` in the basis of ``p``."""
        return {i: dot(self.objective, u) for i, u in self._dual_basis(p.basis).items()}

    @cached_property
    def closure_order(self) -> FinitePoset:
        """``alpha <= beta`` when the vertex of alpha lies in Delta_beta, transitively closed."""
        pts = self._fixed_points
        rel = [(p.signs, q.signs) for p in pts for q in pts if self.in_chamber(q.signs, p.vertex)]
        return FinitePoset([p.signs for p in pts], rel)

    def leaf_flat(self, alpha: SignVector) -> Flat:
        """Normals orthogonal to the whole recession cone of ``Delta_alpha``."""
        rays = self.recession_rays(tuple(alpha))
        f = frozenset(i for i in range(self.n) if all(dot(self.normal(i), c) == 0 for c in rays))
        if not self.matroid.is_flat(f):
            raise LeafAssignmentFailure(f"{sorted(f)} is not a flat")
        if self.matroid.has_coloop(f):
            raise LeafAssignmentFailure(f"{sorted(f)} has a coloop")
        return f

    # -- derived arrangements ---------------------------------------------

    def _require_flat(self, f) -> frozenset:
        f = frozenset(f)
        if not f <= frozenset(range(self.n)) or not self.matroid.is_flat(f):
            raise NotAFlat(f"{sorted(f)} is not a flat")
        return f

    def localization(self, flat) -> "PolarizedArrangement":
        """Sub-arrangement on ``flat`` in lattice coordinates on the span of its normals.

        The objective is transported by orthogonal projection onto that span.
        """
        f = sorted(self._require_flat(flat))
        if not f:
            return PolarizedArrangement(RatMatrix([], ncols=0), [], [], check=False)
        basis = saturate(self.normals.select_columns(f).T)  # rows: lattice basis of span
        bt = basis.T
        cols = [solve(bt, self.normal(i)) for i in f]
        normals = RatMatrix.from_columns(cols, basis.nrows)
        gram = basis @ bt
        proj = solve(gram, basis.apply(self.objective))
        return PolarizedArrangement(normals, [self.constants[i] for i in f], proj, check=False)

    def restriction(self, flat) -> "PolarizedArrangement":
        """Hyperplanes off ``flat`` restricted to the intersection of those in it.

        Coordinates come from a lattice basis ``K`` of the orthogonal
        complement of the flat's normals; normals become ``K a_j``.  The base
        point solves the equations of a basis of the flat.
        """
        fs = self._require_flat(flat)
        f = sorted(fs)
        rest = [j for j in range(self.n) if j not in fs]
        k = integer_kernel(self.normals.select_columns(f).T) if f else RatMatrix.identity(self.d)
        base = [Fraction(0)] * self.d
        if f:
            fb = next(iter(sorted(sorted(b) for b in _bases_within(self.matroid, f))))
            sub = self.normals.select_columns(fb).T
            base = list(solve(sub, [-self.constants[i] for i in fb]))
        cols = [k.apply(self.normal(j)) for j in rest]
        normals = RatMatrix.from_columns(cols, k.nrows)
        consts = [self.slack(j, base) for j in rest]
        return PolarizedArrangement(normals, consts, k.apply(self.objective), check=False)

    def gale_dual(self) -> "GaleDual":
        return GaleDual.of(self)

    # -- shuffling / twisting --------------------------------------------

    def shuffling_arrangement(self) -> frozenset:
        """Normals (primitive, first nonzero entry positive) of the hyperplanes
        ``span{a_j : j in S}`` over independent ``(d-1)``-subsets ``S``.

        These are exactly the objectives with a positive-dimensional set of
        optimal points on some chamber.
        """
        out = set()
        for s in combinations(range(self.n), self.d - 1) if self.d >= 1 else ():
            if self.matroid.rank(s) != self.d - 1:
                continue
            k = kernel_basis(self.normals.select_columns(list(s)).T)
            out.add(_normalize(k.row(0)))
        return frozenset(out)

    def twisting_arrangement(self) -> frozenset:
        """Normals in constants space ``Q^n``: the shuffling hyperplanes of the
        Gale dual, pulled back along ``r -> -B r``."""
        dual = self.gale_dual().arrangement
        b = dual.normals
        return frozenset(_normalize(b.T.apply(m)) for m in dual.shuffling_arrangement())

    # -- Weyl group shapes ------------------------------------------------

    def parallel_class_sizes(self) -> list[int]:
        """Sizes of the rank-one flats, i.e. multiplicities of normals up to sign."""
        return _parallel_sizes(self.normals)

    def namikawa_weyl(self) -> list[int]:
        """Factor shape of the Namikawa Weyl group (sizes > 1 only)."""
        return sorted(k for k in self.parallel_class_sizes() if k > 1)

    def hamiltonian_weyl(self) -> list[int]:
        """Factor shape of the Hamiltonian Weyl group, read from the Gale complement."""
        if self.d == self.n:
            return []
        return sorted(k for k in _parallel_sizes(gale_complement(self.normals)) if k > 1)


def _bases_within(m: VectorMatroid, f: Sequence[int]):
    r = m.rank(f)
    return [b for b in combinations(f, r) if m.rank(b) == r]


def _normalize(v: Sequence) -> tuple[int, ...]:
    p = primitive_vector(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def _parallel_sizes(m: RatMatrix) -> list[int]:
    counts: dict[tuple, int] = {}
    for c in m.columns():
        if not any(c):
            continue
        key = _normalize(c)
        counts[key] = counts.get(key, 0) + 1
    return sorted(counts.values())


@dataclass(frozen=True)
class GaleDual:
    """A Gale dual arrangement together with the fixed-point bijection."""

    source: PolarizedArrangement
    arrangement: PolarizedArrangement

    @classmethod
    def of(cls, arr: PolarizedArrangement) -> "GaleDual":
        if not arr.is_coloop_free():
            coloops = [e for e in range(arr.n) if arr.matroid.is_coloop(e)]
            raise HasColoop(f"hyperplanes {coloops} are coloops; the dual would have zero normals")
        b = gale_complement(arr.normals)
        w = solve(arr.normals, [-x for x in arr.objective])
        obj = [-x for x in b.apply(arr.constants)]
        return cls(arr, PolarizedArrangement(b, w, obj))

    def dual_point(self, alpha: SignVector) -> SignVector:
        """The fixed point of the dual matching ``alpha``: the same sign word."""
        return tuple(alpha)

    def point_map(self) -> dict[SignVector, SignVector]:
        return {p.signs: self.dual_point(p.signs) for p in self.source.fixed_points()}

    @staticmethod
    def flat_map(n: int, flat) -> Flat:
        return frozenset(range(n)) - frozenset(flat)

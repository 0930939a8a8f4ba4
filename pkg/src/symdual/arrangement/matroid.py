"""Vector matroids, flats and Tutte polynomials."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..exactlin import RatMatrix


class TuttePolynomial:
    """Bivariate integer polynomial stored as ``{(i, j): c}`` for ``c x^i y^j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "TuttePolynomial":
        return cls({(i, j): c})

    def __add__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TuttePolynomial(out)

    def shift(self, di: int, dj: int) -> "TuttePolynomial":
        """Multiply by ``x^di y^dj``."""
        return TuttePolynomial({(i + di, j + dj): c for (i, j), c in self.coeffs.items()})

    def swap(self) -> "TuttePolynomial":
        """``T(y, x)``; this is the Tutte polynomial of the dual matroid."""
        return TuttePolynomial({(j, i): c for (i, j), c in self.coeffs.items()})

    def __call__(self, x, y):
        return sum(c * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in self.coeffs.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def table(self) -> list[list[int]]:
        """Dense coefficient table, ``table[i][j]`` the coefficient of x^i y^j."""
        if not self.coeffs:
            return [[0]]
        mi = max(i for i, _ in self.coeffs)
        mj = max(j for _, j in self.coeffs)
        return [[self.coeffs.get((i, j), 0) for j in range(mj + 1)] for i in range(mi + 1)]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = "*".join(
                p for p in (_power("x", i), _power("y", j)) if p
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    __repr__ = __str__


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class VectorMatroid:
    """The matroid of a finite list of vectors (the columns of a matrix)."""

    def __init__(self, vectors: Sequence[Sequence]):
        self.vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        self.n = len(self.vectors)
        self.dim = len(self.vectors[0]) if self.vectors else 0
        self._rank: dict[frozenset, int] = {}

    @classmethod
    def from_matrix(cls, m: RatMatrix) -> "VectorMatroid":
        vm = cls(m.columns())
        vm.dim = m.nrows
        return vm

    @property
    def ground(self) -> frozenset:
        return frozenset(range(self.n))

    def rank(self, subset: Iterable[int] | None = None) -> int:
        s = self.ground if subset is None else frozenset(subset)
        r = self._rank.get(s)
        if r is None:
            r = _vector_rank([self.vectors[i] for i in sorted(s)])
            self._rank[s] = r
        return r

    def closure(self, subset: Iterable[int]) -> frozenset:
        s = frozenset(subset)
        r = self.rank(s)
        return s | {e for e in range(self.n) if e not in s and self.rank(s | {e}) == r}

    def is_flat(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        return self.closure(s) == s

    def is_loop(self, e: int) -> bool:
        return self.rank([e]) == 0

    def is_coloop(self, e: int) -> bool:
        return self.rank(self.ground - {e}) < self.rank()

    def has_coloop(self, subset: Iterable[int]) -> bool:
        """Whether the restriction to ``subset`` has a coloop."""
        s = frozenset(subset)
        r = self.rank(s)
        return any(self.rank(s - {e}) < r for e in s)

    def flats(self) -> list[frozenset]:
        """All flats, sorted by rank and then lexicographically."""
        bottom = self.closure(())
        seen = {bottom}
        frontier = [bottom]
        while frontier:
            nxt = []
            for f in frontier:
                for e in range(self.n):
                    if e not in f:
                        g = self.closure(f | {e})
                        if g not in seen:
                            seen.add(g)
                            nxt.append(g)
            frontier = nxt
        return sorted(seen, key=lambda f: (self.rank(f), sorted(f)))

    def coloop_free_flats(self) -> list[frozenset]:
        return [f for f in self.flats() if not self.has_coloop(f)]

    def bases(self) -> list[frozenset]:
        r = self.rank()
        return [frozenset(b) for b in combinations(range(self.n), r) if self.rank(b) == r]

    def tutte(self) -> TuttePolynomial:
        """Tutte polynomial by deletion-contraction.

        A minor is described by (elements still present, elements contracted);
        its rank function is ``r(S | C) - r(C)``.
        """
        memo: dict[tuple[frozenset, frozenset], TuttePolynomial] = {}

        def minor_rank(s: frozenset, contracted: frozenset) -> int:
            return self.rank(s | contracted) - self.rank(contracted)

        def go(elems: frozenset, contracted: frozenset) -> TuttePolynomial:
            key = (elems, contracted)
            if key in memo:
                return memo[key]
            if not elems:
                out = TuttePolynomial.monomial(0, 0)
            else:
                e = min(elems)
                rest = elems - {e}
                if minor_rank(frozenset([e]), contracted) == 0:
                    out = go(rest, contracted).shift(0, 1)
                elif minor_rank(rest, contracted) < minor_rank(elems, contracted):
                    out = go(rest, contracted | {e}).shift(1, 0)
                else:
                    out = go(rest, contracted) + go(rest, contracted | {e})
            memo[key] = out
            return out

        return go(self.ground, frozenset())


def _vector_rank(vectors: list[tuple[Fraction, ...]]) -> int:
    if not vectors:
        return 0
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank

"""Partitions and compositions for type A: dominance, Weyl group shapes,
leaf intervals, and two independent counts of skew-Howe multiplicities."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .poset import FinitePoset, reversal_witness
from .report import AuditReport

Partition = tuple[int, ...]

ENUMERATION_CAP = 12


class TypeAError(ValueError):
    pass


class SizeMismatch(TypeAError):
    pass


class NotDominated(TypeAError):
    pass


class TooLarge(TypeAError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing list of positive integers (zeros dropped)."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise TypeAError("parts must be nonnegative")
    p = tuple(x for x in p if x > 0)
    if any(a < b for a, b in zip(p, p[1:])):
        raise TypeAError(f"{p} is not weakly decreasing")
    return p


@dataclass(frozen=True)
class Composition:
    """Finitely supported map Z -> N, stored as ``parts[i]`` at index ``offset + i``."""

    offset: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.parts):
            raise TypeAError("composition parts must be nonnegative")

    @classmethod
    def of(cls, parts: Sequence[int], offset: int = 0) -> "Composition":
        return cls(offset, tuple(int(x) for x in parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def bar(self) -> Partition:
        return tuple(sorted((x for x in self.parts if x), reverse=True))

    def reversed(self) -> "Composition":
        """``i -> mu_{-i}``."""
        last = self.offset + len(self.parts) - 1
        return Composition(-last, tuple(reversed(self.parts)))


def as_partition(x) -> Partition:
    if isinstance(x, Composition):
        return x.bar()
    return tuple(sorted((int(v) for v in x if int(v) > 0), reverse=True))


def transpose(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def partial_sums(lam: Sequence[int], length: int) -> list[int]:
    out, s = [], 0
    for i in range(length):
        s += lam[i] if i < len(lam) else 0
        out.append(s)
    return out


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(mu)}|")
    n = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(partial_sums(lam, n), partial_sums(mu, n)))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    out: list[Partition] = []

    def go(rest: int, cap: int, prefix: tuple):
        if rest == 0:
            out.append(prefix)
            return
        for k in range(min(rest, cap), 0, -1):
            go(rest - k, k, prefix + (k,))

    go(n, n, ())
    return tuple(out)


class WeylShape(tuple):
    """Multiset of symmetric-group factors, each entry k > 1 meaning S_k."""

    def __new__(cls, factors: Iterable[int] = ()):
        return super().__new__(cls, sorted((int(k) for k in factors if k > 1), reverse=True))

    def __str__(self) -> str:
        return "×".join(f"S{k}" for k in self) if self else "trivial"

    def is_submultiset_of(self, other: "WeylShape") -> bool:
        rest = list(other)
        for k in self:
            if k not in rest:
                return False
            rest.remove(k)
        return True


def namikawa_weyl_from_transpose(mu_t: Sequence[int]) -> WeylShape:
    """Factors ``mu_t[j] - mu_t[j+1]`` and the last entry."""
    mt = partition(mu_t)
    diffs = [a - b for a, b in zip(mt, mt[1:] + (0,))]
    return WeylShape(diffs)


def namikawa_weyl(mu) -> WeylShape:
    """Permutations of equal parts of the composition ``mu``."""
    return namikawa_weyl_from_transpose(transpose(as_partition(mu)))


@dataclass(frozen=True)
class Block:
    start: int  # 1-based first index
    stop: int  # 1-based last index
    part: int
    kind: int  # 1: misses J, 2: meets J in its last index only, 3: inside J

    @property
    def size(self) -> int:
        return self.stop - self.start + 1


def ham_weyl(mu_t: Sequence[int], nu: Sequence[int]) -> tuple[WeylShape, list[Block]]:
    """Weyl group of the Hamiltonian symmetry group for Jordan type ``nu``.

    ``J`` collects the indices where the partial sums of ``nu`` and ``mu_t``
    agree.  Each maximal block of equal parts of ``nu`` is classified by how
    it meets ``J``; blocks lying inside ``J`` contribute nothing.
    """
    mt = partition(mu_t)
    nu = partition(nu)
    if sum(mt) != sum(nu):
        raise SizeMismatch(f"|{nu}| != |{mt}|")
    if not dominance_leq(nu, mt):
        raise NotDominated(f"{nu} is not dominated by {mt}")
    ell = max(len(mt), len(nu))
    pn, pm = partial_sums(nu, ell), partial_sums(mt, ell)
    J = {j + 1 for j in range(ell) if pn[j] == pm[j]}
    padded = list(nu) + [0] * (ell - len(nu))
    blocks = []
    j = 1
    while j <= ell:
        k = j
        while k < ell and padded[k] == padded[j - 1]:
            k += 1
        inter = {i for i in range(j, k + 1)} & J
        if not inter:
            kind = 1
        elif inter == set(range(j, k + 1)) and k > j:
            kind = 3
        elif inter == {k}:
            kind = 2
        else:
            # cannot happen when nu is dominated by mu_t
            raise TypeAError(f"unexpected block intersection {sorted(inter)}")
        blocks.append(Block(j, k, padded[j - 1], kind))
        j = k + 1
    shape = WeylShape(b.size for b in blocks if b.kind != 3 and b.part > 0)
    return shape, blocks


@dataclass
class LeafInterval:
    elements: list[Partition]
    poset: FinitePoset


def leaf_interval(nu: Sequence[int], mu_t: Sequence[int]) -> LeafInterval:
    """Partitions between ``nu`` and ``mu_t`` in dominance order."""
    nu, mt = partition(nu), partition(mu_t)
    if sum(nu) != sum(mt):
        raise SizeMismatch(f"|{nu}| != |{mt}|")
    if not dominance_leq(nu, mt):
        raise NotDominated(f"{nu} is not dominated by {mt}")
    elems = [p for p in partitions_of(sum(nu)) if dominance_leq(nu, p) and dominance_leq(p, mt)]
    elems.sort()  # lexicographic order refines dominance
    rel = [(a, b) for a in elems for b in elems if dominance_leq(a, b)]
    return LeafInterval(elems, FinitePoset(elems, rel))


def s3_dual_check(mu, nu) -> AuditReport:
    """Combinatorial checks for the pair (parabolic ``mu``, Jordan type ``nu``)
    against its dual (parabolic ``nu``, Jordan type ``mu``)."""
    mb, nb = as_partition(mu), as_partition(nu)
    if sum(mb) != sum(nb):
        raise SizeMismatch(f"|{mb}| != |{nb}|")
    mt, nt = transpose(mb), transpose(nb)
    if not dominance_leq(nb, mt):
        raise NotDominated(f"{nb} is not dominated by {mt}: the variety is empty")
    r = sum(mb)
    rep = AuditReport(f"S3 pair mu={list(mb)} nu={list(nb)}")
    rep.add("dual datum nonempty", dominance_leq(mb, nt))
    left = leaf_interval(nb, mt)
    right = leaf_interval(mb, nt)
    w = reversal_witness(left.poset, right.poset, lambda p: transpose(p) if p in left.poset else None)
    rep.add(
        "transpose reverses leaf intervals",
        w is None,
        None if w is None else [list(x) for x in w],
        f"{len(left.elements)} leaves",
    )
    ham, _ = ham_weyl(mt, nb)
    ham_dual, _ = ham_weyl(nt, mb)
    rep.info = {
        "leaves": len(left.elements),
        "hamiltonian_weyl": str(ham),
        "dual_hamiltonian_weyl": str(ham_dual),
        "parabolic_namikawa_weyl": str(namikawa_weyl(mb)),
        "dual_parabolic_namikawa_weyl": str(namikawa_weyl(nb)),
    }
    decided = False
    if nb == (1,) * r:
        # the variety is a full cotangent bundle of a partial flag variety
        rep.add("Namikawa Weyl = dual Hamiltonian Weyl", namikawa_weyl(mb) == ham_dual,
                {"namikawa": str(namikawa_weyl(mb)), "dual_hamiltonian": str(ham_dual)})
        decided = True
    if mb == (1,) * r:
        rep.add("dual Namikawa Weyl = Hamiltonian Weyl", namikawa_weyl(nb) == ham,
                {"dual_namikawa": str(namikawa_weyl(nb)), "hamiltonian": str(ham)})
        decided = True
    if not decided:
        rep.info["weyl_exchange"] = "not decided: the Namikawa Weyl group is a quotient of the parabolic one"
    # necessary in every case: each Hamiltonian factor must survive from the dual parabolic group
    rep.add("dual Hamiltonian Weyl factors lie in parabolic Namikawa Weyl",
            ham_dual.is_submultiset_of(namikawa_weyl(mb)),
            {"dual_hamiltonian": str(ham_dual), "parabolic": str(namikawa_weyl(mb))})
    rep.add("Hamiltonian Weyl factors lie in dual parabolic Namikawa Weyl",
            ham.is_submultiset_of(namikawa_weyl(nb)),
            {"hamiltonian": str(ham), "dual_parabolic": str(namikawa_weyl(nb))})
    return rep


# -- skew-Howe multiplicities ----------------------------------------------


def _cap(n: int) -> None:
    if n > ENUMERATION_CAP:
        raise TooLarge(f"enumeration is capped at size {ENUMERATION_CAP}")


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Semistandard tableaux of shape ``lam`` and content ``mu``, by filling
    cells one at a time in row-major order."""
    lam = partition(lam)
    content = [int(x) for x in mu]
    if any(x < 0 for x in content):
        raise TypeAError("content must be nonnegative")
    if sum(lam) != sum(content):
        raise SizeMismatch(f"|{lam}| != |{tuple(content)}|")
    _cap(sum(lam))
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: dict[tuple[int, int], int] = {}
    left = content[:]

    def go(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, len(left)):
            if left[v]:
                left[v] -= 1
                filling[(i, j)] = v
                total += go(k + 1)
                left[v] += 1
        filling.pop((i, j), None)
        return total

    return go(0)


def _vertical_strips(lam: Partition, size: int):
    """Partitions obtained from ``lam`` by adding ``size`` boxes, no two in a row."""
    rows = len(lam) + size
    base = list(lam) + [0] * size

    def go(i: int, left: int, cur: list):
        if i == rows:
            if left == 0:
                yield partition(cur)
            return
        for add in (0, 1) if left else (0,):
            v = base[i] + add
            if i > 0 and v > cur[i - 1]:
                continue
            yield from go(i + 1, left - add, cur + [v])

    yield from go(0, size, [])


def pieri_multiplicity(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Chains from the empty partition to ``lam`` adding vertical strips of sizes ``mu``."""
    lam = partition(lam)
    steps = [int(x) for x in mu]
    if sum(lam) != sum(steps):
        raise SizeMismatch(f"|{lam}| != |{tuple(steps)}|")
    _cap(sum(lam))

    @lru_cache(maxsize=None)
    def count(cur: Partition, k: int) -> int:
        if k == len(steps):
            return int(cur == lam)
        total = 0
        for nxt in _vertical_strips(cur, steps[k]):
            if len(nxt) <= len(lam) and all(a <= b for a, b in zip(nxt, lam)):
                total += count(nxt, k + 1)
        return total

    return count((), 0)


def s3_fixture_pairs(max_r: int = 8) -> list[tuple[Partition, Partition]]:
    """All (mu, nu) partitions of r <= max_r with a nonempty variety."""
    out = []
    for r in range(1, max_r + 1):
        for mb in partitions_of(r):
            mt = transpose(mb)
            for nb in partitions_of(r):
                if dominance_leq(nb, mt):
                    out.append((mb, nb))
    return out

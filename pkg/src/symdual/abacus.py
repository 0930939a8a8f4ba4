"""Charged multipartitions on an abacus and the rank-level rectangle flip.

Runner ``k`` of charge ``s_k`` carrying the partition ``xi`` has beads at
``xi_j + s_k - j + 1`` for ``j >= 1`` (trailing parts zero).  A runner is
stored as its charge plus the finite sets of beads above the vacuum
``{m <= s_k}`` and of gaps inside it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .typea import Partition, partition


class AbacusError(ValueError):
    pass


class LengthMismatch(AbacusError):
    pass


class MalformedAbacus(AbacusError):
    pass


Multipartition = tuple[Partition, ...]


@dataclass(frozen=True)
class Runner:
    charge: int
    above: frozenset  # beads > charge
    gaps: frozenset  # non-beads <= charge

    def __post_init__(self):
        if any(b <= self.charge for b in self.above) or any(g > self.charge for g in self.gaps):
            raise MalformedAbacus("beads above / gaps below are on the wrong side of the charge")
        if len(self.above) != len(self.gaps):
            raise MalformedAbacus("bead count does not match the charge")

    def has_bead(self, m: int) -> bool:
        return m in self.above if m > self.charge else m not in self.gaps

    def floor(self) -> int:
        """A position at or below which every position holds a bead."""
        return min(self.gaps, default=self.charge + 1) - 1

    def top(self) -> int:
        return max(self.above, default=self.charge)

    @classmethod
    def from_window(cls, beads: Iterable[int], floor: int) -> "Runner":
        """Runner whose beads are ``beads`` together with every position ``<= floor``.

        The charge is read off as the unique ``t`` where the number of beads
        above ``t`` equals the number of gaps at or below it.
        """
        window = {b for b in beads if b > floor}
        top = max(window, default=floor)
        t = floor
        # moving t up by one changes (#above - #gaps) by -1, so the root is unique
        while True:
            above = sum(1 for b in window if b > t)
            gaps = sum(1 for m in range(floor + 1, t + 1) if m not in window)
            if above == gaps:
                break
            if above < gaps or t > top + len(window) + 1:
                raise MalformedAbacus("no balancing charge")
            t += 1
        return cls(
            t,
            frozenset(b for b in window if b > t),
            frozenset(m for m in range(floor + 1, t + 1) if m not in window),
        )


@dataclass(frozen=True)
class AbacusState:
    e: int
    runners: tuple[Runner, ...]

    @property
    def ell(self) -> int:
        return len(self.runners)

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(r.charge for r in self.runners)


def _runner(xi: Partition, s: int) -> Runner:
    beads = {x + s - j for j, x in enumerate(xi)}  # j is 0-based here
    floor = s - len(xi)
    return Runner.from_window(beads, floor)


def to_abacus(xi: Sequence[Sequence[int]], s: Sequence[int], e: int) -> AbacusState:
    if len(xi) != len(s):
        raise LengthMismatch(f"{len(xi)} partitions but {len(s)} charges")
    if e < 1:
        raise AbacusError("e must be positive")
    return AbacusState(e, tuple(_runner(partition(x), int(c)) for x, c in zip(xi, s)))


def runner_partition(r: Runner) -> Partition:
    lo = r.floor()
    beads = sorted((m for m in range(lo + 1, r.top() + 1) if r.has_bead(m)), reverse=True)
    depth = len(beads)
    parts = [b - r.charge + j for j, b in enumerate(beads)]  # b_j = part_j + t - j + 1, j 1-based
    tail = lo - (r.charge - depth)  # remaining beads sit exactly at the vacuum
    if tail != 0:
        raise MalformedAbacus("inconsistent tail")
    return partition(parts)


def from_abacus(a: AbacusState) -> tuple[Multipartition, tuple[int, ...]]:
    return tuple(runner_partition(r) for r in a.runners), a.charges


def flip_state(a: AbacusState) -> AbacusState:
    """Cut into ``e x ell`` rectangles and transpose each one.

    With ``c = position - 1``, a bead on runner ``k`` (1-based) at
    ``c = m*e + j`` (``0 <= j < e``) moves to runner ``j + 1`` at
    ``c = m*ell + k - 1``.
    """
    e, ell = a.e, a.ell
    low_c = min(r.floor() for r in a.runners) - 1  # c-value with everything below filled
    m0 = low_c // e  # rectangles strictly below m0 are full on every runner
    high_c = max(r.top() for r in a.runners) - 1
    m1 = high_c // e
    new_beads: list[set[int]] = [set() for _ in range(e)]
    for k, r in enumerate(a.runners):
        for m in range(m0, m1 + 1):
            for j in range(e):
                c = m * e + j
                if r.has_bead(c + 1):
                    new_beads[j].add(m * ell + k + 1)
    floor = m0 * ell  # positions <= floor have c < m0*ell: all full
    return AbacusState(ell, tuple(Runner.from_window(b, floor) for b in new_beads))


@dataclass(frozen=True)
class FlipResult:
    e: int
    ell: int
    charges: tuple[int, ...]
    components: Multipartition


def uglov_flip(xi: Sequence[Sequence[int]], s: Sequence[int], e: int) -> FlipResult:
    """Rank-level dual of ``(xi, s)`` with modulus ``e``: ``ell`` becomes the modulus."""
    a = to_abacus(xi, s, e)
    b = flip_state(a)
    comps, t = from_abacus(b)
    return FlipResult(b.e, b.ell, t, comps)


def box_count(xi: Sequence[Sequence[int]]) -> int:
    return sum(sum(p) for p in xi)


def bead_box_count(a: AbacusState) -> int:
    """Total size recomputed from bead positions alone."""
    total = 0
    for r in a.runners:
        beads = sorted((m for m in range(r.floor() + 1, r.top() + 1) if r.has_bead(m)), reverse=True)
        total += sum(b - (r.charge - j) for j, b in enumerate(beads))
    return total


def residue_content(xi: Sequence[Sequence[int]], s: Sequence[int], e: int) -> tuple[int, ...]:
    """Number of boxes of each residue ``s_k + col - row (mod e)``."""
    counts = [0] * e
    for part, c in zip(xi, s):
        for row, length in enumerate(part):
            for col in range(length):
                counts[(c + col - row) % e] += 1
    return tuple(counts)


def charge_residues(s: Sequence[int], e: int) -> tuple[int, ...]:
    """How many charges fall in each class mod ``e``."""
    counts = [0] * e
    for c in s:
        counts[c % e] += 1
    return tuple(counts)

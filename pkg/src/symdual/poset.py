"""Small finite posets given by an explicit relation."""
from __future__ import annotations

from typing import Callable, Hashable, Iterable


class FinitePoset:
    """A finite poset stored as its full (reflexive, transitive) relation."""

    def __init__(self, elements: Iterable[Hashable], relation: Iterable[tuple]):
        self.elements = list(elements)
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        n = len(self.elements)
        reach = [[i == j for j in range(n)] for i in range(n)]
        for a, b in relation:
            reach[index[a]][index[b]] = True
        # Warshall
        for k in range(n):
            rk = reach[k]
            for i in range(n):
                if reach[i][k]:
                    ri = reach[i]
                    for j in range(n):
                        if rk[j]:
                            ri[j] = True
        self._index = index
        self._reach = reach

    def leq(self, a, b) -> bool:
        return self._reach[self._index[a]][self._index[b]]

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def pairs(self) -> list[tuple]:
        """All strict relations a < b."""
        return [(a, b) for a in self.elements for b in self.elements if self.lt(a, b)]

    def is_antisymmetric(self) -> bool:
        return not any(self.leq(b, a) for a, b in self.pairs())

    def covers(self) -> list[tuple]:
        """Cover relations a ⋖ b."""
        out = []
        for a, b in self.pairs():
            if not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                out.append((a, b))
        return out

    def minimal(self) -> list:
        return [b for b in self.elements if not any(self.lt(a, b) for a in self.elements)]

    def linear_extension(self) -> list:
        """Elements sorted so that a < b implies a comes first."""
        return sorted(self.elements, key=lambda e: (sum(self.leq(a, e) for a in self.elements), self._index[e]))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e) -> bool:
        return e in self._index


def reversal_witness(p: FinitePoset, q: FinitePoset, f: Callable) -> tuple | None:
    """Check that ``f`` is an order-reversing bijection p -> q.

    Returns None on success, otherwise a pair (a, b) of elements of ``p``
    (or a single-element tuple if ``f`` is not a bijection) witnessing the failure.
    """
    image = [f(a) for a in p.elements]
    if len(set(image)) != len(image) or set(image) != set(q.elements):
        bad = next((a for a in p.elements if f(a) not in q), p.elements[0] if p.elements else None)
        return (bad,)
    for a in p.elements:
        for b in p.elements:
            if p.leq(a, b) != q.leq(f(b), f(a)):
                return (a, b)
    return None

"""Seeded random unimodular polarized arrangements.

Normals are reduced incidence matrices of random connected, bridgeless
directed multigraphs (totally unimodular, no loops, no coloops), optionally
twisted by a random element of GL_d(Z).  Constants and objective are drawn
until they are generic.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .arrangement.polarized import GenericityError, PolarizedArrangement
from .exactlin import RatMatrix


def _connected_bridgeless(rng: random.Random, vertices: int, edges: int) -> list[tuple[int, int]] | None:
    # a spanning cycle (or a doubled edge for two vertices) is bridgeless; add random chords
    order = list(range(vertices))
    rng.shuffle(order)
    if vertices == 2:
        es = [(order[0], order[1]), (order[1], order[0])]
    else:
        es = [(order[i], order[(i + 1) % vertices]) for i in range(vertices)]
    if len(es) > edges:
        return None
    while len(es) < edges:
        a, b = rng.sample(range(vertices), 2)
        es.append((a, b))
    rng.shuffle(es)
    return [(a, b) if rng.random() < 0.5 else (b, a) for a, b in es]


def _unimodular(rng: random.Random, d: int, steps: int) -> list[list[int]]:
    u = [[int(i == j) for j in range(d)] for i in range(d)]
    if d < 2:
        return u
    for _ in range(steps):
        i, j = rng.sample(range(d), 2)
        f = rng.choice((-1, 1))
        u[i] = [x + f * y for x, y in zip(u[i], u[j])]
    return u


def random_normals(rng: random.Random, d: int, n: int, twist: bool = True) -> RatMatrix:
    """A ``d x n`` unimodular integer matrix without zero columns or coloops."""
    if d < 1 or n < d + 1:
        raise ValueError("need 1 <= d < n")
    while True:
        es = _connected_bridgeless(rng, d + 1, n)
        if es is not None:
            break
    rows = [[0] * n for _ in range(d + 1)]
    for k, (a, b) in enumerate(es):
        rows[a][k] += 1
        rows[b][k] -= 1
    m = RatMatrix(rows[:d], ncols=n)
    if twist:
        m = RatMatrix(_unimodular(rng, d, rng.randint(0, 2 * d)), ncols=d) @ m
    return m


def _rational(rng: random.Random, span: int) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice((1, 1, 2, 3)))


def random_arrangement(rng: random.Random, d: int, n: int, twist: bool = True, tries: int = 200) -> PolarizedArrangement:
    normals = random_normals(rng, d, n, twist)
    for _ in range(tries):
        constants = [_rational(rng, 2 * n) for _ in range(n)]
        objective = [_rational(rng, 9) for _ in range(d)]
        try:
            return PolarizedArrangement(normals, constants, objective)
        except GenericityError:
            continue
    raise RuntimeError("could not find generic parameters")


def fixture_set(seed: int = 2024, count: int = 60, max_n: int = 8, max_d: int = 4) -> list[PolarizedArrangement]:
    """Deterministic list of generic arrangements with ``d < n <= max_n``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        n = rng.randint(d + 1, max_n)
        out.append(random_arrangement(rng, d, n, twist=rng.random() < 0.7))
    return out

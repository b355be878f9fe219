"""Seeded random instances shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from oddcut import INF, Graph, Instance


def rand_weight(rng: random.Random, zero_prob: float = 0.1, max_den: int = 10) -> Fraction:
    if rng.random() < zero_prob:
        return Fraction(0)
    return Fraction(rng.randint(0, 3 * max_den), rng.randint(1, max_den))


def rand_graph(rng: random.Random, n_max: int = 8, m_max: int = 12, n_min: int = 2) -> Graph:
    """Random multigraph; parallel edges are allowed, self-loops never drawn."""
    n = rng.randint(n_min, n_max)
    m = rng.randint(0, m_max) if n > 1 else 0
    edges = []
    for _ in range(m):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    return Graph(range(n), edges)


def rand_even_set(rng: random.Random, vertices, allow_empty: bool = False) -> frozenset:
    vs = list(vertices)
    while True:
        k = rng.randrange(0 if allow_empty else 2, len(vs) + 1, 2) if len(vs) >= 2 else 0
        T = frozenset(rng.sample(vs, k))
        if T or allow_empty:
            return T


def rand_blossom_weights(rng: random.Random, G: Graph, inf_prob: float = 0.2):
    """``(c, c')`` pair with zero entries, duplicated values and some infinite ``c'``."""
    pool = [rand_weight(rng) for _ in range(3)]  # shared values force ties
    c, cp = [], []
    for _ in range(G.m):
        a = rng.choice(pool) if rng.random() < 0.3 else rand_weight(rng)
        b = INF if rng.random() < inf_prob else (rng.choice(pool) if rng.random() < 0.3 else rand_weight(rng))
        c.append(a)
        cp.append(b)
    return c, cp


def rand_instance(rng: random.Random, mode: str = "capacitated", n_max: int = 6, m_max: int = 10,
                  b_max: int = 3, u_max: int = 3) -> Instance:
    G = rand_graph(rng, n_max=n_max, m_max=m_max, n_min=1 if n_max >= 1 else 0)
    b = {v: rng.randint(1, b_max) for v in G.vertices}
    u = None if mode == "uncapacitated" else tuple(rng.randint(1, u_max) for _ in range(G.m))
    return Instance(G, b, u, mode)


def _repair_degrees(inst: Instance, x: list[Fraction]) -> list[Fraction]:
    G = inst.graph
    for v in G.vertices:
        deg = sum((x[k] for k in G.incident(v)), Fraction(0))
        if deg > inst.b[v]:
            ratio = Fraction(inst.b[v]) / deg
            for k in G.incident(v):
                x[k] *= ratio
    return x


def rand_point(rng: random.Random, inst: Instance) -> list[Fraction]:
    """A point satisfying all degree constraints and bounds (not in perfect mode).

    Half the time the point is built on half-integers, which is where blossom
    violations concentrate; otherwise small-denominator rationals.
    """
    G = inst.graph
    x = []
    for k in range(G.m):
        cap = inst.u[k] if inst.capacitated else max(inst.b[G.edges[k][0]], inst.b[G.edges[k][1]])
        if rng.random() < 0.5:
            x.append(Fraction(rng.randint(0, 2 * cap), 2))
        else:
            den = rng.randint(1, 10)
            x.append(Fraction(rng.randint(0, cap * den), den))
    return _repair_degrees(inst, x)


def lp_vertex_point(rng: random.Random, inst: Instance):
    """A vertex of the fractional polytope (degree constraints plus bounds) under a random objective.

    In perfect mode the degree constraints are equalities.  Returns ``None``
    when the LP is infeasible or the solver output does not round to an
    exactly feasible rational point.
    """
    import numpy as np
    from scipy.optimize import linprog

    G = inst.graph
    if G.m == 0:
        return None if inst.mode == "perfect" and G.n else []
    A = np.zeros((G.n, G.m))
    for k, (a, b) in enumerate(G.edges):
        A[G.index(a), k] = 1
        A[G.index(b), k] = 1
    rhs = np.array([inst.b[v] for v in G.vertices], dtype=float)
    obj = -np.array([rng.random() for _ in range(G.m)])
    bounds = [(0, inst.u[k]) for k in range(G.m)]
    if inst.mode == "perfect":
        res = linprog(obj, A_eq=A, b_eq=rhs, bounds=bounds, method="highs-ds")
    else:
        res = linprog(obj, A_ub=A, b_ub=rhs, bounds=bounds, method="highs-ds")
    if res.status != 0:
        return None
    x = [Fraction(float(v)).limit_denominator(12) for v in res.x]
    from oddcut import check_degree_and_bounds

    if check_degree_and_bounds(inst, x):
        return None
    return x

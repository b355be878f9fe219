"""Brute-force references for small instances.

Every function here enumerates its definition directly and shares no code
with the max-flow, cut-tree, odd-cut or separation routines: only the
``Graph`` container and weight normalization are reused.  Size guards raise
:class:`TooLarge` rather than silently truncating.

Weights are rescaled to integers by their common denominator before
enumerating, which keeps the arithmetic exact and the inner loops cheap.
Subsets are walked in bitmask order over the vertex (or edge) order, and
only a strictly better value replaces the incumbent.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

from .core import INF, Graph, Vertex, weights


class TooLarge(ValueError):
    pass


def _guard(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise TooLarge(f"{what} = {size} exceeds the enumeration limit {limit}")


def _to_int(*vectors):
    """Common scale ``L`` and each vector multiplied by ``L`` (``INF`` kept as is)."""
    L = 1
    for vec in vectors:
        for w in vec:
            if w != INF:
                L = math.lcm(L, Fraction(w).denominator)
    scaled = [[w if w == INF else int(w * L) for w in vec] for vec in vectors]
    return L, scaled


def _unscale(value, L):
    return value if value == INF else Fraction(value, L)


def _subsets(items: tuple):
    for mask in range(1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def _crossing(G: Graph, U: frozenset) -> list[int]:
    return [k for k, (a, b) in enumerate(G.edges) if (a in U) != (b in U)]


def _all_choices(pairs: list[tuple]):
    """``(total, mask)`` for each of the ``2^len(pairs)`` subsets.

    Members of the subset contribute ``pair[1]``, the others ``pair[0]``;
    bit ``i`` of ``mask`` marks membership of ``pairs[i]``.
    """
    out = [(0, 0)]
    for i, (w_out, w_in) in enumerate(pairs):
        bit = 1 << i
        out = [(s + w_out, m) for s, m in out] + [(s + w_in, m | bit) for s, m in out]
    return out


def bf_min_st_cut(G: Graph, c, s: Vertex, t: Vertex):
    """``(value, U)`` minimizing the cut weight over all ``U`` with ``s`` in and ``t`` out."""
    _guard("|V|", G.n, 20)
    c = weights(G, c)
    G.index(s), G.index(t)
    if s == t:
        raise ValueError("s and t must differ")
    L, (ci,) = _to_int(c)
    others = tuple(v for v in G.vertices if v not in (s, t))
    best = None
    for rest in _subsets(others):
        U = rest | {s}
        val = sum(ci[k] for k in _crossing(G, U))
        if best is None or val < best[0]:
            best = (val, U)
    return _unscale(best[0], L), best[1]


def bf_min_t_cut(G: Graph, c, T: Iterable[Vertex]):
    """``(value, U)`` minimizing the cut weight over all T-odd ``U``."""
    _guard("|V|", G.n, 16)
    c = weights(G, c)
    T = G.vertex_set(T)
    if not T or len(T) % 2:
        raise ValueError("T must be nonempty with even size")
    L, (ci,) = _to_int(c)
    best = None
    for U in _subsets(G.vertices):
        if len(T & U) % 2:
            val = sum(ci[k] for k in _crossing(G, U))
            if best is None or val < best[0]:
                best = (val, U)
    return _unscale(best[0], L), best[1]


def _min_teeth(cut, ci, cpi, parity):
    best = (INF, None)
    for total, mask in _all_choices([(ci[e], cpi[e]) for e in cut]):
        if (parity + bin(mask).count("1")) % 2 and total < best[0]:
            best = (total, mask)
    if best[1] is None:
        return INF, None
    return best[0], frozenset(e for i, e in enumerate(cut) if best[1] >> i & 1)


def bf_beta_min(G: Graph, c, c_prime, T: Iterable[Vertex], U: Iterable[Vertex]):
    """Minimum of beta(U, F) over every parity-feasible ``F``; ``INF`` if there is none."""
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    T, U = G.vertex_set(T), G.vertex_set(U)
    cut = _crossing(G, U)
    _guard("|delta(U)|", len(cut), 14)
    L, (ci, cpi) = _to_int(c, c_prime)
    value, _ = _min_teeth(cut, ci, cpi, len(T & U) % 2)
    return _unscale(value, L)


def bf_min_blossom(G: Graph, c, c_prime, T: Iterable[Vertex]):
    """``(beta, U, F)`` minimizing beta over all blossoms; ``(INF, None, None)`` if none is finite."""
    _guard("|V|", G.n, 8)
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    T = G.vertex_set(T)
    L, (ci, cpi) = _to_int(c, c_prime)
    best = (INF, None, None)
    for U in _subsets(G.vertices):
        cut = _crossing(G, U)
        _guard("|delta(U)|", len(cut), 14)
        value, F = _min_teeth(cut, ci, cpi, len(T & U) % 2)
        if value < best[0]:
            best = (value, U, F)
    return _unscale(best[0], L), best[1], best[2]


def bf_most_violated_blossom(inst, x):
    """``(violation, W, F)`` maximizing ``lhs - rhs`` of the blossom inequalities, or ``None``.

    For capacitated and perfect instances every handle ``W`` and teeth
    ``F`` with ``b(W) + u(F)`` odd is enumerated; for uncapacitated
    instances only ``F = {}`` with ``b(W)`` odd.
    """
    G = inst.graph
    _guard("|V|", G.n, 6)
    _guard("|E|", G.m, 10)
    if isinstance(x, dict):
        x = [x.get(k, 0) for k in range(G.m)]
    x = [Fraction(v) for v in x]
    L, (xi,) = _to_int(x)
    best = None
    for W in _subsets(G.vertices):
        bW = sum(inst.b[i] for i in W)
        inside = sum(xi[k] for k, (a, b) in enumerate(G.edges) if a in W and b in W)
        cut = _crossing(G, W)
        if inst.mode == "uncapacitated":
            choices = [((0, 0), 0)]
        else:
            # Track x(F) and u(F) together: pack them as a pair per subset.
            xs = _all_choices([(0, xi[e]) for e in cut])
            us = _all_choices([(0, inst.u[e]) for e in cut])
            choices = [((xf, uf), m) for (xf, m), (uf, _) in zip(xs, us)]
        for (xF, uF), mask in choices:
            total = bW + uF
            if total % 2 == 0:
                continue
            viol = inside + xF - L * (total // 2)
            if best is None or viol > best[0]:
                best = (viol, W, mask, cut)
    if best is None or best[0] <= 0:
        return None
    viol, W, mask, cut = best
    return Fraction(viol, L), W, frozenset(e for i, e in enumerate(cut) if mask >> i & 1)

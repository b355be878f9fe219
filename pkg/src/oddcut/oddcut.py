"""Minimum T-cuts and minimum blossoms.

A set ``U`` is *T-odd* when ``|T & U|`` is odd.  A *blossom* is a pair
``(U, F)`` with ``F`` a subset of delta(U) and ``|T & U| + |F|`` odd; its value
is the ``c``-weight of delta(U) minus F plus the ``c'``-weight of F.  Both
minimization problems are solved by scanning the cuts induced by the edges
of one Gomory-Hu tree.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .core import INF, ExtWeight, Graph, Vertex, delta, weights
from .cuttree import CutTree, gomory_hu


@dataclass(frozen=True)
class Blossom:
    U: frozenset
    F: frozenset
    beta: ExtWeight


def _even_terminal_set(G: Graph, T: Iterable[Vertex], allow_empty: bool) -> frozenset:
    T = G.vertex_set(T)
    if len(T) % 2:
        raise ValueError(f"|T| = {len(T)} is odd")
    if not T and not allow_empty:
        raise ValueError("T must be nonempty")
    return T


def t_odd_tree_edges(T: Iterable[Vertex], tree: CutTree) -> list[tuple]:
    """Tree edges whose two induced vertex sets both meet ``T`` an odd number of times.

    For even ``T`` these edges form a T'-join of the tree, where T' marks the
    terminals whose ``pi``-preimage meets ``T`` oddly.
    """
    T = frozenset(T)
    total = len(T)
    out = []
    for x, y, w in tree.edges:
        k = len(T & tree.induced_cut(x, y))
        if k % 2 and (total - k) % 2:
            out.append((x, y, w))
    return out


def minimum_t_cut(G: Graph, c, T: Iterable[Vertex]) -> tuple[frozenset, ExtWeight]:
    """A minimum-weight T-odd vertex set and its cut weight.

    Builds one cut-tree with terminal set ``T`` and returns the lightest cut
    induced by a T-odd tree edge (the first one in construction order on
    ties).
    """
    c = weights(G, c)
    T = _even_terminal_set(G, T, allow_empty=False)
    tree = gomory_hu(G, c, T)
    best = None
    for x, y, w in tree.edges:
        U = tree.induced_cut(x, y)
        if len(T & U) % 2 and (best is None or w < best[1]):
            best = (U, w)
    return best


def beta_min_F(G: Graph, c, c_prime, T: Iterable[Vertex], U: Iterable[Vertex]):
    """Cheapest parity-feasible ``F`` for a fixed ``U``.

    Start from the edges of delta(U) where ``c'`` is strictly cheaper than
    ``c``; if the parity is wrong, toggle the edge of delta(U) with the
    smallest ``|c - c'|`` (lowest index on ties).  Returns ``(F, beta)``;
    ``beta`` is ``INF`` when no finite blossom has this ``U`` (in particular
    ``(frozenset(), INF)`` if delta(U) is empty and ``|T & U|`` is even).
    """
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    U = G.vertex_set(U)
    T = G.vertex_set(T)
    cut = sorted(delta(G, U))
    return _beta_min_F(cut, c, c_prime, len(T & U) % 2)


def _beta_min_F(cut: list[int], c, c_prime, parity: int):
    F = set()
    beta: ExtWeight = Fraction(0)
    flip, flip_cost = None, INF
    for e in cut:
        if c_prime[e] < c[e]:
            F.add(e)
            beta += c_prime[e]
        else:
            beta += c[e]
        gap = abs(c[e] - c_prime[e]) if INF not in (c[e], c_prime[e]) else INF
        if flip is None or gap < flip_cost:
            flip, flip_cost = e, gap
    if (parity + len(F)) % 2 == 0:
        if flip is None:
            return frozenset(), INF
        F ^= {flip}
        beta += flip_cost
    return frozenset(F), beta


def minimize_blossom(G: Graph, c, c_prime, T: Iterable[Vertex]) -> Blossom | None:
    """A blossom of minimum value, or ``None`` if every blossom has infinite value.

    One cut-tree is built on all vertices with weights ``min(c, c')``; each
    of its ``n - 1`` induced cuts is scored with :func:`beta_min_F` and the
    best is kept (first in construction order on ties).
    """
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    for e, (a, b) in enumerate(zip(c, c_prime)):
        if a == INF and b == INF:
            raise ValueError(f"edge {e} has c = c' = inf")
    T = _even_terminal_set(G, T, allow_empty=True)
    w = [min(a, b) for a, b in zip(c, c_prime)]
    tree = gomory_hu(G, w)
    best: Blossom | None = None
    for x, y, _ in tree.edges:
        U = tree.induced_cut(x, y)
        F, beta = _beta_min_F(sorted(delta(G, U)), c, c_prime, len(T & U) % 2)
        if beta != INF and (best is None or beta < best.beta):
            best = Blossom(U, F, beta)
    return best


def blossom_value(G: Graph, c, c_prime, U: Iterable[Vertex], F: Iterable[int]) -> ExtWeight:
    """beta(U, F) for an explicit pair; ``F`` must lie in delta(U)."""
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    cut = delta(G, U)
    F = frozenset(F)
    if not F <= cut:
        raise ValueError("F is not contained in delta(U)")
    return sum((c_prime[e] if e in F else c[e] for e in cut), Fraction(0))


def t_prime(c, c_prime, T: Iterable[Vertex], G: Graph) -> frozenset:
    """``T`` toggled at both endpoints of every edge with ``c' < c``.

    A set ``U`` is T'-odd exactly when the tentative ``F`` of
    :func:`beta_min_F` already has the right parity.
    """
    c = weights(G, c)
    c_prime = weights(G, c_prime)
    out = set(G.vertex_set(T))
    for e, (a, b) in enumerate(G.edges):
        if c_prime[e] < c[e]:
            out ^= {a, b}
    return frozenset(out)

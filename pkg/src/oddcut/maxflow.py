"""Minimum (s,t)-cuts by highest-label push-relabel with the gap heuristic.

All arithmetic is exact.  Infinite capacities are replaced by a finite
surrogate larger than the sum of all finite capacities, so an infinite edge
is never saturated unless every (s,t)-cut is infinite, in which case the cut
value is reported as ``INF``.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from .core import INF, ExtWeight, Graph, Vertex, weights

_counter: contextvars.ContextVar = contextvars.ContextVar("maxflow_counter", default=None)


class FlowCounter:
    """Number of max-flow computations run inside a :func:`count_maxflows` block."""

    def __init__(self):
        self.calls = 0

    def __repr__(self):
        return f"FlowCounter(calls={self.calls})"


@contextmanager
def count_maxflows():
    """Count every max-flow solved in this context (nested blocks each see all calls)."""
    counter = FlowCounter()
    parent = _counter.get()
    token = _counter.set((counter, parent))
    try:
        yield counter
    finally:
        _counter.reset(token)


def _record_call() -> None:
    link = _counter.get()
    while link is not None:
        counter, link = link
        counter.calls += 1


@dataclass(frozen=True)
class MinCutResult:
    value: ExtWeight
    source_side: frozenset
    flow: dict  # edge index -> signed flow from edges[k][0] to edges[k][1]


def max_flow(n: int, ends: list[tuple[int, int]], caps: list[Fraction], s: int, t: int):
    """Maximum flow between vertex indices ``s`` and ``t`` of an undirected network.

    ``ends[k]`` are the endpoint indices of edge ``k`` and ``caps[k]`` its
    finite capacity.  Returns ``(value, source_side, flow)`` where
    ``source_side`` is the set of indices reachable from ``s`` in the final
    residual network and ``flow[k]`` is the signed flow along ``ends[k]``.
    """
    _record_call()
    if s == t:
        raise ValueError("source and sink coincide")

    # Arc 2k runs ends[k][0] -> ends[k][1], arc 2k+1 the reverse.  An undirected
    # edge has capacity c both ways, so both residuals start at c.
    head = []
    res = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for k, (a, b) in enumerate(ends):
        head += [b, a]
        res += [caps[k], caps[k]]
        adj[a].append(2 * k)
        adj[b].append(2 * k + 1)

    label = [0] * n
    label[s] = n
    excess = [Fraction(0)] * n
    max_label = 2 * n + 1
    count = [0] * (max_label + 1)
    count[0] = n - 1
    count[n] += 1
    buckets: list[list[int]] = [[] for _ in range(max_label + 1)]
    current = [0] * n
    highest = 0

    def activate(v: int) -> None:
        nonlocal highest
        if v != s and v != t:
            buckets[label[v]].append(v)
            highest = max(highest, label[v])

    for a in adj[s]:
        delta = res[a]
        if delta > 0:
            v = head[a]
            res[a] -= delta
            res[a ^ 1] += delta
            was_idle = excess[v] == 0
            excess[v] += delta
            excess[s] -= delta
            if was_idle:
                activate(v)

    def relabel(u: int) -> None:
        old = label[u]
        new = min(label[head[a]] for a in adj[u] if res[a] > 0) + 1
        count[old] -= 1
        label[u] = new
        count[new] += 1
        current[u] = 0
        if old < n and count[old] == 0:
            # Gap: nothing at or above `old` below n can still reach t.
            for v in range(n):
                if v != s and old < label[v] < n:
                    count[label[v]] -= 1
                    label[v] = n + 1
                    count[n + 1] += 1
                    current[v] = 0
                    if excess[v] > 0 and v != u:
                        activate(v)

    while True:
        while highest >= 0 and not buckets[highest]:
            highest -= 1
        if highest < 0:
            break
        u = buckets[highest].pop()
        if label[u] != highest or excess[u] == 0:
            continue
        # Discharge u until it is inactive or has been relabeled once.
        while excess[u] > 0:
            if current[u] == len(adj[u]):
                relabel(u)
                activate(u)
                break
            a = adj[u][current[u]]
            v = head[a]
            if res[a] > 0 and label[u] == label[v] + 1:
                delta = min(excess[u], res[a])
                res[a] -= delta
                res[a ^ 1] += delta
                excess[u] -= delta
                was_idle = excess[v] == 0
                excess[v] += delta
                if was_idle:
                    activate(v)
            else:
                current[u] += 1

    seen = [False] * n
    seen[s] = True
    stack = [s]
    while stack:
        u = stack.pop()
        for a in adj[u]:
            v = head[a]
            if res[a] > 0 and not seen[v]:
                seen[v] = True
                stack.append(v)
    flow = {k: (res[2 * k + 1] - res[2 * k]) / 2 for k in range(len(ends))}
    return excess[t], frozenset(i for i in range(n) if seen[i]), flow


def finite_surrogate(caps) -> Fraction:
    """A capacity strictly larger than any cut made of finite edges."""
    return sum((w for w in caps if w != INF), Fraction(0)) + 1


def min_st_cut(G: Graph, c, s: Vertex, t: Vertex) -> MinCutResult:
    """Minimum-weight cut of ``G`` separating ``s`` from ``t``.

    ``source_side`` is the smallest minimum cut side containing ``s``
    (everything reachable from ``s`` in the residual network); for a graph in
    which ``t`` is unreachable it is the component of ``s`` and the value is
    0.  If every separating cut contains an infinite edge the value is
    ``INF`` and ``flow`` is a finite flow of the surrogate network.
    """
    c = weights(G, c)
    si, ti = G.index(s), G.index(t)
    if si == ti:
        raise ValueError("s and t must differ")
    big = finite_surrogate(c)
    caps = [big if w == INF else w for w in c]
    ends = [(G.index(a), G.index(b)) for a, b in G.edges]
    value, side, flow = max_flow(G.n, ends, caps, si, ti)
    if value >= big:
        value = INF
    return MinCutResult(value, frozenset(G.vertices[i] for i in side), flow)

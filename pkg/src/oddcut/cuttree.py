"""Gomory-Hu cut-trees with a designated terminal set."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .core import INF, ExtWeight, Graph, Vertex, format_weight, weights
from .maxflow import finite_surrogate, max_flow


@dataclass(frozen=True)
class CutTree:
    """A tree on the terminals plus a map sending every vertex to a terminal.

    ``edges`` holds ``(x, y, value)`` triples in construction order.  Deleting
    ``x ~ y`` splits the terminals in two; the preimage under ``pi`` of the
    ``x`` part is a minimum (x, y)-cut of weight ``value``.
    """

    graph: Graph
    terminals: tuple
    pi: dict
    edges: tuple
    maxflow_calls: int = 0

    def _find(self, x: Vertex, y: Vertex):
        for e in self.edges:
            if (e[0], e[1]) in ((x, y), (y, x)):
                return e
        raise ValueError(f"{x!r} ~ {y!r} is not a tree edge")

    def cut_value(self, x: Vertex, y: Vertex) -> ExtWeight:
        return self._find(x, y)[2]

    def component(self, x: Vertex, y: Vertex) -> frozenset:
        """Terminals on the ``x`` side once ``x ~ y`` is deleted."""
        self._find(x, y)
        nbrs: dict = {z: [] for z in self.terminals}
        for a, b, _ in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        side = {x}
        stack = [x]
        while stack:
            z = stack.pop()
            for w in nbrs[z]:
                if w not in side and {z, w} != {x, y}:
                    side.add(w)
                    stack.append(w)
        return frozenset(side)

    def induced_cut(self, x: Vertex, y: Vertex) -> frozenset:
        """Vertices of the graph mapped into the ``x`` side of ``x ~ y``."""
        side = self.component(x, y)
        return frozenset(v for v in self.graph.vertices if self.pi[v] in side)

    def path(self, x: Vertex, y: Vertex) -> list:
        """Tree edges on the path between terminals ``x`` and ``y``."""
        nbrs: dict = {z: [] for z in self.terminals}
        for e in self.edges:
            nbrs[e[0]].append((e[1], e))
            nbrs[e[1]].append((e[0], e))
        prev = {x: None}
        stack = [x]
        while stack:
            z = stack.pop()
            for w, e in nbrs[z]:
                if w not in prev:
                    prev[w] = (z, e)
                    stack.append(w)
        out = []
        z = y
        while prev[z] is not None:
            z, e = prev[z]
            out.append(e)
        return out[::-1]

    def dump(self) -> str:
        """Text form: one ``t x y value`` line per tree edge, then ``pi v x`` lines."""
        lines = [f"t {x} {y} {format_weight(w)}" for x, y, w in self.edges]
        lines += [f"pi {v} {self.pi[v]}" for v in self.graph.vertices]
        return "\n".join(lines) + "\n"


def induced_cut(tree: CutTree, edge: tuple) -> frozenset:
    return tree.induced_cut(edge[0], edge[1])


def gomory_hu(G: Graph, c, X: Iterable[Vertex] | None = None) -> CutTree:
    """Cut-tree of ``G`` under weights ``c`` with terminal set ``X`` (default: all vertices).

    Classical Gomory-Hu: keep a tree of supernodes, each a block of vertices
    holding at least one terminal.  Repeatedly pick a block with two
    terminals ``s, t``, contract each subtree hanging off the block into a
    single vertex, split the block along a minimum (s,t)-cut of the contracted
    graph and reattach the subtrees to whichever half their contracted vertex
    fell on.  Exactly ``|X| - 1`` max-flows are solved.
    """
    c = weights(G, c)
    if X is None:
        X = G.vertices
    X = G.vertex_set(X)
    if not X:
        raise ValueError("terminal set must be nonempty")
    big = finite_surrogate(c)
    caps = [big if w == INF else w for w in c]
    order = {v: i for i, v in enumerate(G.vertices)}

    # Block b: members[b] (vertex list) and terms[b] (terminal list), both in
    # vertex order.  Tree adjacency is a dict of block -> {neighbour: value}.
    members = {0: list(G.vertices)}
    terms = {0: [v for v in G.vertices if v in X]}
    tree: dict[int, dict[int, ExtWeight]] = {0: {}}
    created: dict[frozenset, int] = {}  # block pair -> creation stamp, for edge order
    calls = 0
    work = [0] if len(terms[0]) > 1 else []

    while work:
        b = work.pop(0)
        s, t = terms[b][0], terms[b][1]

        # Contract every subtree adjacent to b: vertex index per original vertex.
        node = {v: i for i, v in enumerate(members[b])}
        k = len(members[b])
        hanging = {}
        for nb in sorted(tree[b]):
            hanging[nb] = k
            stack, seen = [nb], {b, nb}
            while stack:
                z = stack.pop()
                for v in members[z]:
                    node[v] = k
                for w in tree[z]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            k += 1
        ends, cap = [], []
        for e, (u, v) in enumerate(G.edges):
            i, j = node[u], node[v]
            if i != j:
                ends.append((i, j))
                cap.append(caps[e])
        value, side, _ = max_flow(k, ends, cap, node[s], node[t])
        calls += 1
        if value >= big:
            value = INF

        new = max(members) + 1
        keep = [v for v in members[b] if node[v] in side]
        move = [v for v in members[b] if node[v] not in side]
        members[b], members[new] = keep, move
        terms[new] = [v for v in terms[b] if node[v] not in side]
        terms[b] = [v for v in terms[b] if node[v] in side]
        tree[new] = {}
        for nb, idx in hanging.items():
            if idx not in side:
                w = tree[b].pop(nb)
                del tree[nb][b]
                tree[new][nb] = w
                tree[nb][new] = w
                created[frozenset((nb, new))] = created.pop(frozenset((nb, b)))
        tree[b][new] = value
        tree[new][b] = value
        created[frozenset((b, new))] = calls
        for blk in (b, new):
            if len(terms[blk]) > 1:
                work.append(blk)

    rep = {blk: ts[0] for blk, ts in terms.items()}
    pi = {v: rep[blk] for blk, vs in members.items() for v in vs}
    pairs = sorted(created.items(), key=lambda kv: kv[1])
    edges = []
    for pair, _ in pairs:
        p, q = sorted(pair, key=lambda blk: order[rep[blk]])
        edges.append((rep[p], rep[q], tree[p][q]))
    return CutTree(G, tuple(v for v in G.vertices if v in X), pi, tuple(edges), calls)

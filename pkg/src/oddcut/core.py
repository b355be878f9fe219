"""Graph, weight and cut primitives.

Weights are exact: every finite weight is a :class:`fractions.Fraction` and the
single infinite weight is ``math.inf``.  Python already orders ``Fraction``
against ``inf`` correctly and ``Fraction + inf == inf``, so extended weights
need no wrapper class; :func:`ext_weight` is the one normalization point.
"""

from __future__ import annotations

import math
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Vertex = Hashable
ExtWeight = Union[Fraction, float]  # float only ever as math.inf

INF: float = math.inf


def ext_weight(value) -> ExtWeight:
    """Normalize ``value`` to a nonnegative exact weight or ``INF``.

    Accepts ints, Fractions, rational strings (``"7/3"``, ``"0.25"``,
    ``"inf"``) and ``math.inf``.  Finite floats are refused: they would
    smuggle binary rounding into exact arithmetic.
    """
    if isinstance(value, float):
        if value == math.inf:
            return INF
        raise TypeError(f"finite float weight {value!r}; pass a Fraction or a string")
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity", "+inf"):
        return INF
    if isinstance(value, bool):
        raise TypeError("bool is not a weight")
    w = Fraction(value)
    if w < 0:
        raise ValueError(f"negative weight {w}")
    return w


def is_finite(w: ExtWeight) -> bool:
    return w != INF


def format_weight(w: ExtWeight) -> str:
    """Render a weight as ``p/q`` (integers as ``p``) or ``inf``."""
    return "inf" if w == INF else str(w)


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph with stable, dense edge indices.

    ``edges[k]`` is the endpoint pair of edge instance ``k``.  Parallel edges
    are distinct instances; self-loops are rejected.  Vertex order is the
    order given and is used for every deterministic tie-break downstream.
    """

    vertices: tuple
    edges: tuple
    _index: dict = field(init=False, repr=False, compare=False)
    _incident: dict = field(init=False, repr=False, compare=False)

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]] = ()):
        vs = tuple(vertices)
        index = {}
        for i, v in enumerate(vs):
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = i
        es = []
        incident: dict = {v: [] for v in vs}
        for k, (a, b) in enumerate(edges):
            if a not in index or b not in index:
                raise ValueError(f"edge {k} has an undeclared endpoint: {(a, b)!r}")
            if a == b:
                raise ValueError(f"edge {k} is a self-loop at {a!r}")
            es.append((a, b))
            incident[a].append(k)
            incident[b].append(k)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", tuple(es))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_incident", {v: tuple(ks) for v, ks in incident.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: Vertex) -> int:
        """Position of ``v`` in the vertex order."""
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def incident(self, v: Vertex) -> tuple[int, ...]:
        """Indices of the edges with ``v`` as an endpoint (the set delta(v))."""
        self.index(v)
        return self._incident[v]

    def vertex_set(self, U: Iterable[Vertex]) -> frozenset:
        U = frozenset(U)
        for v in U:
            if v not in self._index:
                raise ValueError(f"unknown vertex {v!r}")
        return U

    def complement(self, U: Iterable[Vertex]) -> frozenset:
        U = self.vertex_set(U)
        return frozenset(v for v in self.vertices if v not in U)


def weights(G: Graph, c) -> tuple[ExtWeight, ...]:
    """Normalize a weight vector to a tuple indexed by edge.

    ``c`` may be a sequence of length ``G.m`` or a mapping that is total on
    the edge indices.
    """
    if isinstance(c, Mapping):
        missing = [k for k in range(G.m) if k not in c]
        if missing:
            raise ValueError(f"weight vector is missing edges {missing}")
        vals = [c[k] for k in range(G.m)]
    else:
        vals = list(c)
        if len(vals) != G.m:
            raise ValueError(f"weight vector has {len(vals)} entries for {G.m} edges")
    return tuple(ext_weight(w) for w in vals)


def delta(G: Graph, U: Iterable[Vertex]) -> frozenset[int]:
    """Edge instances with exactly one endpoint in ``U``."""
    U = G.vertex_set(U)
    return frozenset(k for k, (a, b) in enumerate(G.edges) if (a in U) != (b in U))


def interior_edges(G: Graph, U: Iterable[Vertex]) -> frozenset[int]:
    """Edge instances with both endpoints in ``U``."""
    U = G.vertex_set(U)
    return frozenset(k for k, (a, b) in enumerate(G.edges) if a in U and b in U)


def cut_weight(G: Graph, c: Sequence[ExtWeight], U: Iterable[Vertex]) -> ExtWeight:
    """Total weight of delta(U)."""
    c = weights(G, c)
    total: ExtWeight = Fraction(0)
    for k in delta(G, U):
        total += c[k]
    return total

"""Blossom-inequality separation for b-matching polytopes.

For a graph with vertex capacities ``b``, edge capacities ``u`` and a point
``x``, the blossom inequality for a handle ``W`` and teeth ``F`` in delta(W)
with ``b(W) + u(F)`` odd reads::

    x(E(W)) + x(F) <= floor((b(W) + u(F)) / 2)

Substituting the degree slacks ``s_i = b_i - x(delta(i))`` turns it into the
odd-cut form::

    s(W) + x(delta(W) - F) + sum_{f in F} (u_f - x_f) >= 1

whose left side equals ``1 + 2 * (rhs - lhs)``.  The odd-cut form is a
blossom value on the star graph (``G`` plus an apex joined to every vertex),
so the most violated inequality comes from one blossom minimization.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from .core import INF, ExtWeight, Graph, Vertex, delta, interior_edges
from .oddcut import Blossom, minimize_blossom, minimum_t_cut

Mode = Literal["capacitated", "uncapacitated", "perfect"]
MODES = ("capacitated", "uncapacitated", "perfect")


class _Apex:
    """The vertex added to build the star graph; never equal to a user vertex."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "APEX"

    def __reduce__(self):
        return (_Apex, ())


APEX = _Apex()


@dataclass(frozen=True)
class Instance:
    """A b-matching polytope: graph, vertex capacities ``b`` and (unless uncapacitated) edge capacities ``u``."""

    graph: Graph
    b: Mapping
    u: tuple | None = None
    mode: Mode = "capacitated"

    def __post_init__(self):
        G = self.graph
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        b = dict(self.b)
        if set(b) != set(G.vertices):
            raise ValueError("b must be given for exactly the vertices of the graph")
        for v, bv in b.items():
            if not isinstance(bv, int) or bv < 1:
                raise ValueError(f"b[{v!r}] = {bv!r} is not a positive integer")
        object.__setattr__(self, "b", b)
        if self.mode == "uncapacitated":
            if self.u is not None:
                raise ValueError("uncapacitated instances carry no edge capacities")
            return
        if self.u is None:
            raise ValueError(f"{self.mode} instances need edge capacities u")
        u = tuple(self.u[k] for k in range(G.m)) if isinstance(self.u, Mapping) else tuple(self.u)
        if len(u) != G.m:
            raise ValueError(f"u has {len(u)} entries for {G.m} edges")
        for k, uk in enumerate(u):
            if not isinstance(uk, int) or uk < 0:
                raise ValueError(f"u[{k}] = {uk!r} is not a nonnegative integer")
        object.__setattr__(self, "u", u)

    @property
    def capacitated(self) -> bool:
        return self.mode != "uncapacitated"


def point(G: Graph, x) -> tuple[Fraction, ...]:
    """Normalize a point (sequence or edge-index mapping, missing entries 0) to exact values."""
    if isinstance(x, Mapping):
        for k in x:
            if not (isinstance(k, int) and 0 <= k < G.m):
                raise ValueError(f"point has unknown edge {k!r}")
        vals = [x.get(k, 0) for k in range(G.m)]
    else:
        vals = list(x)
        if len(vals) != G.m:
            raise ValueError(f"point has {len(vals)} entries for {G.m} edges")
    out = []
    for v in vals:
        if isinstance(v, float):
            raise TypeError("pass exact values (Fraction, int or str), not floats")
        out.append(Fraction(v))
    return tuple(out)


class Violation(NamedTuple):
    """A violated degree constraint (``where`` a vertex) or bound (``where`` an edge index)."""

    kind: Literal["degree", "bound"]
    where: object
    amount: Fraction


class InfeasiblePoint(ValueError):
    """The point breaks a degree constraint or a bound, so blossom separation does not apply."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__(f"{len(violations)} degree/bound violation(s)")


@dataclass(frozen=True)
class ViolatedBlossom:
    W: frozenset
    F: frozenset
    rhs: int
    lhs: Fraction
    violation: Fraction
    beta: Fraction


@dataclass(frozen=True)
class StarGraph:
    graph: Graph
    c: tuple
    c_prime: tuple
    T: frozenset
    apex: object = APEX


def slack(inst: Instance, x, i: Vertex) -> Fraction:
    """``b_i`` minus the x-degree of ``i``."""
    G = inst.graph
    x = point(G, x)
    incident = G.incident(i)
    return inst.b[i] - sum((x[k] for k in incident), Fraction(0))


def check_degree_and_bounds(inst: Instance, x) -> list[Violation]:
    """Every violated degree constraint and bound, with the amount of violation.

    In perfect mode a degree constraint is an equality and a positive slack
    is reported too.
    """
    G = inst.graph
    x = point(G, x)
    out = []
    for i in G.vertices:
        s = slack(inst, x, i)
        if s < 0 or (inst.mode == "perfect" and s > 0):
            out.append(Violation("degree", i, abs(s)))
    for k, xk in enumerate(x):
        if xk < 0:
            out.append(Violation("bound", k, -xk))
        elif inst.capacitated and xk > inst.u[k]:
            out.append(Violation("bound", k, xk - inst.u[k]))
    return out


def _require_feasible(inst: Instance, x) -> None:
    bad = check_degree_and_bounds(inst, x)
    if bad:
        raise InfeasiblePoint(bad)


def build_star_graph(inst: Instance, x) -> StarGraph:
    """The star graph whose blossom values are the odd-cut left-hand sides.

    Original edge ``k`` keeps index ``k``; the apex edge of the ``j``-th
    vertex gets index ``m + j``.  Uncapacitated instances have no teeth, so
    every ``c'`` there is infinite.
    """
    _require_feasible(inst, x)
    G = inst.graph
    x = point(G, x)
    c: list[ExtWeight] = []
    cp: list[ExtWeight] = []
    for k in range(G.m):
        if not inst.capacitated:
            c.append(x[k])
            cp.append(INF)
        elif inst.u[k] % 2:
            c.append(x[k])
            cp.append(inst.u[k] - x[k])
        else:
            c.append(min(x[k], inst.u[k] - x[k]))
            cp.append(INF)
    for i in G.vertices:
        c.append(slack(inst, x, i))
        cp.append(INF)
    star = Graph(G.vertices + (APEX,), G.edges + tuple((i, APEX) for i in G.vertices))
    T = {i for i in G.vertices if inst.b[i] % 2}
    if sum(inst.b.values()) % 2:
        T.add(APEX)
    return StarGraph(star, tuple(c), tuple(cp), frozenset(T))


def blossom_lhs_rhs(inst: Instance, x, W: Iterable[Vertex], F: Iterable[int]):
    """``(lhs, rhs, oddcut_lhs)`` of the blossom inequality for handle ``W`` and teeth ``F``."""
    G = inst.graph
    x = point(G, x)
    W = G.vertex_set(W)
    F = frozenset(F)
    cut = delta(G, W)
    if not F <= cut:
        raise ValueError("F is not contained in delta(W)")
    if F and not inst.capacitated:
        raise ValueError("uncapacitated blossoms have no teeth")
    u_F = sum(inst.u[f] for f in F) if F else 0
    total = sum(inst.b[i] for i in W) + u_F
    if total % 2 == 0:
        raise ValueError(f"b(W) + u(F) = {total} is even")
    rhs = total // 2
    lhs = sum((x[k] for k in interior_edges(G, W)), Fraction(0)) + sum((x[f] for f in F), Fraction(0))
    oddcut = (
        sum((slack(inst, x, i) for i in W), Fraction(0))
        + sum((x[k] for k in cut - F), Fraction(0))
        + sum((inst.u[f] - x[f] for f in F), Fraction(0))
    )
    assert oddcut == 1 + 2 * (rhs - lhs)
    return lhs, rhs, oddcut


def minimum_star_blossom(inst: Instance, x) -> Blossom | None:
    """The minimum blossom of the star graph, turned so the apex lies outside ``U``.

    ``U`` is then a handle in the original graph.  ``F`` is widened by every
    even-capacity edge of delta(U) with ``u - x < x``: the star graph charges
    such edges ``min(x, u - x)``, which is exactly what adding them as teeth
    costs in the odd-cut form, and an even ``u`` leaves the parity alone.
    """
    star = build_star_graph(inst, x)
    G = inst.graph
    x = point(G, x)
    best = minimize_blossom(star.graph, star.c, star.c_prime, star.T)
    if best is None:
        return None
    U = best.U
    if APEX in U:
        U = star.graph.complement(U)
    assert all(f < G.m for f in best.F)
    F = set(best.F)
    if inst.capacitated:
        for k in delta(G, U):
            if inst.u[k] % 2 == 0 and inst.u[k] - x[k] < x[k]:
                F.add(k)
    return Blossom(U, frozenset(F), best.beta)


def _violated(inst: Instance, x, W, F, beta) -> ViolatedBlossom:
    lhs, rhs, oddcut = blossom_lhs_rhs(inst, x, W, F)
    assert oddcut == beta
    violation = lhs - rhs
    assert violation == (1 - beta) / 2
    return ViolatedBlossom(W, F, rhs, lhs, violation, beta)


class SeparationReport(NamedTuple):
    """Minimum odd-cut value over all blossoms (``INF`` if none exists) and the cut it yields."""

    beta: ExtWeight
    cut: ViolatedBlossom | None


def separation_report(inst: Instance, x) -> SeparationReport:
    """Run the separation once and keep the minimum value even when nothing is violated."""
    if inst.capacitated:
        found = minimum_star_blossom(inst, x)
        found = None if found is None else (found.U, found.F, found.beta)
    else:
        t_cut = minimum_star_t_cut(inst, x)
        found = None if t_cut is None else (t_cut[0], frozenset(), t_cut[1])
    if found is None:
        return SeparationReport(INF, None)
    U, F, beta = found
    if beta >= 1:
        return SeparationReport(beta, None)
    return SeparationReport(beta, _violated(inst, x, U, F, beta))


def separate_capacitated(inst: Instance, x) -> ViolatedBlossom | None:
    """A most violated blossom inequality, or ``None`` if ``x`` satisfies all of them.

    Raises :class:`InfeasiblePoint` if a degree constraint or bound fails.
    """
    if not inst.capacitated:
        raise ValueError("instance is uncapacitated; use separate_uncapacitated")
    return separation_report(inst, x).cut


def minimum_star_t_cut(inst: Instance, x) -> tuple[frozenset, ExtWeight] | None:
    """Minimum T-cut of the uncapacitated star graph, apex outside; ``None`` if ``T`` is empty."""
    if inst.capacitated:
        raise ValueError("instance is capacitated; use separate_capacitated")
    star = build_star_graph(inst, x)
    if not star.T:
        return None
    U, value = minimum_t_cut(star.graph, star.c, star.T)
    if APEX in U:
        U = star.graph.complement(U)
    return U, value


def separate_uncapacitated(inst: Instance, x) -> ViolatedBlossom | None:
    """A most violated simplified blossom inequality ``x(E(W)) <= floor(b(W)/2)``, or ``None``."""
    if inst.capacitated:
        raise ValueError("instance is capacitated; use separate_capacitated")
    return separation_report(inst, x).cut


def tsp_instance(G: Graph, perfect: bool = False) -> Instance:
    """2-matching instance: ``b = 2`` everywhere and ``u = 1`` on every edge."""
    return Instance(G, {i: 2 for i in G.vertices}, (1,) * G.m, "perfect" if perfect else "capacitated")


def separate_tsp(G: Graph, x, perfect: bool = False) -> ViolatedBlossom | None:
    """Separate 2-matching blossom inequalities (``b = 2``, ``u = 1``)."""
    return separate_capacitated(tsp_instance(G, perfect), x)

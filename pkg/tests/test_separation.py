import random
from fractions import Fraction

import pytest

from oddcut import (
    APEX,
    INF,
    Graph,
    InfeasiblePoint,
    Instance,
    blossom_lhs_rhs,
    blossom_value,
    build_star_graph,
    check_degree_and_bounds,
    delta,
    separate_capacitated,
    separate_tsp,
    separate_uncapacitated,
    separation_report,
    slack,
)
from oddcut.oracle import _subsets, bf_most_violated_blossom
from oddcut.separation import minimum_star_blossom
from randgraphs import lp_vertex_point, rand_instance, rand_point

HALF = Fraction(1, 2)
SIX = Graph([1, 2, 3, 4, 5, 6], [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
SIX_X = [HALF, HALF, HALF, 1, 1, 1]
EDGE = Graph([1, 2], [(1, 2)])


def cap(G, b, u, mode="capacitated"):
    return Instance(G, dict(zip(G.vertices, b)), tuple(u), mode)


class TestSlackAndChecks:
    def test_slack(self):
        assert slack(Instance(Graph([0]), {0: 3}, ()), [], 0) == 3
        star = Graph([0, 1, 2, 3], [(0, 1), (0, 2), (0, 3)])
        assert slack(cap(star, [2, 1, 1, 1], [1, 1, 1]), [HALF, HALF, 1], 0) == 0
        assert slack(cap(EDGE, [1, 1], [1]), [Fraction(3, 5)], 1) == Fraction(2, 5)
        with pytest.raises(ValueError):
            slack(cap(EDGE, [1, 1], [1]), [0], 9)

    def test_checks(self):
        inst = cap(EDGE, [2, 2], [1])
        assert check_degree_and_bounds(inst, [HALF]) == []
        assert check_degree_and_bounds(inst, [Fraction(3, 2)]) == [("bound", 0, HALF)]
        G = Graph([0, 1, 2], [(0, 1), (0, 2)])
        bad = check_degree_and_bounds(cap(G, [1, 1, 1], [1, 1]), [1, 1])
        assert bad == [("degree", 0, 1)]

    def test_perfect_mode_requires_equality(self):
        inst = cap(EDGE, [1, 1], [1], "perfect")
        assert check_degree_and_bounds(inst, [1]) == []
        assert [v.kind for v in check_degree_and_bounds(inst, [HALF])] == ["degree", "degree"]

    def test_separation_rejects_infeasible(self):
        with pytest.raises(InfeasiblePoint) as exc:
            separate_capacitated(cap(EDGE, [1, 1], [1]), [2])
        assert {v.kind for v in exc.value.violations} == {"bound", "degree"}


class TestStarGraph:
    def test_odd_capacity(self):
        star = build_star_graph(cap(EDGE, [1, 1], [1]), [Fraction(3, 5)])
        assert star.graph.vertices == (1, 2, APEX)
        assert star.graph.edges == ((1, 2), (1, APEX), (2, APEX))
        assert star.c == (Fraction(3, 5), Fraction(2, 5), Fraction(2, 5))
        assert star.c_prime == (Fraction(2, 5), INF, INF)
        assert star.T == {1, 2}

    def test_even_capacity(self):
        star = build_star_graph(cap(EDGE, [1, 1], [2]), [Fraction(3, 5)])
        assert (star.c[0], star.c_prime[0]) == (Fraction(3, 5), INF)
        assert star.T == {1, 2}

    def test_apex_parity(self):
        star = build_star_graph(cap(EDGE, [1, 2], [1]), [HALF])
        assert star.T == {1, APEX}

    def test_t_always_even(self):
        rng = random.Random(31)
        for _ in range(100):
            inst = rand_instance(rng)
            assert len(build_star_graph(inst, rand_point(rng, inst)).T) % 2 == 0


class TestLhsRhs:
    def test_six_vertex(self):
        inst = cap(SIX, [2] * 6, [1] * 6)
        assert blossom_lhs_rhs(inst, SIX_X, {1, 2, 3}, {3, 4, 5}) == (Fraction(9, 2), 4, 0)

    def test_singleton(self):
        inst = Instance(Graph([0]), {0: 1}, ())
        assert blossom_lhs_rhs(inst, [], {0}, ()) == (0, 0, 1)

    def test_errors(self):
        inst = cap(SIX, [2] * 6, [1] * 6)
        with pytest.raises(ValueError, match="even"):
            blossom_lhs_rhs(inst, SIX_X, {1, 2, 3}, {3, 4})
        with pytest.raises(ValueError, match="delta"):
            blossom_lhs_rhs(inst, SIX_X, {1, 2, 3}, {0})

    def test_integral_points_satisfy_all(self):
        rng = random.Random(32)
        for _ in range(40):
            inst = rand_instance(rng, n_max=5, m_max=7)
            G = inst.graph
            x = [Fraction(rng.randint(0, inst.u[k])) for k in range(G.m)]
            if check_degree_and_bounds(inst, x):
                continue
            for W in _subsets(G.vertices):
                for F in _subsets(tuple(sorted(delta(G, W)))):
                    if (sum(inst.b[i] for i in W) + sum(inst.u[f] for f in F)) % 2:
                        assert blossom_lhs_rhs(inst, x, W, F)[2] >= 1


def test_reduction_soundness():
    # Every finite star-graph blossom with the apex outside U prices the odd-cut form
    # of (U, F plus the even-capacity edges whose complement u - x is cheaper).
    rng = random.Random(33)
    for _ in range(25):
        inst = rand_instance(rng, n_max=4, m_max=6)
        x = rand_point(rng, inst)
        star = build_star_graph(inst, x)
        G = inst.graph
        T = star.T
        for U in _subsets(G.vertices):
            for F in _subsets(tuple(sorted(delta(star.graph, U)))):
                if (len(T & U) + len(F)) % 2 == 0:
                    continue
                beta = blossom_value(star.graph, star.c, star.c_prime, U, F)
                if beta == INF:
                    continue
                extra = {k for k in delta(G, U) if inst.u[k] % 2 == 0 and inst.u[k] - x[k] < x[k]}
                assert blossom_lhs_rhs(inst, x, U, F | extra)[2] == beta


class TestWorkedExamples:
    def test_six_vertex(self):
        cut = separate_tsp(SIX, SIX_X)
        assert cut.W == {1, 2, 3} and cut.F == {3, 4, 5}
        assert (cut.beta, cut.rhs, cut.lhs, cut.violation) == (0, 4, Fraction(9, 2), HALF)

    def test_single_edge(self):
        inst = cap(EDGE, [1, 1], [1])
        assert separate_capacitated(inst, [Fraction(3, 5)]) is None
        assert separation_report(inst, [Fraction(3, 5)]).beta == 1
        b = minimum_star_blossom(inst, [Fraction(3, 5)])
        assert b.beta == 1 and b.F == frozenset() and b.U in ({1}, {2})

    def test_uncapacitated_triangle(self):
        G = Graph([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
        inst = Instance(G, {1: 1, 2: 1, 3: 1}, None, "uncapacitated")
        cut = separate_uncapacitated(inst, [HALF] * 3)
        assert cut.W == {1, 2, 3} and cut.F == frozenset()
        assert (cut.rhs, cut.lhs, cut.violation) == (1, Fraction(3, 2), HALF)

    def test_uncapacitated_single_vertex(self):
        assert separate_uncapacitated(Instance(Graph([0]), {0: 1}, None, "uncapacitated"), []) is None

    def test_tsp_tour_and_zero(self):
        C5 = Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])
        assert separate_tsp(C5, [1] * 5) is None
        assert separate_tsp(C5, [1] * 5, perfect=True) is None
        assert separate_tsp(C5, [0] * 5) is None

    def test_mode_guard(self):
        with pytest.raises(ValueError):
            separate_uncapacitated(cap(EDGE, [1, 1], [1]), [0])
        with pytest.raises(ValueError):
            separate_capacitated(Instance(EDGE, {1: 1, 2: 1}, None, "uncapacitated"), [0])


def _agrees(inst, x):
    got = separate_capacitated(inst, x) if inst.capacitated else separate_uncapacitated(inst, x)
    ref = bf_most_violated_blossom(inst, x)
    assert (got is None) == (ref is None)
    if got is not None:
        assert got.violation == ref[0] == (1 - got.beta) / 2
        assert APEX not in got.W and all(f < inst.graph.m for f in got.F)
        total = sum(inst.b[i] for i in got.W) + (sum(inst.u[f] for f in got.F) if got.F else 0)
        assert total % 2 == 1 and got.rhs == total // 2


@pytest.mark.parametrize("mode", ["capacitated", "uncapacitated"])
def test_random_against_enumeration(mode):
    rng = random.Random(34)
    for _ in range(80):
        inst = rand_instance(rng, mode)
        _agrees(inst, rand_point(rng, inst))


def test_random_lp_vertices():
    rng = random.Random(35)
    done = 0
    while done < 60:
        inst = rand_instance(rng, rng.choice(["capacitated", "perfect"]))
        x = lp_vertex_point(rng, inst)
        if x is None:
            continue
        _agrees(inst, x)
        done += 1


def test_even_capacity_teeth_are_reported():
    # Edge 6 has u = 2 and x = 2, so the star graph charges it u - x = 0.  The raw
    # minimum blossom is (W = {0, 1, 2}, F = {}), beta = 0, but that inequality has
    # odd-cut value 2; only with edge 6 as a tooth is it violated, by exactly 1/2.
    G = Graph([0, 1, 2, 3], [(0, 1), (1, 2), (1, 2), (2, 0), (1, 0), (3, 2), (3, 0)])
    inst = Instance(G, {0: 4, 1: 4, 2: 5, 3: 2}, (1, 4, 1, 4, 4, 1, 2))
    x = [HALF, Fraction(7, 2), 0, Fraction(3, 2), 0, 0, 2]
    assert blossom_lhs_rhs(inst, x, {0, 1, 2}, ())[2] == 2
    cut = separate_capacitated(inst, x)
    assert (cut.W, cut.F, cut.beta, cut.violation) == ({0, 1, 2}, {6}, 0, HALF)
    assert bf_most_violated_blossom(inst, x)[0] == HALF

# coding: utf-8

# # Separating blossom inequalities
#
# For a b-matching instance with capacities u, every W ⊆ V and every F ⊆ delta(W) with
# b(W) + u(F) odd give a valid inequality
#
#     x(E(W)) + x(F) <= (b(W) + u(F) - 1) / 2.
#
# Given a fractional point x, the separation routine either returns a most violated
# inequality or reports that none exists.

from fractions import Fraction

from oddcut import (
    Graph,
    Instance,
    check_degree_and_bounds,
    count_maxflows,
    separate_capacitated,
    separate_tsp,
    separate_uncapacitated,
    separation_report,
)

# The classic TSP picture: a triangle of half edges with three pendant edges at 1.

half = Fraction(1, 2)
G = Graph([1, 2, 3, 4, 5, 6], [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
x = [half, half, half, 1, 1, 1]

cut = separate_tsp(G, x)
print("W =", sorted(cut.W), "teeth (edge indices) =", sorted(cut.F))
print("lhs", cut.lhs, "rhs", cut.rhs, "violation", cut.violation, "beta", cut.beta)

# The violation is always (1 - beta) / 2, where beta is the value of the minimum blossom
# in an auxiliary star graph.  Separation costs exactly |V| max-flows.

inst = Instance(G, {v: 2 for v in G.vertices}, (1,) * 6)
with count_maxflows() as counter:
    separate_capacitated(inst, x)
print("max-flows:", counter.calls)

# A point that satisfies every blossom inequality gives None.  The report still shows
# the minimum beta, which is then at least 1.

edge = Instance(Graph([1, 2], [(1, 2)]), {1: 1, 2: 1}, (1,))
print(separate_capacitated(edge, [Fraction(3, 5)]), separation_report(edge, [Fraction(3, 5)]))

# Separation assumes the degree and bound constraints hold.  Check them first; an
# infeasible point raises InfeasiblePoint, which lists what is wrong.

print(check_degree_and_bounds(edge, [2]))

# In the uncapacitated case F is always empty and the inequalities are
# x(E(W)) <= (b(W) - 1) / 2 for b(W) odd.

tri = Graph([1, 2, 3], [(1, 2), (1, 3), (2, 3)])
print(separate_uncapacitated(Instance(tri, {1: 1, 2: 1, 3: 1}, None, "uncapacitated"), [half] * 3))

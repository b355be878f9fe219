# coding: utf-8

# # Minimum T-cuts and minimum blossoms
#
# Given an even set T, a T-cut is a cut delta(U) with |U ∩ T| odd.  The cheapest one can
# be read off a cut-tree built on T alone: look at the tree edges whose two sides both
# hold an odd number of T vertices.

from fractions import Fraction

from oddcut import INF, Graph, beta_min_F, gomory_hu, minimize_blossom, minimum_t_cut, t_odd_tree_edges

C6 = Graph(range(6), [(i, (i + 1) % 6) for i in range(6)])
c = [1, 4, 2, 5, 3, 6]
T = {0, 1, 2, 3}

U, value = minimum_t_cut(C6, c, T)
print("minimum T-cut", sorted(U), "value", value)

tree = gomory_hu(C6, c, T)
print("T-odd tree edges:", t_odd_tree_edges(T, tree))

# A blossom prices every edge twice.  Edge e costs c[e] when it is kept out of F and
# c'[e] when it is put in F.  The pair (U, F) qualifies when |U ∩ T| + |F| is odd, and
# its value beta is the sum of those prices over delta(U).

c = [Fraction(3, 10), Fraction(2, 5), 1, 1, 1, 1]
cp = [Fraction(1, 2), Fraction(1, 10), INF, INF, INF, 1]

# For a fixed U the best F is cheap to find: take the edges where c' beats c, then fix
# the parity with the single least costly swap.

P = Graph("pqr", [("p", "q"), ("q", "r")])
print(beta_min_F(P, c[:2], cp[:2], set(), {"q"}))

# Over all U the minimum comes from a cut-tree on every vertex, built with weights
# min(c, c'), using |V| - 1 max-flows.

best = minimize_blossom(C6, c, cp, {0, 3})
print("minimum blossom U =", sorted(best.U), "F =", sorted(best.F), "beta =", best.beta)

# When no qualifying pair has finite value the answer is None.

K2 = Graph("ab", [("a", "b")])
print(minimize_blossom(K2, [1], [INF], set()))

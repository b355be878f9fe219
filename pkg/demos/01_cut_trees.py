# coding: utf-8

# # Cut-trees and minimum s-t cuts
#
# Everything in `oddcut` works with exact rationals.  Weights are ints, `Fraction`s,
# decimal strings, or `"inf"`; binary floats are refused, since 0.1 is not 1/10.

from fractions import Fraction

from oddcut import Graph, count_maxflows, cut_weight, gomory_hu, min_st_cut

# A small network: two triangles joined by a thin bridge.

G = Graph("abcdef", [("a", "b"), ("b", "c"), ("c", "a"),
                     ("c", "d"),
                     ("d", "e"), ("e", "f"), ("f", "d")])
c = [3, 3, 3, Fraction(1, 2), 2, 2, "inf"]

# One max-flow gives the minimum a-f cut.  The source side is the set of vertices still
# reachable from `a` in the residual graph, and the flow certifies the value.

cut = min_st_cut(G, c, "a", "f")
print("value", cut.value, "source side", sorted(cut.source_side))
print("flow on each edge", [str(cut.flow[k]) for k in range(G.m)])

# A cut-tree packs every pairwise minimum cut into a tree with |X| - 1 edges, and it
# costs exactly |X| - 1 max-flows.

with count_maxflows() as counter:
    tree = gomory_hu(G, c)
print(tree.dump())
print("max-flows used:", counter.calls)

# Removing a tree edge splits the terminals in two, and that split is a minimum cut
# between the edge's ends in G.

for x, y, value in tree.edges:
    side = tree.induced_cut(x, y)
    assert cut_weight(G, c, side) == value
    print(f"{x}-{y}: cut {sorted(side)} of weight {value}")

# For any pair, the minimum cut value is the lightest edge on the tree path between them.

path = tree.path("a", "e")
print("a to e:", min(w for _, _, w in path), "via", path)
print("tree edge d-f:", tree.cut_value("d", "f"))

# Terminals can be a proper subset of V.  The other vertices are still routed through,
# but they only appear in the partition `pi`.

small = gomory_hu(G, c, X=["a", "b", "e"])
print(small.dump())

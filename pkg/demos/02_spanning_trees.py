"""
Two edge-disjoint node-independent spanning trees
=================================================

The black tree B_k and the red tree R'_k both span G_k, share no edge, and
for every node v the two root-to-v paths meet only at the root and v.
"""

from gaussnet import GInt, build_network, build_tree, depth, tree_path
from gaussnet.trees import black_components
from gaussnet.verifier import check_node_independence, edge_disjointness

k = 4
net = build_network(k)
black = build_tree(k, "black")
red = build_tree(k, "redprime")

# %%
# B_k is glued from eight pieces: an array triangle A, the baseline 0..k, a
# set of wrap edges, and their quarter-turn images.
for name, part in black_components(k).items():
    print(f"{name:8s} {len(part.edges):2d} edges")

# %%
# Together the two trees use all but two of the 4k^2+4k+2 edges.
rep = edge_disjointness(black, red)
print("shared:", rep.shared_edges, "unused:", [str(e) for e in rep.leftover_edges])

# %%
# Paths to the same node never meet in the middle.
v = GInt(2, 1)
print("black:", " ".join(map(str, tree_path(black, v))))
print("red:  ", " ".join(map(str, tree_path(red, v))))
print("independent everywhere:", check_node_independence(black, red).ok)
print("depths:", depth(black), depth(red))

# %%
# For k = 1 the unmodified red tree R_1 is one level too deep; moving the
# leaf k under -ki fixes that.
print("depth R_1 =", depth(build_tree(1, "red")), " depth R'_1 =", depth(build_tree(1, "redprime")))

# %%
# `gaussnet export 4 both -f dot | neato -n -Tsvg > trees.svg` draws the pair
# with every node at its lattice position.

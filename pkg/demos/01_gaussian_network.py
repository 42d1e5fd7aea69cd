"""
The dense Gaussian network G_k
==============================

Nodes are the Gaussian integers a+bi with |a|+|b| <= k, read modulo
alpha_k = k + (k+1)i.  Each node talks to its four neighbours
v+1, v-1, v+i, v-i, reduced back into the diamond.
"""

from gaussnet import GInt, build_network, canonical_mod

net = build_network(3)
print(net, "edges:", len(net.edges))

# %%
# Reduction folds any Gaussian integer back into the diamond.  Stepping
# east from the corner 3 wraps around to 3i, since (k+1) - ki = -i * alpha_k.
print(canonical_mod(GInt(4, 0), 3))
print("neighbours of 3:", [str(v) for v in net.neighbors(GInt(3, 0))])

# %%
# Edges that leave the diamond on the grid come back as wrap edges; both
# their endpoints sit on the boundary |a|+|b| = k.
wraps = [e for e in net.edges if e.wrap]
print(len(wraps), "wrap edges, e.g.", wraps[0], wraps[0].axis.value)

# %%
# Diameter is k and the distance distribution from any node is that of the
# infinite grid, cut off at distance k.
print("diameter:", net.diameter())
print("histogram:", net.distance_histogram())

# %%
# Labelling a+bi by k*a + (k+1)*b mod N turns G_k into the circulant graph
# C_N(k, k+1).
print("label of 1+i:", net.to_circulant_label(GInt(1, 1)))
print("circulant isomorphism holds:", net.verify_circulant_iso())

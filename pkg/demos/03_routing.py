"""
Routing on the trees without storing them
=========================================

Every node can act as the root: the source reduces the destination relative
to itself, picks a first direction, and transit nodes only decide whether
to turn.  The resulting route is the tree path of the translated tree.
"""

from gaussnet import GInt, build_network, rebase, build_tree, simulate_route, tree_path
from gaussnet.router import trace_route

k = 3
net = build_network(k)
s, d = GInt(1, -1), GInt(-2, 1)

# %%
for kind in ("black", "redprime"):
    for node, hdr in trace_route(net, s, d, kind):
        print(f"{kind:8s} at {str(node):6s} header={hdr.as_tuple()} wire={hdr.encode().hex()}")
    print()

# %%
# The routed path equals the path in the tree rebased at the source.
for kind in ("black", "redprime"):
    print(kind, simulate_route(net, s, d, kind) == tree_path(rebase(build_tree(k, kind), s), d))

# %%
# The literal transit table gets two red destinations wrong (mapped
# locations k and ki); `patch_corners=False` shows the failure.
from gaussnet.router import RoutingError

try:
    simulate_route(net, GInt(0, 0), GInt(k, 0), "redprime", patch_corners=False)
except RoutingError as exc:
    print("literal tables:", exc)
print("patched:", [str(v) for v in simulate_route(net, GInt(0, 0), GInt(k, 0), "redprime")])

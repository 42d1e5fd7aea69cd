"""
Surviving a failure, and splitting a secret
===========================================

Sending along both trees survives any single node or link failure.
Sending half a message along each tree means no relay sees both halves.
"""

from gaussnet import FaultSpec, GInt, build_network, ft_broadcast, ft_unicast, secure_split_send
from gaussnet.protocols import all_single_faults

net = build_network(2)
root = GInt(0, 0)

# %%
# Knocking out node i cuts its black subtree, but the red copies still
# arrive.
rep = ft_broadcast(net, root, FaultSpec.node_fault(GInt(0, 1)))
print("blocked:", [str(v) for v in rep.blocked])
print("1+i received:", sorted(rep.exposure[GInt(1, 1)]))

# %%
# Exhaustively: every root, every single fault.
ok = all(
    ft_broadcast(net, r, f).delivered == set(net.nodes) - {r, f.node}
    for r in net.nodes
    for f in all_single_faults(net, exclude=[r])
)
print("broadcast survives every single fault:", ok)
print("unicast 0 -> 1+i with link (-1, -1-i) down:",
      ft_unicast(net, root, GInt(1, 1), FaultSpec.edge_fault(net, GInt(-1, 0), GInt(-1, -1))))

# %%
# Split send: only the destination holds both packets.
rep = secure_split_send(net, root, GInt(1, 1))
for v, packets in rep.exposure.items():
    print(f"{str(v):5s} {sorted(packets)}")

"""Fault-tolerant delivery and split-message sending over the tree pair.

Broadcast copies travel down both rebased trees in synchronous rounds;
unicast and split sends use the routed paths.  Faults are static and fixed
before a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .gaussian import GInt
from .network import Edge, Network, node_sort_key
from .router import SelfRouteError, simulate_route
from .trees import SpanningTree, TreeKind, build_tree

__all__ = [
    "FaultSpec",
    "DeliveryReport",
    "tree_broadcast",
    "ft_broadcast",
    "ft_unicast",
    "secure_split_send",
]

PACKETS = {TreeKind.BLACK: "black", TreeKind.RED_PRIME: "red"}


@dataclass(frozen=True)
class FaultSpec:
    node: GInt | None = None
    edge: Edge | None = None

    def __post_init__(self) -> None:
        if self.node is not None and self.edge is not None:
            raise ValueError("a FaultSpec holds at most one fault")

    @classmethod
    def none(cls) -> FaultSpec:
        return cls()

    @classmethod
    def node_fault(cls, v: GInt) -> FaultSpec:
        return cls(node=v)

    @classmethod
    def edge_fault(cls, net: Network, u: GInt, v: GInt) -> FaultSpec:
        return cls(edge=net.edge(u, v))

    @property
    def kind(self) -> str:
        if self.node is not None:
            return "node"
        if self.edge is not None:
            return "edge"
        return "none"

    def blocks_node(self, v: GInt) -> bool:
        return self.node == v

    def blocks_link(self, u: GInt, v: GInt) -> bool:
        return self.edge is not None and self.edge.endpoints == frozenset((u, v))

    def to_dict(self) -> dict:
        if self.node is not None:
            return {"kind": "node", "node": [self.node.re, self.node.im]}
        if self.edge is not None:
            return {"kind": "edge", "edge": [[self.edge.u.re, self.edge.u.im], [self.edge.v.re, self.edge.v.im]]}
        return {"kind": "none"}


def all_single_faults(net: Network, exclude: Iterable[GInt] = ()) -> list[FaultSpec]:
    """Every single node fault (outside ``exclude``) and every single edge fault."""
    exclude = set(exclude)
    faults = [FaultSpec.node_fault(v) for v in net.nodes if v not in exclude]
    faults += [FaultSpec(edge=e) for e in net.edges]
    return faults


@dataclass
class DeliveryReport:
    delivered: set[GInt]
    blocked: set[GInt]
    exposure: dict[GInt, set[str]] = field(default_factory=dict)
    transmissions: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        def pts(nodes):
            return [[v.re, v.im] for v in sorted(nodes, key=node_sort_key)]

        return {
            "delivered": pts(self.delivered),
            "blocked": pts(self.blocked),
            "exposure": [
                {"node": [v.re, v.im], "packets": sorted(self.exposure[v])}
                for v in sorted(self.exposure, key=node_sort_key)
            ],
            "transmissions": dict(sorted(self.transmissions.items())),
        }


def tree_broadcast(tree: SpanningTree, fault: FaultSpec = FaultSpec()) -> tuple[set[GInt], int]:
    """Push one copy down ``tree`` round by round.

    Returns the nodes that received a copy (root excluded) and the number of
    link transmissions made.  A faulty node neither accepts nor forwards; a
    faulty link drops whatever crosses it.
    """
    children = tree.children()
    for kids in children.values():
        kids.sort(key=node_sort_key)
    reached: set[GInt] = set()
    sent = 0
    frontier = [tree.root]
    while frontier:
        nxt = []
        for x in frontier:
            for c in children[x]:
                sent += 1
                if fault.blocks_link(x, c) or fault.blocks_node(c):
                    continue
                reached.add(c)
                nxt.append(c)
        frontier = nxt
    return reached, sent


def ft_broadcast(net: Network, root: GInt, fault: FaultSpec = FaultSpec()) -> DeliveryReport:
    """Broadcast from ``root`` along both trees rebased at ``root``."""
    if fault.blocks_node(root):
        raise ValueError("the broadcast root cannot be the faulty node")
    recipients = set(net.nodes) - {root}
    exposure: dict[GInt, set[str]] = {}
    transmissions = {}
    for kind, label in PACKETS.items():
        got, sent = tree_broadcast(_tree(net.k, kind, root), fault)
        transmissions[label] = sent
        for v in got:
            exposure.setdefault(v, set()).add(label)
    delivered = set(exposure)
    return DeliveryReport(delivered, recipients - delivered, exposure, transmissions)


@lru_cache(maxsize=4096)
def _tree(k: int, kind: TreeKind, root: GInt) -> SpanningTree:
    return build_tree(k, kind, root)


@lru_cache(maxsize=1 << 15)
def _routes(net: Network, s: GInt, d: GInt) -> dict[str, tuple[GInt, ...]]:
    # routes do not depend on the fault; sweeps over faults reuse them
    return {label: tuple(simulate_route(net, s, d, kind)) for kind, label in PACKETS.items()}


def _route_hits(route: tuple[GInt, ...], fault: FaultSpec) -> bool:
    if any(fault.blocks_node(v) for v in route):
        return True
    return any(fault.blocks_link(a, b) for a, b in zip(route, route[1:]))


def ft_unicast(net: Network, s: GInt, d: GInt, fault: FaultSpec = FaultSpec()) -> bool:
    """True iff at least one of the two routed paths avoids the fault."""
    if fault.node in (s, d):
        raise ValueError("the faulty node must differ from source and destination")
    return any(not _route_hits(route, fault) for route in _routes(net, s, d).values())


def secure_split_send(net: Network, s: GInt, d: GInt) -> DeliveryReport:
    """Send half of a message on each tree and record who carried which half."""
    if s == d:
        raise SelfRouteError(f"source and destination coincide ({s})")
    exposure: dict[GInt, set[str]] = {}
    transmissions = {}
    for label, route in _routes(net, s, d).items():
        transmissions[label] = len(route) - 1
        for v in route[1:]:
            exposure.setdefault(v, set()).add(label)
    complete = exposure.get(d, set()) == set(PACKETS.values())
    delivered = {d} if complete else set()
    return DeliveryReport(delivered, {d} - delivered, exposure, transmissions)

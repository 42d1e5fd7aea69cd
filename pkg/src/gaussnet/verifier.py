"""Brute-force checks of the tree properties.

Everything here works from raw edge sets and parent maps.  Connectivity,
paths and intersections are recomputed by traversal; nothing is taken from
how the trees were assembled.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .gaussian import GInt
from .network import Axis, Edge, Network, UNIT_STEPS, build_network, node_sort_key
from .trees import SpanningTree, Subgraph, h_subgraphs
from .symmetry import rho

__all__ = [
    "IndependenceReport",
    "DisjointnessReport",
    "LemmaReport",
    "is_spanning_tree",
    "tree_path",
    "paths_from_edges",
    "check_node_independence",
    "edge_disjointness",
    "depth",
    "path_components",
    "axis_paths",
    "check_hor_vert",
    "check_lemmas",
]


def _sorted_nodes(nodes: Iterable[GInt]) -> list[GInt]:
    return sorted(nodes, key=node_sort_key)


def _edge_key(e: Edge) -> tuple:
    return (node_sort_key(e.u), node_sort_key(e.v))


def _adjacency(edges: Iterable[Edge]) -> dict[GInt, list[GInt]]:
    adj: dict[GInt, list[GInt]] = {}
    for e in edges:
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    return adj


def _reach(adj: dict[GInt, list[GInt]], start: GInt) -> set[GInt]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def is_spanning_tree(net: Network, sub: Subgraph) -> bool:
    """True iff ``sub`` covers every node, is connected, and has ``|V| - 1`` edges."""
    if set(sub.vertices) != set(net.nodes):
        return False
    if any(not net.has_edge(e.u, e.v) for e in sub.edges):
        return False
    if len(sub.edges) != len(net.nodes) - 1:
        return False
    return len(_reach(_adjacency(sub.edges), net.nodes[0])) == len(net.nodes)


def tree_path(tree: SpanningTree, v: GInt) -> list[GInt]:
    """The root-to-``v`` path, read off the parent map."""
    chain = [v]
    seen = {v}
    while chain[-1] != tree.root:
        nxt = tree.parent[chain[-1]]
        if nxt in seen:
            raise ValueError(f"parent map has a cycle through {nxt}")
        seen.add(nxt)
        chain.append(nxt)
    return chain[::-1]


def paths_from_edges(edges: Iterable[Edge], root: GInt) -> dict[GInt, list[GInt]]:
    """Root-to-node paths found by BFS over an edge set (tree assumed)."""
    adj = _adjacency(edges)
    paths = {root: [root]}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in paths:
                paths[y] = paths[x] + [y]
                queue.append(y)
    return paths


def _edges_of(tree: SpanningTree, net: Network) -> set[Edge]:
    return {net.edge(c, p) for c, p in tree.parent.items()}


@dataclass
class IndependenceReport:
    ok: bool
    # (v, shared intermediate node) pairs
    witnesses: list[tuple[GInt, GInt]] = field(default_factory=list)


def check_node_independence(t1: SpanningTree, t2: SpanningTree) -> IndependenceReport:
    if t1.root != t2.root or t1.k != t2.k:
        raise ValueError("trees must share root and network")
    net = build_network(t1.k)
    root = t1.root
    p1 = paths_from_edges(_edges_of(t1, net), root)
    p2 = paths_from_edges(_edges_of(t2, net), root)
    witnesses = []
    for v in _sorted_nodes(net.nodes):
        if v == root:
            continue
        if v not in p1 or v not in p2:
            witnesses.append((v, v))
            continue
        shared = set(p1[v]) & set(p2[v])
        for x in _sorted_nodes(shared - {root, v}):
            witnesses.append((v, x))
    return IndependenceReport(not witnesses, witnesses)


@dataclass
class DisjointnessReport:
    shared_edges: list[Edge]
    leftover_edges: list[Edge]

    @property
    def ok(self) -> bool:
        return not self.shared_edges


def edge_disjointness(
    t1: SpanningTree | Subgraph, t2: SpanningTree | Subgraph, net: Network | None = None
) -> DisjointnessReport:
    def edges(t):
        if isinstance(t, Subgraph):
            return set(t.edges)
        return _edges_of(t, net or build_network(t.k))

    if net is None:
        net = build_network(t1.k if isinstance(t1, SpanningTree) else t2.k)
    e1, e2 = edges(t1), edges(t2)
    shared = sorted(e1 & e2, key=_edge_key)
    leftover = sorted(set(net.edges) - e1 - e2, key=_edge_key)
    return DisjointnessReport(shared, leftover)


def depth(tree: SpanningTree) -> int:
    return max(len(tree_path(tree, v)) - 1 for v in tree.nodes)


# -- lemma checks -----------------------------------------------------------


def path_components(sub: Subgraph) -> list[list[GInt]]:
    """Split a disjoint union of simple paths into node sequences.

    Raises ``ValueError`` if some component is not a simple path.
    """
    adj = _adjacency(sub.edges)
    seen: set[GInt] = set()
    paths = []
    for start in _sorted_nodes(adj):
        if start in seen:
            continue
        comp = _reach(adj, start)
        ends = [v for v in comp if len(adj[v]) == 1]
        if any(len(adj[v]) > 2 for v in comp) or len(ends) != 2:
            raise ValueError(f"component through {start} is not a simple path")
        seq = [min(ends, key=node_sort_key)]
        prev = None
        while len(seq) < len(comp):
            nxt = [y for y in adj[seq[-1]] if y != prev]
            prev = seq[-1]
            seq.append(nxt[0])
        seen |= comp
        paths.append(seq)
    return paths


def axis_paths(net: Network, axis: Axis, max_len: int) -> list[tuple[GInt, ...]]:
    """Every straight path (all steps along one axis) of length 1..``max_len``.

    A path and its reversal are reported once; walks that revisit a node are
    skipped.
    """
    step = UNIT_STEPS[0] if axis is Axis.HORIZONTAL else UNIT_STEPS[2]
    out = []
    for v in net.nodes:
        seq = [v]
        for _ in range(max_len):
            nxt = net.step(seq[-1], step)
            if nxt in seq:
                break
            seq.append(nxt)
            out.append(tuple(seq))
    return out


def check_hor_vert(net: Network) -> list[tuple[tuple[GInt, ...], tuple[GInt, ...]]]:
    """Horizontal/vertical path pairs (length <= k+1) violating the two-common-node bound.

    Two common nodes are allowed only when one path has length ``k + 1`` and
    the common nodes are exactly its two ends.
    """
    k = net.k
    hs = axis_paths(net, Axis.HORIZONTAL, k + 1)
    vs = axis_paths(net, Axis.VERTICAL, k + 1)
    by_node: dict[GInt, list[int]] = {}
    for j, p in enumerate(vs):
        for x in p:
            by_node.setdefault(x, []).append(j)
    bad = []
    for h in hs:
        candidates = {j for x in h for j in by_node.get(x, ())}
        hset = set(h)
        for j in candidates:
            v = vs[j]
            common = hset.intersection(v)
            if len(common) <= 1:
                continue
            ok = len(common) == 2 and any(
                len(p) - 1 == k + 1 and common == {p[0], p[-1]} for p in (h, v)
            )
            if not ok:
                bad.append((h, v))
    return bad


@dataclass
class LemmaReport:
    k: int
    hb_max: int
    hr_max: int
    hb_horizontal: bool
    hr_horizontal: bool
    rho_hb_max: int
    rho_hr_max: int
    rho_vertical: bool
    hor_vert_violations: list = field(default_factory=list)
    edge_bound: tuple[int, int] = (0, 0)

    @property
    def ok(self) -> bool:
        k = self.k
        return (
            self.hb_max <= k
            and self.hr_max <= k + 1
            and self.rho_hb_max <= k
            and self.rho_hr_max <= k + 1
            and self.hb_horizontal
            and self.hr_horizontal
            and self.rho_vertical
            and not self.hor_vert_violations
            and self.edge_bound[0] < self.edge_bound[1]
        )


def _longest(sub: Subgraph) -> int:
    return max((len(p) - 1 for p in path_components(sub)), default=0)


def check_lemmas(k: int, hor_vert: bool = True) -> LemmaReport:
    """Check the path-length, axis-intersection and tree-count bounds for ``G_k``."""
    net = build_network(k)
    hb, hr = h_subgraphs(k)
    rhb, rhr = hb.image(net, rho), hr.image(net, rho)
    report = LemmaReport(
        k=k,
        hb_max=_longest(hb),
        hr_max=_longest(hr),
        hb_horizontal=all(e.axis is Axis.HORIZONTAL for e in hb.edges),
        hr_horizontal=all(e.axis is Axis.HORIZONTAL for e in hr.edges),
        rho_hb_max=_longest(rhb),
        rho_hr_max=_longest(rhr),
        rho_vertical=all(e.axis is Axis.VERTICAL for e in rhb.edges | rhr.edges),
        # three edge-disjoint spanning trees would need 3(|V|-1) edges
        edge_bound=(len(net.edges), 3 * (len(net.nodes) - 1)),
    )
    if hor_vert:
        report.hor_vert_violations = check_hor_vert(net)
    return report


# -- suite ------------------------------------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def reattach_leaf(tree: SpanningTree, donor: SpanningTree) -> SpanningTree:
    """Sabotage helper: move the first leaf of ``tree`` under its parent in ``donor``.

    The result is still a spanning tree, but it shares an edge with ``donor``
    and the moved leaf loses node-independence.
    """
    kids = tree.children()
    for c in _sorted_nodes(tree.parent):
        p = donor.parent.get(c)
        if not kids[c] and p is not None and p != donor.root and p != tree.parent[c]:
            parent = dict(tree.parent)
            parent[c] = p
            return SpanningTree(tree.kind, tree.root, parent, tree.k)
    raise ValueError("no leaf can be re-attached")


def _fmt(items) -> str:
    return "[" + ", ".join(str(x) if not isinstance(x, tuple) else "(" + ", ".join(map(str, x)) + ")" for x in items) + "]"


def run_suite(
    k: int,
    black: SpanningTree | None = None,
    red: SpanningTree | None = None,
    red_prime: SpanningTree | None = None,
    hor_vert_max_k: int = 8,
) -> list[Check]:
    """Every checkable claim for ``G_k``, one :class:`Check` per property."""
    from .trees import (
        black_components,
        build_tree,
        component_A,
        component_B,
        component_WB,
        component_WR,
        red_components,
    )

    net = build_network(k)
    black = black or build_tree(k, "black")
    red = red or build_tree(k, "red")
    red_prime = red_prime or build_tree(k, "redprime")
    n_nodes, n_edges, tree_size = 2 * k * k + 2 * k + 1, 4 * k * k + 4 * k + 2, 2 * k * k + 2 * k
    checks = []

    def add(name, ok, detail=""):
        checks.append(Check(name, bool(ok), "" if ok else detail))

    add("nodes", len(net.nodes) == n_nodes, f"{len(net.nodes)} != {n_nodes}")
    add("edges", len(net.edges) == n_edges, f"{len(net.edges)} != {n_edges}")
    add("4-regular", all(len(set(net.neighbors(v))) == 4 for v in net.nodes))
    sizes = (len(component_A(k)), len(component_B(k)), len(component_WB(k)), len(component_WR(k)))
    expect = (k * (k - 1) // 2, k, k, k)
    add("component sizes", sizes == expect, f"{sizes} != {expect}")
    for label, comps in (("black", black_components(k)), ("red", red_components(k))):
        cover = set().union(*(c.vertices for c in comps.values()))
        add(f"{label} components cover V", cover == set(net.nodes))
    trees = {"B": black, "R": red, "R'": red_prime}
    for label, t in trees.items():
        sub = Subgraph(frozenset(t.nodes), frozenset(_edges_of(t, net)))
        add(f"{label} spanning tree", is_spanning_tree(net, sub) and len(sub.edges) == tree_size)
    for other, expected in (
        ("R'", {(GInt(-k, 0), GInt(0, -k)), (GInt(k, 0), GInt(0, k))}),
        ("R", {(GInt(-k, 0), GInt(0, -k)), (GInt(k, 0), GInt(0, -k))}),
    ):
        rep = edge_disjointness(black, trees[other], net)
        add(f"B/{other} edge-disjoint", rep.ok, "shared " + _fmt(rep.shared_edges))
        want = {net.edge(u, v) for u, v in expected}
        add(f"B/{other} leftover edges", set(rep.leftover_edges) == want, "got " + _fmt(rep.leftover_edges))
    ind = check_node_independence(black, red_prime)
    add("B/R' node-independent", ind.ok, "witnesses " + _fmt(ind.witnesses))
    if k >= 2:
        ind = check_node_independence(black, red)
        add("B/R node-independent", ind.ok, "witnesses " + _fmt(ind.witnesses))
    depths = {label: depth(t) for label, t in trees.items()}
    want_depth = {"B": 2 * k, "R": 3 if k == 1 else 2 * k, "R'": 2 * k}
    add("depths", depths == want_depth, f"{depths} != {want_depth}")
    lem = check_lemmas(k, hor_vert=k <= hor_vert_max_k)
    add("H^B paths horizontal, <= k", lem.hb_horizontal and lem.hb_max <= k, f"max {lem.hb_max}")
    add("H^R paths horizontal, <= k+1", lem.hr_horizontal and lem.hr_max <= k + 1, f"max {lem.hr_max}")
    add("rho(H) paths vertical, bounded", lem.rho_vertical and lem.rho_hb_max <= k and lem.rho_hr_max <= k + 1)
    if k <= hor_vert_max_k:
        add("horizontal/vertical intersections", not lem.hor_vert_violations,
            f"{len(lem.hor_vert_violations)} violating pairs")
    add("at most two edge-disjoint spanning trees", lem.edge_bound[0] < lem.edge_bound[1], str(lem.edge_bound))
    add("diameter = k", net.diameter() == k)
    add("circulant isomorphism", net.verify_circulant_iso())
    return checks

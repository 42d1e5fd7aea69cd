"""Deterministic JSON and Graphviz DOT output for networks and trees."""

from __future__ import annotations

import json
from typing import Iterable

from .gaussian import GInt
from .network import Edge, Network, build_network, node_sort_key
from .trees import SpanningTree, TreeKind, build_tree, tree_edges

__all__ = [
    "EXPORTABLE",
    "network_to_dict",
    "network_from_dict",
    "tree_to_dict",
    "export_dict",
    "to_json",
    "to_dot",
]

EXPORTABLE = ("network", "black", "red", "redprime", "both")
_COLORS = {TreeKind.BLACK: "black", TreeKind.RED: "red", TreeKind.RED_PRIME: "red"}


def _pt(v: GInt) -> list[int]:
    return [v.re, v.im]


def _sorted_edges(edges: Iterable[Edge], net: Network) -> list[Edge]:
    rank = {v: i for i, v in enumerate(net.nodes)}
    return sorted(edges, key=lambda e: (rank[e.u], rank[e.v]))


def _edge_list(edges: Iterable[Edge], net: Network) -> list[list[list[int]]]:
    return [[_pt(e.u), _pt(e.v)] for e in _sorted_edges(edges, net)]


def network_to_dict(net: Network) -> dict:
    return {
        "k": net.k,
        "n": net.n,
        "nodes": [_pt(v) for v in net.nodes],
        "edges": _edge_list(net.edges, net),
    }


def network_from_dict(data: dict) -> Network:
    """Rebuild ``G_k`` from its JSON form, checking nodes and edges match."""
    net = build_network(int(data["k"]))
    nodes = [GInt(a, b) for a, b in data["nodes"]]
    edges = {frozenset((GInt(*u), GInt(*v))) for u, v in data["edges"]}
    if nodes != list(net.nodes) or edges != {e.endpoints for e in net.edges}:
        raise ValueError("JSON does not describe G_k for the stated k")
    if data.get("n", net.n) != net.n:
        raise ValueError("node count mismatch")
    return net


def tree_to_dict(tree: SpanningTree) -> dict:
    net = build_network(tree.k)
    return {
        "k": tree.k,
        "kind": tree.kind.value,
        "root": _pt(tree.root),
        "edges": _edge_list(tree_edges(tree, net), net),
        "parent": [
            [_pt(c), _pt(tree.parent[c])]
            for c in sorted(tree.parent, key=node_sort_key)
        ],
    }


def _pair(k: int) -> tuple[SpanningTree, SpanningTree, list[Edge]]:
    net = build_network(k)
    black = build_tree(k, TreeKind.BLACK)
    red = build_tree(k, TreeKind.RED_PRIME)
    used = tree_edges(black, net) | tree_edges(red, net)
    return black, red, [e for e in net.edges if e not in used]


def export_dict(k: int, what: str) -> dict:
    net = build_network(k)
    if what == "network":
        return network_to_dict(net)
    if what == "both":
        black, red, leftover = _pair(k)
        return {
            "k": k,
            "n": net.n,
            "black": tree_to_dict(black),
            "redprime": tree_to_dict(red),
            "leftover": _edge_list(leftover, net),
        }
    if what in ("black", "red", "redprime"):
        return tree_to_dict(build_tree(k, what))
    raise ValueError(f"unknown export selection {what!r}")


def to_json(data: dict) -> str:
    return json.dumps(data, indent=1) + "\n"


def _dot_id(v: GInt) -> str:
    return f'"{v.re},{v.im}"'


def to_dot(k: int, what: str) -> str:
    """Graphviz source with every node pinned at ``pos="a,b!"``.

    Render with ``neato -n`` (or ``neato`` honouring the ``!`` pins).
    """
    net = build_network(k)
    styled: list[tuple[Edge, str]] = []
    if what == "network":
        styled = [(e, 'color=gray40' + (", style=dotted" if e.wrap else "")) for e in net.edges]
    elif what == "both":
        black, red, leftover = _pair(k)
        styled = [(e, "color=black") for e in tree_edges(black, net)]
        styled += [(e, "color=red") for e in tree_edges(red, net)]
        styled += [(e, "color=gray40, style=dashed") for e in leftover]
    elif what in ("black", "red", "redprime"):
        tree = build_tree(k, what)
        styled = [(e, f"color={_COLORS[tree.kind]}") for e in tree_edges(tree, net)]
    else:
        raise ValueError(f"unknown export selection {what!r}")
    rank = {v: i for i, v in enumerate(net.nodes)}
    styled.sort(key=lambda p: (rank[p[0].u], rank[p[0].v]))
    name = {"network": "G", "black": "B", "red": "R", "redprime": "Rp", "both": "BRp"}[what]
    lines = [
        f"graph {name}_{k} {{",
        "  graph [splines=true, outputorder=edgesfirst];",
        "  node [shape=circle, fixedsize=true, width=0.45, fontsize=9];",
    ]
    for v in net.nodes:
        lines.append(f'  {_dot_id(v)} [label="{v}", pos="{v.re},{v.im}!"];')
    for e, attrs in styled:
        lines.append(f"  {_dot_id(e.u)} -- {_dot_id(e.v)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

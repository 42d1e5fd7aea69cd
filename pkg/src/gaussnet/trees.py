"""Component subgraphs and the black / red spanning trees of ``G_k``.

The black tree ``B_k`` and red tree ``R_k`` are unions of eight components
each, obtained from four seed subgraphs (``A``, ``B``, ``W^B``, ``W^R``) by
quarter turns and reflections.  ``R'_k`` moves the leaf ``k`` from ``ki`` to
``-ki``.  All trees are rooted at 0; :func:`rebase` moves them to any node.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .gaussian import GInt
from .network import Edge, Network, build_network
from .symmetry import as_map, translate

__all__ = [
    "ConstructionError",
    "TreeKind",
    "Subgraph",
    "SpanningTree",
    "component_A",
    "component_B",
    "component_WB",
    "component_WR",
    "black_components",
    "red_components",
    "build_black",
    "build_red",
    "build_red_prime",
    "h_subgraphs",
    "to_rooted",
    "rebase",
    "tree_edges",
    "build_tree",
]

ZERO = GInt(0, 0)


class ConstructionError(ValueError):
    """A subgraph cannot be assembled or oriented as requested."""


class TreeKind(enum.Enum):
    BLACK = "black"
    RED = "red"
    RED_PRIME = "redprime"


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset[GInt]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for e in self.edges:
            if e.u not in self.vertices or e.v not in self.vertices:
                raise ConstructionError(f"edge {e} has an endpoint outside the vertex set")

    @classmethod
    def from_pairs(
        cls, net: Network, pairs: Iterable[tuple[GInt, GInt]], vertices: Iterable[GInt] = ()
    ) -> Subgraph:
        edges = net.edges_from(pairs)
        verts = set(vertices)
        for e in edges:
            verts.update(e)
        return cls(frozenset(verts), edges)

    def image(self, net: Network, f: Callable[[GInt], GInt]) -> Subgraph:
        """Map vertices and edges through the automorphism ``f``."""
        return Subgraph(
            frozenset(f(v) for v in self.vertices),
            frozenset(net.edge(f(e.u), f(e.v)) for e in self.edges),
        )

    def degree(self, v: GInt) -> int:
        return sum(1 for e in self.edges if v in (e.u, e.v))

    def __len__(self) -> int:
        return len(self.edges)


def union(named: Mapping[str, Subgraph]) -> Subgraph:
    """Union of pairwise edge-disjoint components; overlap is a construction bug."""
    vertices: set[GInt] = set()
    edges: dict[Edge, str] = {}
    for name, part in named.items():
        vertices |= part.vertices
        for e in part.edges:
            if e in edges:
                raise ConstructionError(f"edge {e} appears in both {edges[e]} and {name}")
            edges[e] = name
    return Subgraph(frozenset(vertices), frozenset(edges))


# -- seed components --------------------------------------------------------


def component_A(k: int) -> Subgraph:
    """The array graph: all horizontal unit steps in the open first-quadrant triangle."""
    net = build_network(k)
    vertices = [
        GInt(a, b) for a in range(0, k) for b in range(1, k + 1) if a + b <= k
    ]
    pairs = [
        (GInt(a, b), GInt(a + 1, b))
        for a in range(0, k - 1)
        for b in range(1, k)
        if a + b <= k - 1
    ]
    return Subgraph.from_pairs(net, pairs, vertices)


def component_B(k: int) -> Subgraph:
    """The baseline ``0 - 1 - ... - k`` on the positive real axis."""
    net = build_network(k)
    return Subgraph.from_pairs(
        net, [(GInt(a, 0), GInt(a + 1, 0)) for a in range(k)], [GInt(a, 0) for a in range(k + 1)]
    )


def component_WB(k: int) -> Subgraph:
    """Black wrap edges ``a+bi -> -(b-1) + (-1-a)i`` on the upper-right boundary."""
    net = build_network(k)
    pairs = [(GInt(a, k - a), GInt(-(k - a - 1), -1 - a)) for a in range(0, k)]
    return Subgraph.from_pairs(net, pairs)


def component_WR(k: int) -> Subgraph:
    """Red wrap edges ``a+bi -> b+ai`` on the lower-right boundary (``a - b = k``)."""
    net = build_network(k)
    pairs = [(GInt(a, a - k), GInt(a - k, a)) for a in range(1, k + 1)]
    return Subgraph.from_pairs(net, pairs)


def _images(k: int, spec: Iterable[tuple[str, str, Subgraph]]) -> dict[str, Subgraph]:
    net = build_network(k)
    return {name: seed.image(net, as_map(word)) for name, word, seed in spec}


def black_components(k: int) -> dict[str, Subgraph]:
    A, B, WB = component_A(k), component_B(k), component_WB(k)
    return _images(
        k,
        [
            ("A", "", A),
            ("ρ(A)", "ρ", A),
            ("ρ²(A)", "ρ²", A),
            ("ρ³(A)", "ρ³", A),
            ("B", "", B),
            ("ρ(B)", "ρ", B),
            ("W^B", "", WB),
            ("ρ(W^B)", "ρ", WB),
        ],
    )


def red_components(k: int) -> dict[str, Subgraph]:
    A, B, WR = component_A(k), component_B(k), component_WR(k)
    return _images(
        k,
        [
            ("σ(A)", "σ", A),
            ("ρσ(A)", "ρσ", A),
            ("ρ²σ(A)", "ρ²σ", A),
            ("ρ³σ(A)", "ρ³σ", A),
            ("σ(B)", "σ", B),
            ("σρ(B)", "σρ", B),
            ("W^R", "", WR),
            ("ρ(W^R)", "ρ", WR),
        ],
    )


def build_black(k: int) -> Subgraph:
    return union(black_components(k))


def build_red(k: int) -> Subgraph:
    return union(red_components(k))


def build_red_prime(k: int) -> Subgraph:
    """``R_k`` with the leaf ``k`` re-attached from ``ki`` to ``-ki``."""
    net = build_network(k)
    red = build_red(k)
    old = net.edge(GInt(k, 0), GInt(0, k))
    if old not in red.edges:
        raise ConstructionError(f"edge {old} missing from R_{k}")
    if not net.has_edge(GInt(k, 0), GInt(0, -k)):
        raise ConstructionError(f"(k, -ki) is not an edge of G_{k}")
    new = net.edge(GInt(k, 0), GInt(0, -k))
    return Subgraph(red.vertices, (red.edges - {old}) | {new})


def h_subgraphs(k: int) -> tuple[Subgraph, Subgraph]:
    """``H^B = A ∪ W^B ∪ ρ²(A)`` and ``H^R = ρσ(A) ∪ W^R ∪ ρ³σ(A)``."""
    black, red = black_components(k), red_components(k)
    hb = union({n: black[n] for n in ("A", "W^B", "ρ²(A)")})
    hr = union({n: red[n] for n in ("ρσ(A)", "W^R", "ρ³σ(A)")})
    return hb, hr


# -- rooted trees -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpanningTree:
    """A rooted spanning tree of ``G_k`` stored as a child -> parent map."""

    kind: TreeKind
    root: GInt
    parent: Mapping[GInt, GInt]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "parent", MappingProxyType(dict(self.parent)))

    @property
    def nodes(self) -> frozenset[GInt]:
        return frozenset(self.parent) | {self.root}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return (self.kind, self.root, self.k, dict(self.parent)) == (
            other.kind,
            other.root,
            other.k,
            dict(other.parent),
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.root, self.k, frozenset(self.parent.items())))

    def path_to_root(self, v: GInt) -> list[GInt]:
        chain = [v]
        while chain[-1] != self.root:
            chain.append(self.parent[chain[-1]])
        return chain

    def children(self) -> dict[GInt, list[GInt]]:
        out: dict[GInt, list[GInt]] = {v: [] for v in self.nodes}
        for child, par in self.parent.items():
            out[par].append(child)
        return out


def to_rooted(sub: Subgraph, root: GInt = ZERO, kind: TreeKind = TreeKind.BLACK, k: int | None = None) -> SpanningTree:
    """Orient a tree subgraph toward ``root`` by breadth-first search."""
    if root not in sub.vertices:
        raise ConstructionError(f"root {root} not in subgraph")
    if len(sub.edges) != len(sub.vertices) - 1:
        raise ConstructionError(
            f"{len(sub.edges)} edges on {len(sub.vertices)} vertices cannot form a tree"
        )
    adj: dict[GInt, list[GInt]] = {v: [] for v in sub.vertices}
    for e in sub.edges:
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    parent: dict[GInt, GInt] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                queue.append(y)
    if len(seen) != len(sub.vertices):
        raise ConstructionError("subgraph is disconnected")
    if k is None:
        k = max(v.lee_weight for v in sub.vertices)
    return SpanningTree(kind, root, parent, k)


_BUILDERS = {
    TreeKind.BLACK: build_black,
    TreeKind.RED: build_red,
    TreeKind.RED_PRIME: build_red_prime,
}


def build_tree(k: int, kind: TreeKind | str, root: GInt = ZERO) -> SpanningTree:
    """Build ``B_k``, ``R_k`` or ``R'_k`` as a rooted tree, optionally rebased to ``root``."""
    kind = TreeKind(kind)
    tree = to_rooted(_BUILDERS[kind](k), ZERO, kind, k)
    return tree if root == ZERO else rebase(tree, root)


def rebase(tree: SpanningTree, new_root: GInt) -> SpanningTree:
    """Translate a tree rooted at 0 so that it is rooted at ``new_root``."""
    if tree.root != ZERO:
        raise ValueError("rebase expects a tree rooted at 0")
    k = tree.k
    parent = {
        translate(child, new_root, k): translate(par, new_root, k)
        for child, par in tree.parent.items()
    }
    return SpanningTree(tree.kind, translate(ZERO, new_root, k), parent, k)


def tree_edges(tree: SpanningTree, net: Network | None = None) -> frozenset[Edge]:
    net = net or build_network(tree.k)
    return frozenset(net.edge(c, p) for c, p in tree.parent.items())

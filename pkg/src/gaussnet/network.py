"""The dense Gaussian network ``G_k`` and its distance structure."""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

from .gaussian import DenseModulus, GInt, canonical_mod, diamond

__all__ = [
    "Axis",
    "Edge",
    "Network",
    "UNIT_STEPS",
    "build_network",
    "node_sort_key",
]

# fixed neighbour order: +1, -1, +i, -i
UNIT_STEPS: tuple[GInt, ...] = (GInt(1, 0), GInt(-1, 0), GInt(0, 1), GInt(0, -1))


class Axis(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


def node_sort_key(v: GInt) -> tuple[int, int]:
    """Serialization order: rows top to bottom, then left to right."""
    return (-v.im, v.re)


def _endpoint_key(v: GInt) -> tuple[int, int]:
    return (v.im, v.re)


@dataclass(frozen=True, slots=True)
class Edge:
    """An undirected edge; ``u`` precedes ``v`` in ``(im, re)`` order."""

    u: GInt
    v: GInt
    axis: Axis = field(compare=False)
    wrap: bool = field(compare=False)

    def __post_init__(self) -> None:
        if _endpoint_key(self.u) > _endpoint_key(self.v):
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    @property
    def endpoints(self) -> frozenset[GInt]:
        return frozenset((self.u, self.v))

    def other(self, x: GInt) -> GInt:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __iter__(self):
        yield self.u
        yield self.v

    def __str__(self) -> str:
        return f"({self.u}, {self.v})"


class Network:
    """The graph ``G_k`` on the canonical diamond.

    Build instances with :func:`build_network`, which caches them; a network
    is never mutated after construction.
    """

    def __init__(self, k: int) -> None:
        self.modulus = DenseModulus(k)
        self.k = k
        self.nodes: tuple[GInt, ...] = tuple(sorted(diamond(k), key=node_sort_key))
        self._node_set = frozenset(self.nodes)
        self._adj: dict[GInt, tuple[GInt, ...]] = {
            v: tuple(canonical_mod(v + d, self.modulus) for d in UNIT_STEPS)
            for v in self.nodes
        }
        edges: dict[frozenset[GInt], Edge] = {}
        for v in self.nodes:
            for w in self._adj[v]:
                key = frozenset((v, w))
                if key not in edges:
                    edges[key] = self._make_edge(v, w)
        self._edges = edges
        rank = {v: i for i, v in enumerate(self.nodes)}
        self.edges: tuple[Edge, ...] = tuple(
            sorted(edges.values(), key=lambda e: (rank[e.u], rank[e.v]))
        )

    def __repr__(self) -> str:
        return f"Network(k={self.k}, n={self.n})"

    @property
    def n(self) -> int:
        return self.modulus.n

    def __contains__(self, v: object) -> bool:
        return v in self._node_set

    def __len__(self) -> int:
        return len(self.nodes)

    def reduce(self, g: GInt) -> GInt:
        return canonical_mod(g, self.modulus)

    def _check(self, v: GInt) -> None:
        if v not in self._node_set:
            raise ValueError(f"{v} is not a node of G_{self.k} (|re|+|im| must be <= {self.k})")

    def _make_edge(self, u: GInt, v: GInt) -> Edge:
        diff = canonical_mod(u - v, self.modulus)
        if diff.im == 0 and abs(diff.re) == 1:
            axis = Axis.HORIZONTAL
        elif diff.re == 0 and abs(diff.im) == 1:
            axis = Axis.VERTICAL
        else:
            raise ValueError(f"{u} and {v} are not adjacent in G_{self.k}")
        return Edge(u, v, axis, (u - v).lee_weight != 1)

    def neighbors(self, v: GInt) -> tuple[GInt, ...]:
        """The images of ``v`` under the steps ``+1, -1, +i, -i`` in that order."""
        self._check(v)
        return self._adj[v]

    def step(self, v: GInt, delta: GInt) -> GInt:
        return canonical_mod(v + delta, self.modulus)

    def has_edge(self, u: GInt, v: GInt) -> bool:
        return frozenset((u, v)) in self._edges

    def edge(self, u: GInt, v: GInt) -> Edge:
        """Return the stored edge joining ``u`` and ``v``."""
        try:
            return self._edges[frozenset((u, v))]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an edge of G_{self.k}") from None

    def classify_edge(self, u: GInt, v: GInt) -> tuple[Axis, bool]:
        e = self.edge(u, v)
        return e.axis, e.wrap

    def edges_from(self, pairs: Iterable[tuple[GInt, GInt]]) -> frozenset[Edge]:
        return frozenset(self.edge(u, v) for u, v in pairs)

    # -- distances ---------------------------------------------------------

    def bfs_distances(self, source: GInt) -> dict[GInt, int]:
        self._check(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def bfs_distance(self, u: GInt, v: GInt) -> int:
        self._check(v)
        return self.bfs_distances(u)[v]

    def diameter(self, exhaustive: bool = False) -> int:
        """Graph diameter.

        By default only distances from node 0 are scanned, which suffices
        because translations act transitively on the nodes.  ``exhaustive``
        runs BFS from every node.
        """
        sources = self.nodes if exhaustive else (GInt(0, 0),)
        return max(max(self.bfs_distances(s).values()) for s in sources)

    def distance_histogram(self) -> dict[int, int]:
        counts = Counter(self.bfs_distances(GInt(0, 0)).values())
        return dict(sorted(counts.items()))

    # -- circulant correspondence -----------------------------------------

    def to_circulant_label(self, v: GInt) -> int:
        """Label in ``C_N(k, k+1)``: ``(k*re + (k+1)*im) mod N``."""
        return (self.k * v.re + (self.k + 1) * v.im) % self.n

    @cached_property
    def circulant_jumps(self) -> tuple[int, int]:
        return (self.k, self.k + 1)

    def verify_circulant_iso(self) -> bool:
        """Check that the labelling is a bijection carrying ``E(G_k)`` onto ``E(C_N(k, k+1))``."""
        n = self.n
        labels = {v: self.to_circulant_label(v) for v in self.nodes}
        if sorted(labels.values()) != list(range(n)):
            return False
        image = {frozenset((labels[e.u], labels[e.v])) for e in self.edges}
        circulant = {
            frozenset((x, (x + j) % n))
            for x in range(n)
            for j in self.circulant_jumps
        }
        return image == circulant


@lru_cache(maxsize=64)
def build_network(k: int) -> Network:
    """Construct (and cache) ``G_k`` for ``k >= 1``."""
    if type(k) is not int or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return Network(k)

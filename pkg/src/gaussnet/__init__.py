"""Dense Gaussian networks and their pair of edge-disjoint node-independent spanning trees."""

from .gaussian import DenseModulus, GInt, canonical_mod, diamond, norm
from .network import Axis, Edge, Network, build_network
from .protocols import DeliveryReport, FaultSpec, ft_broadcast, ft_unicast, secure_split_send
from .router import (
    Direction,
    HopLimitExceeded,
    MessageHeader,
    SelfRouteError,
    simulate_route,
    source_route,
    transit_step,
)
from .symmetry import apply, rho, sigma, translate
from .trees import (
    SpanningTree,
    Subgraph,
    TreeKind,
    build_black,
    build_red,
    build_red_prime,
    build_tree,
    rebase,
    to_rooted,
)
from .verifier import check_node_independence, depth, edge_disjointness, is_spanning_tree, tree_path

__version__ = "0.1.0"

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussnet.gaussian import GInt as G
from gaussnet.network import build_network
from gaussnet.router import (
    Accept,
    Direction,
    Forward,
    HopLimitExceeded,
    MessageHeader,
    RoutingError,
    SelfRouteError,
    simulate_route,
    source_route,
    trace_route,
    transit_step,
)
from gaussnet.trees import TreeKind, build_tree

from oracles import brute_mod, red_prime_pairs, black_pairs, tree_paths, translate_path

ZERO = G(0, 0)


@pytest.mark.parametrize(
    ("d", "kind", "direction"),
    [
        (G(1, 1), "black", Direction.N),
        (G(1, 1), "redprime", Direction.W),
        (G(-2, 0), "black", Direction.E),
        (G(1, -1), "black", Direction.E),
        (G(1, -1), "redprime", Direction.S),
        (G(-1, 0), "redprime", Direction.W),
        (G(0, -1), "black", Direction.N),
        (G(0, -1), "redprime", Direction.S),
    ],
)
def test_source_table(d, kind, direction):
    hdr = source_route(2, ZERO, d, kind)
    assert hdr.dir is direction
    assert hdr.mapped_dest == d and hdr.hops == 0 and hdr.source == ZERO


def test_source_maps_destination():
    hdr = source_route(2, G(2, 0), G(1, 0), "black")
    assert hdr.mapped_dest == G(-1, 0)
    hdr = source_route(2, G(1, 0), G(0, 2), "black")
    assert hdr.mapped_dest.astuple() == brute_mod((-1, 2), 2)


def test_self_route():
    with pytest.raises(SelfRouteError):
        source_route(2, ZERO, ZERO, "black")
    with pytest.raises(SelfRouteError):
        simulate_route(build_network(3), G(1, 1), G(1, 1), "redprime")


def test_red_tree_has_no_tables():
    with pytest.raises(ValueError):
        source_route(2, ZERO, G(1, 0), TreeKind.RED)


def test_corner_destinations_patched():
    assert source_route(2, ZERO, G(2, 0), "redprime").dir is Direction.S
    assert source_route(2, ZERO, G(0, 2), "redprime").dir is Direction.W
    assert source_route(2, ZERO, G(2, 0), "redprime", patch_corners=False).dir is Direction.W
    assert source_route(2, ZERO, G(0, 2), "redprime", patch_corners=False).dir is Direction.S


def test_transit_examples():
    hdr = MessageHeader(ZERO, G(1, 1), Direction.N, 1)
    assert transit_step(2, hdr, G(0, 1), "black") == Forward(
        MessageHeader(ZERO, G(1, 1), Direction.E, 2), G(1, 1)
    )
    hdr = MessageHeader(ZERO, G(1, 1), Direction.W, 1)
    assert transit_step(2, hdr, G(-1, 0), "redprime") == Forward(
        MessageHeader(ZERO, G(1, 1), Direction.S, 2), G(-1, -1)
    )
    hdr = MessageHeader(ZERO, G(-2, 0), Direction.E, 1)
    assert transit_step(2, hdr, G(1, 0), "black") == Forward(
        MessageHeader(ZERO, G(-2, 0), Direction.S, 2), G(1, -1)
    )
    assert transit_step(2, MessageHeader(ZERO, G(1, 1), Direction.E, 2), G(1, 1), "black") == Accept(G(1, 1))


def test_transit_default_keeps_direction():
    hdr = MessageHeader(ZERO, G(2, 0), Direction.E, 1)
    assert transit_step(2, hdr, G(1, 0), "black") == Forward(
        MessageHeader(ZERO, G(2, 0), Direction.E, 2), G(2, 0)
    )


def test_hop_limit():
    hdr = MessageHeader(ZERO, G(1, 1), Direction.S, 4)
    with pytest.raises(HopLimitExceeded):
        transit_step(2, hdr, G(0, -1), "black")
    with pytest.raises(HopLimitExceeded):
        simulate_route(build_network(2), ZERO, G(2, 0), "redprime", patch_corners=False)


def test_transit_refuses_source():
    with pytest.raises(RoutingError):
        transit_step(2, MessageHeader(ZERO, G(1, 1), Direction.N, 1), ZERO, "black")


def test_simulate_examples():
    net = build_network(2)
    assert simulate_route(net, ZERO, G(1, 1), "black") == [ZERO, G(0, 1), G(1, 1)]
    assert simulate_route(net, ZERO, G(1, 1), "redprime") == [ZERO, G(-1, 0), G(-1, -1), G(1, 1)]
    assert simulate_route(net, ZERO, G(-2, 0), "black") == [ZERO, G(1, 0), G(1, -1), G(-2, 0)]


def test_trace_headers():
    trace = trace_route(build_network(2), ZERO, G(1, 1), "black")
    assert [h.as_tuple() for _, h in trace] == [(0, 0, 1, 1, 2, 0), (0, 0, 1, 1, 2, 1), (0, 0, 1, 1, 0, 2)]


@pytest.mark.parametrize("k", range(1, 5))
def test_routes_equal_rebased_tree_paths(k):
    net = build_network(k)
    paths = {"black": tree_paths(black_pairs(k)), "redprime": tree_paths(red_prime_pairs(k))}
    for s in net.nodes:
        for d in net.nodes:
            if s == d:
                continue
            dm = brute_mod((d - s).astuple(), k)
            routes = {}
            for kind, p in paths.items():
                route = [v.astuple() for v in simulate_route(net, s, d, kind)]
                assert route == translate_path(p[dm], s.astuple(), k)
                assert len(route) - 1 <= 2 * k
                routes[kind] = route
            assert set(routes["black"]) & set(routes["redprime"]) == {s.astuple(), d.astuple()}


@pytest.mark.parametrize("k", range(1, 6))
def test_literal_tables_fail_only_on_corners(k):
    net = build_network(k)
    failing = set()
    for s in net.nodes:
        for d in net.nodes:
            if s == d:
                continue
            for kind in ("black", "redprime"):
                expected = simulate_route(net, s, d, kind)
                try:
                    got = simulate_route(net, s, d, kind, patch_corners=False)
                except RoutingError:
                    got = None
                if got != expected:
                    failing.add((kind, net.reduce(d - s)))
    assert failing == {("redprime", G(k, 0)), ("redprime", G(0, k))}


def test_forwarding_is_stateless():
    # replay every transit decision of many routes in shuffled order
    net = build_network(3)
    steps = []
    for s in net.nodes[::3]:
        for d in net.nodes:
            if s != d:
                for kind in ("black", "redprime"):
                    trace = trace_route(net, s, d, kind)
                    for (t, hdr), nxt in zip(trace[1:], trace[2:] + [None]):
                        steps.append((hdr, t, kind, nxt[0] if nxt else None))
    random.Random(7).shuffle(steps)
    for hdr, t, kind, nxt in steps:
        action = transit_step(3, hdr, t, kind)
        if nxt is None:
            assert action == Accept(t)
        else:
            assert action.next == nxt


fields = st.integers(-(2**15), 2**15 - 1)


@given(fields, fields, fields, fields, st.sampled_from(list(Direction)), st.integers(0, 2**15 - 1))
def test_header_wire_roundtrip(a, b, c, d, direction, hops):
    hdr = MessageHeader(G(a, b), G(c, d), direction, hops)
    data = hdr.encode()
    assert len(data) == 12
    assert MessageHeader.decode(data) == hdr


def test_header_wire_layout():
    hdr = MessageHeader(G(1, -2), G(3, 0), Direction.S, 5)
    assert hdr.encode() == bytes([1, 0, 0xFE, 0xFF, 3, 0, 0, 0, 3, 0, 5, 0])
    with pytest.raises(OverflowError):
        MessageHeader(G(2**15, 0), G(1, 0), Direction.E).encode()


def test_direction_codes():
    assert [d.code for d in Direction] == [0, 1, 2, 3]
    assert [d.delta for d in Direction] == [G(1, 0), G(-1, 0), G(0, 1), G(0, -1)]
    assert Direction.from_code(2) is Direction.N

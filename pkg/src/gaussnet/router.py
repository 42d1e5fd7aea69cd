"""Header-based routing along the black tree ``B_k`` or the red tree ``R'_k``.

A source reduces the destination relative to itself (so every node acts as
the root of its own pair of trees), picks an initial direction from the
destination's quadrant, and stamps a header.  Transit nodes accept, turn, or
keep the current direction, using only the header and their own address.

The printed transit table misroutes two destinations of the red tree, the
mapped locations ``k`` and ``ki``.  With ``patch_corners=True`` (the default)
the router sends both correctly:

* ``ki`` is reached by heading ``-1`` and turning ``-i`` at ``-k``;
* ``k`` hangs below ``-ki``, so the message heads ``-i`` and never turns.

``patch_corners=False`` reproduces the printed tables verbatim.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, replace

from .gaussian import DenseModulus, GInt, canonical_mod
from .network import Network
from .trees import TreeKind

__all__ = [
    "Direction",
    "MessageHeader",
    "Accept",
    "Forward",
    "RoutingError",
    "SelfRouteError",
    "HopLimitExceeded",
    "source_route",
    "transit_step",
    "simulate_route",
    "trace_route",
]


class Direction(enum.Enum):
    E = (0, GInt(1, 0))
    W = (1, GInt(-1, 0))
    N = (2, GInt(0, 1))
    S = (3, GInt(0, -1))

    @property
    def code(self) -> int:
        return self.value[0]

    @property
    def delta(self) -> GInt:
        return self.value[1]

    @classmethod
    def from_code(cls, code: int) -> Direction:
        for d in cls:
            if d.code == code:
                return d
        raise ValueError(f"no direction with code {code}")

    def __str__(self) -> str:
        return {"E": "+1", "W": "-1", "N": "+i", "S": "-i"}[self.name]


class RoutingError(RuntimeError):
    pass


class SelfRouteError(RoutingError, ValueError):
    pass


class HopLimitExceeded(RoutingError):
    pass


_WIRE = struct.Struct("<6h")


@dataclass(frozen=True)
class MessageHeader:
    source: GInt
    mapped_dest: GInt
    dir: Direction
    hops: int = 0

    def encode(self) -> bytes:
        """Six little-endian int16 fields: s1, s2, d1m, d2m, dir code, hops."""
        try:
            return _WIRE.pack(
                self.source.re,
                self.source.im,
                self.mapped_dest.re,
                self.mapped_dest.im,
                self.dir.code,
                self.hops,
            )
        except struct.error as exc:
            raise OverflowError(f"header field out of int16 range: {self}") from exc

    @classmethod
    def decode(cls, data: bytes) -> MessageHeader:
        s1, s2, d1, d2, code, hops = _WIRE.unpack(data)
        return cls(GInt(s1, s2), GInt(d1, d2), Direction.from_code(code), hops)

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (
            self.source.re,
            self.source.im,
            self.mapped_dest.re,
            self.mapped_dest.im,
            self.dir.code,
            self.hops,
        )


@dataclass(frozen=True)
class Accept:
    node: GInt


@dataclass(frozen=True)
class Forward:
    header: MessageHeader
    next: GInt


def _kind(kind: TreeKind | str) -> TreeKind:
    kind = TreeKind(kind)
    if kind is TreeKind.RED:
        raise ValueError("routing tables exist for the black and red-prime trees only")
    return kind


def source_route(
    k: int, s: GInt, d: GInt, kind: TreeKind | str, *, patch_corners: bool = True
) -> MessageHeader:
    kind = _kind(kind)
    m = DenseModulus(k)
    dm = canonical_mod(d - s, m)
    if dm == GInt(0, 0):
        raise SelfRouteError(f"source and destination coincide ({s})")
    black = kind is TreeKind.BLACK
    prod = dm.re * dm.im
    if prod > 0:
        direction = Direction.N if black else Direction.W
    elif prod < 0:
        direction = Direction.E if black else Direction.S
    elif dm.im == 0:
        direction = Direction.E if black else Direction.W
    else:
        direction = Direction.N if black else Direction.S
    if patch_corners and not black:
        if dm == GInt(k, 0):
            direction = Direction.S
        elif dm == GInt(0, k):
            direction = Direction.W
    return MessageHeader(s, dm, direction, 0)


def transit_step(
    k: int,
    hdr: MessageHeader,
    t: GInt,
    kind: TreeKind | str,
    *,
    patch_corners: bool = True,
) -> Accept | Forward:
    """Decide what node ``t`` (not the source) does with a message carrying ``hdr``."""
    kind = _kind(kind)
    if t == hdr.source:
        raise RoutingError(f"message returned to its source {t}")
    m = DenseModulus(k)
    tm = canonical_mod(t - hdr.source, m)
    dm = hdr.mapped_dest
    if tm == dm:
        return Accept(t)
    d1, d2 = dm.re, dm.im
    turn_south = tm.im == 0 and tm.re in (d1, d1 + k + 1, d1 - k)
    turn_east = tm.re == 0 and tm.im in (d2, d2 + k + 1, d2 - k)
    if patch_corners and kind is TreeKind.RED_PRIME and dm == GInt(k, 0):
        turn_east = False
    # the two turn conditions are exclusive: both need tm == 0, the source
    assert not (turn_south and turn_east), (k, hdr, t)
    if turn_south:
        new_dir = Direction.S
        if __debug__:
            _check_quadrant(kind, dm, black_sign=-1)
    elif turn_east:
        new_dir = Direction.E
        if __debug__:
            _check_quadrant(kind, dm, black_sign=+1)
    else:
        new_dir = hdr.dir
    # hdr.hops counts the links already crossed, including the one into t
    hops = hdr.hops + 1
    if hops > 2 * k:
        raise HopLimitExceeded(
            f"route {hdr.source} -> mapped {dm} exceeded {2 * k} hops at {t}"
        )
    return Forward(replace(hdr, dir=new_dir, hops=hops), canonical_mod(t + new_dir.delta, m))


def _check_quadrant(kind: TreeKind, dm: GInt, black_sign: int) -> None:
    # south turns: black dest in quadrant 2/4, red-prime in 1/3; east turns the
    # opposite; the axes count as part of both neighbouring quadrants
    sign = black_sign if kind is TreeKind.BLACK else -black_sign
    assert sign * dm.re * dm.im >= 0, (kind, dm)


def _walk(
    net: Network, s: GInt, d: GInt, kind: TreeKind | str, patch_corners: bool
) -> list[tuple[GInt, MessageHeader]]:
    k = net.k
    for v in (s, d):
        if v not in net:
            raise ValueError(f"{v} is not a node of G_{k}")
    hdr = source_route(k, s, d, kind, patch_corners=patch_corners)
    trace = [(s, hdr)]
    t = canonical_mod(s + hdr.dir.delta, net.modulus)
    hdr = replace(hdr, hops=1)
    while True:
        trace.append((t, hdr))
        action = transit_step(k, hdr, t, kind, patch_corners=patch_corners)
        if isinstance(action, Accept):
            return trace
        hdr, t = action.header, action.next


def simulate_route(
    net: Network, s: GInt, d: GInt, kind: TreeKind | str, *, patch_corners: bool = True
) -> list[GInt]:
    """Run the source and transit rules hop by hop; returns ``[s, ..., d]``."""
    return [node for node, _ in _walk(net, s, d, kind, patch_corners)]


def trace_route(
    net: Network, s: GInt, d: GInt, kind: TreeKind | str, *, patch_corners: bool = True
) -> list[tuple[GInt, MessageHeader]]:
    """Like :func:`simulate_route` but pairs every node with the header it received
    (the source is paired with the header it created)."""
    return _walk(net, s, d, kind, patch_corners)

"""Command-line front end.

Exit codes: 0 success, 1 a property or routing failure, 2 usage error.
Nodes are written ``a,b`` for ``a+bi``; pass negative coordinates as
``--src=-1,0`` or after ``--``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .gaussian import GInt
from .io import EXPORTABLE, export_dict, to_dot, to_json
from .network import build_network
from .protocols import FaultSpec, ft_broadcast, secure_split_send
from .router import RoutingError, trace_route
from .trees import build_tree
from .verifier import reattach_leaf, run_suite

MAX_K = 1000


class UsageError(Exception):
    pass


def _k(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}") from None
    if not 1 <= k <= MAX_K:
        raise argparse.ArgumentTypeError(f"k must lie in 1..{MAX_K}")
    return k


def _k_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
        elif "-" in text.strip("-"):
            lo, hi = text.split("-", 1)
        else:
            lo = hi = text
        rng = range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k range {text!r}; use LO..HI") from None
    if not rng or rng.start < 1 or rng.stop - 1 > MAX_K:
        raise argparse.ArgumentTypeError(f"empty or invalid k range {text!r}")
    return rng


def parse_node(text: str) -> GInt:
    try:
        a, b = text.split(",")
        return GInt(int(a), int(b))
    except ValueError:
        raise UsageError(f"malformed node {text!r}; expected a,b") from None


def _node_in(k: int, text: str) -> GInt:
    v = parse_node(text)
    if v.lee_weight > k:
        raise UsageError(f"node {text} lies outside the diamond |a|+|b| <= {k}")
    return v


def _fmt(v: GInt) -> str:
    return f"{v.re},{v.im}"


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_build(args) -> int:
    _emit(to_json(export_dict(args.k, "network")), args.output)
    return 0


def cmd_export(args) -> int:
    text = to_dot(args.k, args.what) if args.format == "dot" else to_json(export_dict(args.k, args.what))
    _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    failed = 0
    for k in args.krange:
        red_prime = None
        if args.sabotage:
            red_prime = reattach_leaf(build_tree(k, "redprime"), build_tree(k, "black"))
        for check in run_suite(k, red_prime=red_prime, hor_vert_max_k=args.hor_vert_max_k):
            status = "PASS" if check.ok else "FAIL"
            line = f"k={k} {status} {check.name}"
            if not check.ok:
                failed += 1
                line += f": {check.detail}"
            print(line)
    print(f"{failed} failure(s)")
    return 1 if failed else 0


def cmd_route(args) -> int:
    s, d = _node_in(args.k, args.src), _node_in(args.k, args.dst)
    if s == d:
        raise UsageError("source and destination coincide")
    net = build_network(args.k)
    try:
        trace = trace_route(net, s, d, args.tree, patch_corners=not args.literal_tables)
    except RoutingError as exc:
        print(f"routing failure: {exc}", file=sys.stderr)
        return 1
    print(" ".join(_fmt(v) for v, _ in trace))
    if args.trace:
        for v, hdr in trace:
            fields = ",".join(map(str, hdr.as_tuple()))
            print(f"{_fmt(v)}\t({fields})\t{hdr.encode().hex()}")
    return 0


def cmd_broadcast(args) -> int:
    net = build_network(args.k)
    root = _node_in(args.k, args.root)
    fault = FaultSpec()
    if args.fault_node:
        fault = FaultSpec.node_fault(_node_in(args.k, args.fault_node))
        if fault.node == root:
            raise UsageError("the faulty node cannot be the root")
    elif args.fault_edge:
        try:
            u, v = args.fault_edge.split(":")
        except ValueError:
            raise UsageError("edge faults are written a,b:c,d") from None
        u, v = _node_in(args.k, u), _node_in(args.k, v)
        if not net.has_edge(u, v):
            raise UsageError(f"{args.fault_edge} is not an edge of G_{args.k}")
        fault = FaultSpec.edge_fault(net, u, v)
    report = ft_broadcast(net, root, fault)
    print(json.dumps({"k": args.k, "root": [root.re, root.im], "fault": fault.to_dict(), **report.to_dict()}, indent=1))
    return 0 if not report.blocked - {fault.node} else 1


def cmd_split(args) -> int:
    s, d = _node_in(args.k, args.src), _node_in(args.k, args.dst)
    if s == d:
        raise UsageError("source and destination coincide")
    net = build_network(args.k)
    try:
        report = secure_split_send(net, s, d)
    except RoutingError as exc:
        print(f"routing failure: {exc}", file=sys.stderr)
        return 1
    print(json.dumps({"k": args.k, "src": [s.re, s.im], "dst": [d.re, d.im], **report.to_dict()}, indent=1))
    exposed = [v for v, p in report.exposure.items() if v not in (s, d) and len(p) > 1]
    return 1 if exposed or not report.delivered else 0


def cmd_stats(args) -> int:
    net = build_network(args.k)
    hist = net.distance_histogram()
    print(f"k {net.k}")
    print(f"n {net.n}")
    print(f"edges {len(net.edges)}")
    print(f"diameter {net.diameter(exhaustive=args.exhaustive)}")
    print("histogram " + " ".join(f"{d}:{c}" for d, c in hist.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gaussnet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write G_k as JSON")
    p.add_argument("k", type=_k)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("export", help="write the network or trees as DOT or JSON")
    p.add_argument("k", type=_k)
    p.add_argument("what", choices=EXPORTABLE)
    p.add_argument("-f", "--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="check every tree property for a range of k")
    p.add_argument("krange", type=_k_range, help="LO..HI or a single k")
    p.add_argument("--sabotage", action="store_true", help="re-attach one red leaf under its black parent first")
    p.add_argument("--hor-vert-max-k", type=int, default=8, help="skip the path-intersection sweep above this k")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("route", help="route one message along a tree")
    p.add_argument("k", type=_k)
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--tree", choices=("black", "redprime"), default="black")
    p.add_argument("--trace", action="store_true", help="print the header received at every hop")
    p.add_argument("--literal-tables", action="store_true", help="use the routing tables without the corner fixes")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("broadcast", help="broadcast along both trees with an optional fault")
    p.add_argument("k", type=_k)
    p.add_argument("--root", default="0,0")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--fault-node")
    g.add_argument("--fault-edge", help="a,b:c,d")
    p.set_defaults(func=cmd_broadcast)

    p = sub.add_parser("split", help="send a message split across both trees")
    p.add_argument("k", type=_k)
    p.add_argument("src")
    p.add_argument("dst")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("stats", help="node/edge counts, diameter and distance histogram")
    p.add_argument("k", type=_k)
    p.add_argument("--exhaustive", action="store_true", help="diameter over all node pairs")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{parser.prog}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``stlab campaign|check|construct|enumerate|qform``.

Exit status: 0 when every assertion holds, 1 when a campaign finds a
violation, 2 on bad input or any other infrastructure error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import campaigns as C
from .canon import canonical_form
from .constructions import build_family
from .generate import default_jobs, generate, parse_filter
from .graph import GraphError, encode_graph6, iter_bits, parse_graph, read_graph6_stream, to_edge_list
from .properties import StQuery, st_violation_witness, summarize

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def parse_range(text: str) -> list[int]:
    """``7``, ``7..9``, ``7-9`` or ``7,8,9``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        for sep in ("..", "-"):
            if sep in part:
                a, b = part.split(sep)
                out.extend(range(int(a), int(b) + 1))
                break
        else:
            out.append(int(part))
    return out


def _emit(report: C.CampaignReport, fmt: str, out) -> int:
    out.write(report.to_csv() if fmt == "csv" else report.to_json() + "\n")
    return EXIT_OK if report.verdict == "pass" else EXIT_FAIL


def _read_source(path: Optional[str]):
    if path is None:
        return None
    if path == "-":
        return list(read_graph6_stream(sys.stdin))
    with open(path, "rb") as fh:
        return list(read_graph6_stream(fh))


def cmd_campaign(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    source = _read_source(args.input)
    ns = parse_range(args.n) if args.n else None
    name = args.name
    common = dict(jobs=jobs, big=args.big, source=source)
    if name == "theorem6":
        rep = C.campaign_theorem6(ns or (7, 8, 9), **common)
    elif name == "theorem6-boundary":
        rep = C.theorem6_boundary(jobs=jobs)
    elif name == "ce-gap":
        if ns and len(ns) != 1:
            raise C.CampaignError("ce-gap takes a single order")
        rep = C.campaign_ce_gap(ns[0] if ns else 9, **common)
    elif name == "theorem2":
        rep = C.campaign_theorem2(ns or (7, 8), **common)
    elif name == "lemma5":
        if args.p is None:
            raise C.CampaignError("lemma5 needs --p")
        rep = C.campaign_lemma5(args.p, ns, **common)
    elif name == "qform":
        rep = C.campaign_qform(ns[-1] if ns else 14)
    elif name == "z":
        rep = C.campaign_z(ns or tuple(range(7, 17)))
    else:
        raise C.CampaignError(f"unknown campaign {name!r}")
    return _emit(rep, args.report, sys.stdout)


def cmd_check(args) -> int:
    G = parse_graph(args.graph)
    out = {"graph6": encode_graph6(G).decode(), "edge_list": to_edge_list(G)}
    if args.props:
        out.update(summarize(G).to_dict())
        out["canonical_graph6"] = canonical_form(G).graph6
    for q in args.st or []:
        query = StQuery.parse(q)
        w = st_violation_witness(G, query)
        out[f"st{query}"] = w is None
        if w is not None:
            out[f"st{query}_witness"] = list(iter_bits(w))
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_construct(args) -> int:
    G = build_family(args.family, [int(x) for x in args.params])
    print(to_edge_list(G) if args.format == "edges" else encode_graph6(G).decode())
    return EXIT_OK


def cmd_enumerate(args) -> int:
    filters = [parse_filter(f) for f in args.filter or []]
    posts = [parse_filter(f) for f in args.post or []]
    for f in filters:
        if not f.hereditary:
            raise GraphError(f"{f.spec()} is not hereditary; pass it with --post")
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if args.input:
        pool = (G for G in _read_source(args.input) if G.order == args.n)
        pool = (G for G in pool if all(f.accepts(G) for f in filters + posts))
    else:
        pool = generate(args.n, filters + posts, jobs=jobs)
    w = sys.stdout.write
    total = 0
    for G in pool:
        total += 1
        if not args.count:
            w(canonical_form(G).graph6 + "\n")
    if args.count:
        w(f"{total}\n")
    return EXIT_OK


def cmd_qform(args) -> int:
    rep = C.campaign_qform(args.max)
    sys.stdout.write(rep.to_csv())
    return EXIT_OK if rep.verdict == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stlab", description="Exact [s,t]-graph verification tools")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("campaign", help="run a named verification campaign")
    c.add_argument("name", choices=C.CAMPAIGNS)
    c.add_argument("--n", help="order range, e.g. 7..9")
    c.add_argument("--p", type=int)
    c.add_argument("--jobs", type=int, help="worker processes (default $STLAB_JOBS or 1)")
    c.add_argument("--report", choices=("json", "csv"), default="json")
    c.add_argument("--input", help="graph6 stream file to use as population ('-' for stdin)")
    c.add_argument("--big", action="store_true", help="allow order-10 populations")
    c.set_defaults(func=cmd_campaign)

    k = sub.add_parser("check", help="properties of one graph (graph6 or 'n; u-v,...')")
    k.add_argument("graph")
    k.add_argument("--props", action="store_true")
    k.add_argument("--st", action="append", metavar="S,T")
    k.set_defaults(func=cmd_check)

    b = sub.add_parser("construct", help="emit a named graph family")
    b.add_argument("family")
    b.add_argument("params", nargs="*")
    b.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    b.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="stream canonical graph6, one per isomorphism class")
    e.add_argument("n", type=int)
    e.add_argument("--filter", action="append", help="triangle-free | st:S,T | max-edges:M")
    e.add_argument("--post", action="append", help="min-degree:D | kconn:C")
    e.add_argument("--jobs", type=int)
    e.add_argument("--input", help="filter an external graph6 stream instead of generating")
    e.add_argument("--count", action="store_true", help="print only the number of graphs")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("qform", help="quadratic-form bounds vs oracle as CSV")
    q.add_argument("--max", type=int, default=14)
    q.set_defaults(func=cmd_qform)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, C.CampaignError, ValueError, OSError) as e:
        print(f"stlab: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: compute, decompose, verify, enumerate, extremal, canon.
Payloads go to stdout (JSON by default, stable key order, no timestamps);
runtime statistics and diagnostics go to stderr.

Exit codes: 0 success; 2 parse/usage failure (and extremal below n = 4);
3 disconnected input to compute; 4 hypothesis violation in decompose;
5 enumeration above the built-in limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from .canon import canonical_code
from .enumeration import (
    BUILTIN_ENUMERATION_LIMIT,
    EnumerationSpec,
    generate,
    ingest_graph6_stream,
    verify_conjecture,
)
from .errors import (
    DisconnectedGraphError,
    EdgeListFormatError,
    Graph6Error,
    GraphConstructionError,
    HypothesisError,
    SizeLimitError,
)
from .extremal import extremal_family
from .formats import parse_edge_list, parse_graph6
from .graphs import Graph
from .invariants import compute_invariants, gap
from .proofs import gap_decomposition

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_HYPOTHESIS = 4
EXIT_LIMIT = 5


def _err(msg: str) -> None:
    print(f"szlab: {msg}", file=sys.stderr)


def _read_one_graph(args) -> Graph:
    sources = [s for s in (args.graph6, args.edges, args.file) if s is not None]
    if len(sources) != 1:
        raise Graph6Error("exactly one of --graph6, --edges, --file is required")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        return parse_edge_list(args.edges.replace("\\n", "\n"))
    with open(args.file, encoding="ascii", errors="replace") as fh:
        text = fh.read()
    if not text.strip():
        raise Graph6Error(f"empty input file: {args.file}")
    first = text.strip().splitlines()[0]
    if len(first.split()) == 2 and all(p.isdigit() for p in first.split()):
        return parse_edge_list(text)
    return parse_graph6(first)


def _parse_range(spec: str) -> range:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(spec)
    return range(value, value + 1)


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    env = os.environ.get("SZLAB_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            _err(f"ignoring non-integer SZLAB_WORKERS={env!r}")
    return 1


def cmd_compute(args) -> int:
    try:
        g = _read_one_graph(args)
    except (Graph6Error, EdgeListFormatError, GraphConstructionError, OSError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    try:
        report = compute_invariants(g)
    except DisconnectedGraphError as exc:
        _err(str(exc))
        return EXIT_DISCONNECTED
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    elif args.format == "human":
        print(f"n={report.n} m={report.m}")
        print(f"wiener          = {report.wiener}")
        print(f"szeged          = {report.szeged}")
        print(f"revised szeged  = {report.revised_szeged}")
        print(f"gap (Sz - W)    = {report.gap}")
    else:
        print(report.to_json())
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        g = _read_one_graph(args)
    except (Graph6Error, EdgeListFormatError, GraphConstructionError, OSError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    try:
        decomp = gap_decomposition(g)
    except HypothesisError as exc:
        _err(str(exc))
        return EXIT_HYPOTHESIS
    if args.format == "csv":
        sys.stdout.write(decomp.pairs_csv())
    elif args.format == "human":
        d = decomp.to_json_dict()
        print(f"n={d['n']} m={d['m']} gap={d['gap']} bound={d['bound']}")
        for b in d["blocks"]:
            tag = " (designated)" if b["designated"] else ""
            line = (
                f"block {b['index']}{tag}: size {b['size']}, "
                f"within {b['within_surplus']} (floor {b['within_floor']})"
            )
            if "cross_surplus" in b:
                line += f", cross {b['cross_surplus']} (floor {b['cross_floor']})"
            print(line)
        print(f"cross-other {d['cross_other']}")
    else:
        payload = decomp.to_json_dict()
        if args.pairs:
            dist = _pair_rows(decomp)
            payload["pairs"] = dist
        print(json.dumps(payload, sort_keys=False))
    return EXIT_OK


def _pair_rows(decomp) -> list[dict]:
    from szlab.graphs import all_pairs_distances

    dist = all_pairs_distances(decomp.graph)
    rows = []
    for (x, y), s in sorted(decomp.surplus.surpluses.items()):
        cat = decomp.pair_category[(x, y)]
        rows.append(
            {
                "x": x,
                "y": y,
                "distance": dist.d(x, y),
                "surplus": s,
                "category": cat[0],
            }
        )
    return rows


def _per_graph_rows(graphs) -> list[list]:
    # Rows for the per-graph CSV: (canonical code, n, m, W, Sz, gap).
    rows = []
    for g in graphs:
        try:
            report = compute_invariants(g)
        except DisconnectedGraphError:
            continue
        code = canonical_code(g).decode("ascii") if g.n <= 16 else ""
        rows.append([code, g.n, g.m, report.wiener, report.szeged, report.gap])
    return sorted(rows, key=lambda r: (r[1], r[0]))


def _emit_reports(reports, graphs, args, elapsed: float) -> None:
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["canonical_code", "n", "m", "wiener", "szeged", "gap"])
        writer.writerows(_per_graph_rows(graphs))
    else:
        payload = {"schema": 1, "reports": [r.to_json_dict() for r in reports]}
        print(json.dumps(payload, sort_keys=False))
    checked = sum(r.graphs_checked for r in reports)
    _err(f"checked {checked} graphs in {elapsed:.2f}s")


def cmd_verify(args) -> int:
    if args.file:
        try:
            # Undecodable bytes become U+FFFD and fail graph6 parsing per
            # line instead of aborting the whole stream.
            fh = open(args.file, encoding="ascii", errors="replace")
        except OSError as exc:
            _err(str(exc))
            return EXIT_PARSE
    else:
        fh = sys.stdin
    t0 = time.monotonic()
    graphs = []
    errors = 0
    with fh:
        for rec in ingest_graph6_stream(fh):
            if rec.error is not None:
                _err(f"line {rec.lineno}: {rec.error}")
                errors += 1
            else:
                graphs.append(rec.graph)
    reports = verify_conjecture(graphs, workers=_workers(args))
    _emit_reports(reports, graphs, args, time.monotonic() - t0)
    if errors:
        _err(f"{errors} unparseable line(s) skipped")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        ns = _parse_range(args.n)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    for n in ns:
        if n > BUILTIN_ENUMERATION_LIMIT:
            _err(
                f"n={n} exceeds the built-in enumeration limit "
                f"({BUILTIN_ENUMERATION_LIMIT}); pipe a graph6 stream to `verify` instead"
            )
            return EXIT_LIMIT
    t0 = time.monotonic()
    reports = []
    graphs = []
    for n in ns:
        spec = EnumerationSpec(n=n, min_edges=args.min_edges)
        batch_graphs = list(generate(spec))
        reports.extend(verify_conjecture(batch_graphs, workers=_workers(args)))
        graphs.extend(batch_graphs)
    _emit_reports(reports, graphs, args, time.monotonic() - t0)
    return EXIT_OK


def cmd_extremal(args) -> int:
    try:
        ns = _parse_range(args.n)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    if not ns or ns[0] < 4:
        _err("extremal family is defined for n >= 4")
        return EXIT_PARSE
    families = []
    for n in ns:
        members = extremal_family(n)
        lines = sorted(canonical_code(mem.graph).decode("ascii") for mem in members)
        gaps_ok = all(gap(mem.graph) == 4 * n - 8 for mem in members)
        families.append(
            {"n": n, "count": len(members), "members": lines, "all_gaps_equal_4n_minus_8": gaps_ok}
        )
    if args.format == "json":
        print(json.dumps({"schema": 1, "families": families}, sort_keys=False))
    else:
        for fam in families:
            for line in fam["members"]:
                print(line)
            summary = {k: fam[k] for k in ("n", "count", "all_gaps_equal_4n_minus_8")}
            print(json.dumps(summary, sort_keys=False))
    return EXIT_OK


def cmd_canon(args) -> int:
    try:
        g = _read_one_graph(args)
        code = canonical_code(g)
    except (Graph6Error, EdgeListFormatError, GraphConstructionError, SizeLimitError, OSError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    print(code.decode("ascii"))
    return EXIT_OK


def _add_graph_input(parser) -> None:
    parser.add_argument("--graph6", help="one graph6 record")
    parser.add_argument("--edges", help="edge-list text: 'n m' header then 'u v' lines")
    parser.add_argument("--file", help="file containing a graph6 line or edge-list text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="szlab",
        description="Exact Szeged/Wiener index laboratory and gap-bound verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Wiener/Szeged/revised-Szeged report for one graph")
    _add_graph_input(p)
    p.add_argument("--format", choices=["json", "csv", "human"], default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("decompose", help="block-level decomposition of the gap Sz - W")
    _add_graph_input(p)
    p.add_argument("--format", choices=["json", "csv", "human"], default="json")
    p.add_argument("--pairs", action="store_true", help="include the per-pair surplus dump")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check Sz - W >= 4n - 8 over a graph6 stream")
    p.add_argument("--file", help="graph6 file (default: stdin)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="exhaustively verify the bound for a range of n")
    p.add_argument("--n", required=True, help="single n or range A..B")
    p.add_argument("--min-edges", type=int, dest="min_edges")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", help="emit the equality family for n (graph6 + summary)")
    p.add_argument("--n", required=True, help="single n or range A..B")
    p.add_argument("--format", choices=["json", "human"], default="human")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("canon", help="canonical graph6 code of one graph")
    _add_graph_input(p)
    p.set_defaults(func=cmd_canon)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: build, certify, witness, search.

Reports go to standard output as JSON; human-readable summaries go to
standard error.  Exit codes: 0 success, 2 parameter error, 3 property
failure, 4 budget exhausted.  Identical invocations produce byte-identical
output (volatile timings appear only on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codecs
from .builder import build_G, build_H, extend_with_duplicates
from .errors import BudgetExhausted, CycleSatError
from .graph import VertexLabel
from .paths import DEFAULT_BUDGET, Budget
from .satsearch import min_sat_copies, min_sat_edges, named_graph
from .saturation import certify, witness_path

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_PROPERTY = 3
EXIT_BUDGET = 4


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_build(args) -> int:
    if args.family == "H":
        G = build_H(args.k)
    else:
        G = extend_with_duplicates(build_G(args.r, args.k), args.t)
    data = codecs.encode(G, args.format)
    _emit(data.decode("ascii" if args.format == "graph6" else "utf-8") + "\n", args.out)
    print(f"built {G!r}", file=sys.stderr)
    return EXIT_OK


def _cmd_certify(args) -> int:
    budget = Budget(args.budget)
    try:
        report = certify(args.r, args.k, args.t, mode=args.mode, budget=budget)
    except BudgetExhausted as exc:
        print(f"BudgetExhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit(json.dumps(report.to_json_dict(), sort_keys=True, indent=2) + "\n", args.out)
    status = "PASS" if report.all_pass else "FAIL"
    print(
        f"certify r={args.r} k={args.k} t={args.t}: {status} "
        f"(n={report.n}, odd_girth={report.odd_girth_value}, "
        f"budget_used={report.budget_used})",
        file=sys.stderr,
    )
    for phase, seconds in report.timings.items():
        print(f"  {phase}: {seconds:.3f}s", file=sys.stderr)
    return EXIT_OK if report.all_pass else EXIT_PROPERTY


def _cmd_witness(args) -> int:
    G = extend_with_duplicates(build_G(args.r, args.k), args.t)
    u = G.vertex_of(VertexLabel.parse(args.u))
    v = G.vertex_of(VertexLabel.parse(args.v))
    w = witness_path(G, u, v)
    labels = [str(G.label_of(x)) for x in w.vertices]
    _emit(json.dumps({"length": w.length, "path": labels}) + "\n", args.out)
    print(" -> ".join(labels), file=sys.stderr)
    return EXIT_OK


def _cmd_search(args) -> int:
    F = named_graph(args.forbidden)
    if args.count is None or args.count.upper() == "K2":
        counted = args.count or "K2"
        result = min_sat_edges(args.n, F, forbidden_name=args.forbidden.upper())
        result.counted = counted.upper()
    else:
        H = named_graph(args.count)
        result = min_sat_copies(
            args.n,
            H,
            F,
            counted_name=args.count.upper(),
            forbidden_name=args.forbidden.upper(),
        )
    _emit(json.dumps(result.to_json_dict(), sort_keys=True) + "\n", args.out)
    print(
        f"sat({args.n}, {result.counted}, {result.forbidden}) = {result.value} "
        f"({result.graphs_examined} graphs examined)",
        file=sys.stderr,
    )
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclesat",
        description="Build and certify even-cycle-saturated graphs with no short odd cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a family member and serialize it")
    p_build.add_argument("--family", choices=["G", "H"], default="G")
    p_build.add_argument("--r", type=int, help="odd cycle parameter (family G)")
    p_build.add_argument("--k", type=int, required=True)
    p_build.add_argument("--t", type=int, default=0, help="number of duplicate vertices")
    p_build.add_argument(
        "--format", choices=["graph6", "edgelist-json"], default="edgelist-json"
    )
    p_build.add_argument("--out", default=None)
    p_build.set_defaults(func=_cmd_build)

    p_cert = sub.add_parser("certify", help="run the full certification suite")
    p_cert.add_argument("--r", type=int, required=True)
    p_cert.add_argument("--k", type=int, required=True)
    p_cert.add_argument("--t", type=int, default=0)
    p_cert.add_argument("--mode", choices=["orbit", "full"], default="orbit")
    p_cert.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_cert.add_argument("--out", default=None)
    p_cert.set_defaults(func=_cmd_certify)

    p_wit = sub.add_parser("witness", help="constructive path of length 2k-1")
    p_wit.add_argument("--r", type=int, required=True)
    p_wit.add_argument("--k", type=int, required=True)
    p_wit.add_argument("--t", type=int, default=0)
    p_wit.add_argument("--u", required=True, help='vertex label, e.g. "A1#0" or "D7"')
    p_wit.add_argument("--v", required=True)
    p_wit.add_argument("--out", default=None)
    p_wit.set_defaults(func=_cmd_witness)

    p_search = sub.add_parser("search", help="tiny-n saturation number oracle")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--forbidden", required=True, help="e.g. K3, K4, C4, C5")
    p_search.add_argument("--count", default=None, help="counted graph (default K2 = edges)")
    p_search.add_argument("--out", default=None)
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "build" and args.family == "G" and args.r is None:
        print("build --family G requires --r", file=sys.stderr)
        return EXIT_PARAM
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"BudgetExhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CycleSatError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ValueError as exc:
        print(f"ValueError: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())

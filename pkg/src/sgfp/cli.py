"""Command-line interface.

Exit codes: 0 success, 1 error, 2 degenerate input (regular graph or
constant attributes), so scripts can tell "undefined correlation" apart
from failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import construct, experiments
from .classify import DEGENERATE, classify, threshold_estimate
from .errors import DegenerateGraphError, SgfpError
from .graph import degrees
from .ingest import prop_own, read_attributes, read_edge_list, read_labels, write_graph
from .lp import max_failing_correlation
from .metrics import gap_report
from .randgen import gnp

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEGENERATE = 2


def _out(args):
    if args.output:
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _close(fh):
    if fh is not sys.stdout:
        fh.close()


def cmd_analyze(args) -> int:
    g = read_edge_list(args.graph)
    attrs = read_attributes(args.attrs, g)
    if args.rational:
        attrs = [Fraction(str(v)) for v in attrs]
    report = gap_report(g, attrs)
    fh = _out(args)
    fh.write(report.to_json(include_per_node=args.per_node) + "\n")
    _close(fh)
    if report.r_da is None or report.r_ddelta is None:
        print("degenerate input: correlation undefined", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_edge_list(args.graph)
    result = classify(g)
    fh = _out(args)
    fh.write(result.to_json() + "\n")
    _close(fh)
    return EXIT_DEGENERATE if result.kind == DEGENERATE else EXIT_OK


def cmd_optimize(args) -> int:
    g = read_edge_list(args.graph)
    try:
        result = max_failing_correlation(g, args.epsilon)
    except DegenerateGraphError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    fh = _out(args)
    fh.write(result.to_json(include_witness=args.witness) + "\n")
    _close(fh)
    return EXIT_OK


def cmd_threshold(args) -> int:
    g = read_edge_list(args.graph)
    try:
        est = threshold_estimate(g, grid=args.grid)
    except DegenerateGraphError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    fh = _out(args)
    fh.write(est.to_json() + "\n")
    _close(fh)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.nmax > 10:
        print("warning: census beyond n=10 may take a long time", file=sys.stderr)
    records = [
        experiments.census(n, args.samples, args.seed,
                           epsilon=args.epsilon, jobs=args.jobs)
        for n in range(args.nmin, args.nmax + 1)
    ]
    fh = _out(args)
    experiments.write_census_csv(records, fh)
    _close(fh)
    return EXIT_OK


def cmd_grow(args) -> int:
    rows = experiments.grow_table(args.steps)
    fh = _out(args)
    experiments.write_grow_csv(rows, fh)
    _close(fh)
    return EXIT_OK


def cmd_rewire_experiment(args) -> int:
    graphs = [(path, read_edge_list(path)) for path in args.graphs]
    records = experiments.rewire_experiment(graphs, args.seed,
                                            epsilon=args.epsilon)
    fh = _out(args)
    experiments.write_rewire_csv(records, fh)
    _close(fh)
    return EXIT_OK


def cmd_propown(args) -> int:
    g = read_edge_list(args.graph)
    labels = read_labels(args.labels, g)
    values = prop_own(g, labels)
    fh = _out(args)
    fh.write("node,value\n")
    for i in range(g.n):
        v = values[i]
        fh.write(f"{g.labels[i]},{'' if v is None else float(v)}\n")
    _close(fh)
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "gnp":
        g = gnp(args.n, args.p, args.seed)
        attrs = None
    elif kind == "star":
        g, attrs = construct.star(args.n), None
    elif kind == "knee":
        g, attrs = construct.knee(args.n), None
    elif kind == "path":
        g, attrs = construct.path(args.n), None
    elif kind == "fig1":
        g, attrs = construct.example_graph_fig1()
    elif kind == "fig4":
        g, samples = construct.example_graph_fig4()
        attrs = samples[args.sample]
    else:
        raise ValueError(kind)
    fh = _out(args)
    write_graph(g, fh)
    _close(fh)
    if attrs is not None and args.attrs_output:
        with open(args.attrs_output, "w", encoding="utf-8") as ah:
            ah.write("node,value\n")
            for lab, val in zip(g.labels, attrs):
                ah.write(f"{lab},{val}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgfp",
        description="Singular generalized friendship paradox toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("analyze", help="gap/correlation report for a graph + attributes")
    p.add_argument("graph")
    p.add_argument("attrs")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--rational", action="store_true",
                      help="exact rational arithmetic")
    mode.add_argument("--float", action="store_false", dest="rational",
                      help="64-bit float arithmetic (default)")
    p.add_argument("--per-node", action="store_true")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="exact pro-/anti-SGFP classification")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("optimize", help="LP search for a failing attribute sample")
    p.add_argument("graph")
    p.add_argument("--epsilon", type=float, default=0.001)
    p.add_argument("--witness", action="store_true")
    common(p)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("threshold", help="failing-correlation threshold estimate")
    p.add_argument("graph")
    p.add_argument("--grid", type=int, default=256)
    common(p)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("census", help="random-graph pro/anti census")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.001)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("grow", help="growth-construction curve data")
    p.add_argument("steps", type=int)
    common(p)
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("rewire-experiment", help="configuration-model rewiring study")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.001)
    common(p)
    p.set_defaults(func=cmd_rewire_experiment)

    p = sub.add_parser("propown", help="derive shared-label proportion attribute")
    p.add_argument("graph")
    p.add_argument("labels")
    common(p)
    p.set_defaults(func=cmd_propown)

    p = sub.add_parser("gen", help="generate a named graph as an edge list")
    p.add_argument("kind", choices=["gnp", "star", "knee", "path", "fig1", "fig4"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=0, help="fig4 attribute sample index")
    p.add_argument("--attrs-output", help="also write the attribute CSV here")
    common(p)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SgfpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

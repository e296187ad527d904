"""Command line: ``twodp {solve,verify,oracle,gen,bench,export}``.

Exit codes for ``solve`` and ``oracle``: 0 crossed, 1 crossless, 2 error.
``verify`` exits 0 on accept and 1 on reject.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections.abc import Sequence

from . import kernels
from .bench import HEADER, run_bench
from .formats import ParseError, parse_instance, parse_outcome, render_instance, render_outcome, render_stats
from .generate import random_instance
from .graph import Graph, GraphError, norm_edge
from .oracle import OracleRefusal, oracle_crossed, oracle_maximally_crossless
from .solver import Crossed, Crossless, Outcome, solve, verify_outcome
from .web import WebError, gen_web

EXIT_CROSSED, EXIT_CROSSLESS, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str) -> tuple[Graph, tuple[int, ...]]:
    try:
        return parse_instance(_read(path))
    except ParseError as exc:
        raise CliError(f"{path}:{exc}") from None


def _load_outcome(path: str) -> Outcome:
    try:
        return parse_outcome(_read(path))
    except ParseError as exc:
        raise CliError(f"{path}:{exc}") from None


def cmd_solve(args: argparse.Namespace) -> int:
    g, t = _load_instance(args.instance)
    outcome, stats = solve(g, t)
    out = render_outcome(outcome)
    if args.stats:
        out += render_stats(stats) + "\n"
    sys.stdout.write(out)
    return EXIT_CROSSED if isinstance(outcome, Crossed) else EXIT_CROSSLESS


def cmd_verify(args: argparse.Namespace) -> int:
    g, t = _load_instance(args.instance)
    outcome = _load_outcome(args.outcome)
    verdict = verify_outcome(g, t, outcome)
    print(verdict)
    return 0 if verdict else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    g, t = _load_instance(args.instance)
    try:
        crossing = oracle_crossed(g, t)
        maximal = oracle_maximally_crossless(g, t) if args.maximal and crossing is None else None
    except OracleRefusal as exc:
        raise CliError(str(exc)) from None
    if crossing is not None:
        sys.stdout.write(render_outcome(Crossed(crossing)))
        return EXIT_CROSSED
    print("CROSSLESS")
    if maximal is not None:
        print(f"maximal {'yes' if maximal else 'no'}")
    return EXIT_CROSSLESS


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "web":
        if args.steps < 0 or args.max_clique < 0:
            raise CliError("--steps and --max-clique must be non-negative")
        web = gen_web(args.seed, args.steps, args.max_clique)
        sys.stdout.write(render_instance(web.graph, web.frame))
        if args.cert:
            with open(args.cert, "w", encoding="utf-8") as fh:
                fh.write(render_outcome(Crossless(web.cert)))
        return 0
    n = args.n
    m = args.m if args.m is not None else min(3 * n, n * (n - 1) // 2)
    if n < 3 or not 3 <= args.k <= n:
        raise CliError("need n >= 3 and 3 <= k <= n")
    try:
        g, t = random_instance(random.Random(args.seed), n, m, args.k)
    except GraphError as exc:
        raise CliError(str(exc)) from None
    sys.stdout.write(render_instance(g, t))
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    backends = ["compiled", "python"] if args.backend == "both" else [args.backend]
    if "compiled" in backends and kernels.CompiledSearcher is None:
        raise CliError("compiled kernel is not built")
    print("\t".join(HEADER))
    for row in run_bench(args.sizes, args.seeds, args.density, args.k, backends, args.jobs):
        print(row.tsv(), flush=True)
    return 0


def export_dot(g: Graph, t: Sequence[int], outcome: Outcome | None = None) -> str:
    """Graphviz text; frame vertices and edges bold, crossing paths coloured,
    clique vertices dotted red, added edges dashed."""
    frame = set(t)
    k = len(t)
    frame_edges = {norm_edge(t[u], t[(u + 1) % k]) for u in range(k)}
    edge_style: dict[tuple[int, int], str] = {}
    node_style: dict[int, str] = {}
    edges = set(g.edges())
    if isinstance(outcome, Crossed):
        c = outcome.crossing
        for path, colour in ((c.path_a, "blue"), (c.path_b, "darkgreen")):
            for u, v in zip(path, path[1:]):
                edge_style[norm_edge(u, v)] = f'color={colour}, penwidth=3'
    elif isinstance(outcome, Crossless):
        cert = outcome.cert
        for v in cert.clique_assignment:
            node_style[v] = "style=dotted, color=red"
        for e in cert.completion_edges(g):
            edges.add(e)
            edge_style[e] = "style=dashed, color=red" if any(x in cert.clique_assignment for x in e) else "style=dashed"
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = []
        if v in frame:
            attrs.append(f'shape=doublecircle, xlabel="x{t.index(v) + 1}"')
        if v in node_style:
            attrs.append(node_style[v])
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in sorted(edges):
        attrs = []
        if (u, v) in frame_edges:
            attrs.append("penwidth=2")
        if (u, v) in edge_style:
            attrs.append(edge_style[(u, v)])
        lines.append(f"  {u} -- {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args: argparse.Namespace) -> int:
    g, t = _load_instance(args.instance)
    outcome = _load_outcome(args.outcome) if args.outcome else None
    sys.stdout.write(export_dot(g, t, outcome))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twodp", description="Two disjoint paths with certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a crossing or a web completion")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--stats", action="store_true", help="append a stats line")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an outcome file against an instance")
    p.add_argument("instance")
    p.add_argument("outcome")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force crossing search (small n only)")
    p.add_argument("instance")
    p.add_argument("--maximal", action="store_true", help="also test maximal crosslessness")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=("web", "random"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=3, help="web compositions (web)")
    p.add_argument("--max-clique", type=int, default=2, help="extra clique vertices per piece (web)")
    p.add_argument("--cert", help="write the known certificate here (web)")
    p.add_argument("--n", type=int, default=10, help="vertices (random)")
    p.add_argument("--m", type=int, help="edges (random, default 3n)")
    p.add_argument("--k", type=int, default=4, help="tuple length (random)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time solve on random graphs")
    p.add_argument("--sizes", type=int, nargs="+", default=[1000, 2000, 4000])
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--density", type=float, default=3.0, help="m / n")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--backend", choices=("compiled", "python", "both"), default="both")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export", help="emit Graphviz DOT")
    p.add_argument("instance")
    p.add_argument("outcome", nargs="?")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, WebError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

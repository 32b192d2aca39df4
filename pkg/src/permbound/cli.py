"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 cyclic graph (or empty
family), 3 enumeration limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .errors import CyclicGraph, LimitExceeded, NonUniqueExtremes, ParseError
from .extremal import (
    dimension_at_most_two,
    kendall_diameter,
    linf_diameter,
)
from .families import (
    DescentSet,
    HessenbergFunction,
    HInversionSet,
    descent_kendall_closed_form,
    descent_linf_closed_form,
    descent_to_graph,
    h_inversion_set,
    hessenberg_family,
    hessenberg_graph,
    inversion_extremes,
)
from .graph import (
    RestrictionGraph,
    find_cycle,
    format_edge_list,
    graph_to_json,
    parse_graph,
)
from .oracle import DEFAULT_LIMIT, brute_diameter, enumerate_family, random_dag
from .permutation import Permutation, inversion_number

EXIT_OK, EXIT_USAGE, EXIT_CYCLIC, EXIT_LIMIT = 0, 1, 2, 3
DEFAULT_SEED = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_limit() -> int:
    raw = os.environ.get("PERMBOUND_LIMIT")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"PERMBOUND_LIMIT must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str) -> RestrictionGraph:
    return parse_graph(_read(path))


def _arrow(cycle) -> str:
    return "→".join(map(str, cycle))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _require_acyclic(g: RestrictionGraph):
    cycle = find_cycle(g)
    if cycle is not None:
        raise CyclicGraph(cycle)


# -- subcommands -------------------------------------------------------------


def cmd_validate(args, out) -> int:
    g = load_graph(args.input)
    cycle = find_cycle(g)
    if cycle is not None:
        print(f"cyclic; n={g.n}; {len(g.edges)} edges; witness {_arrow(cycle)}", file=out)
        return EXIT_CYCLIC
    print(f"acyclic; n={g.n}; {len(g.edges)} edges", file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    g = load_graph(args.input)
    limit = args.limit if args.limit is not None else default_limit()
    cycle = find_cycle(g)
    if cycle is not None:
        print(f"warning: graph is cyclic ({_arrow(cycle)}); no permutation satisfies it",
              file=sys.stderr)
        print("count=0", file=out)
        return EXIT_CYCLIC
    family = enumerate_family(g, limit)
    for p in family:
        print(p, file=out)
    print(f"count={len(family)}", file=out)
    return EXIT_OK


def cmd_diameter(args, out) -> int:
    g = load_graph(args.input)
    _require_acyclic(g)
    limit = args.limit if args.limit is not None else default_limit()
    if args.metric == "linf":
        report = linf_diameter(g)
    else:
        report = kendall_diameter(g, exhaustive_limit=limit)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True), file=out)
        return EXIT_OK
    print(f"metric: {report.metric}", file=out)
    print(f"bound: {report.bound}", file=out)
    print(f"attained: {_yes(report.attained)}", file=out)
    print(f"method: {report.method}", file=out)
    if args.witness and report.witness is not None:
        print(f"sigma: {report.witness[0]}", file=out)
        print(f"rho: {report.witness[1]}", file=out)
    return EXIT_OK


def cmd_dimension(args, out) -> int:
    g = load_graph(args.input)
    _require_acyclic(g)
    realizer = dimension_at_most_two(g)
    if args.json:
        data = {"dim_le_2": realizer is not None}
        if realizer is not None:
            sigma, rho = realizer.permutations()
            data.update(ext1=list(realizer.ext1), ext2=list(realizer.ext2),
                        sigma=list(sigma.values), rho=list(rho.values))
        print(json.dumps(data, sort_keys=True), file=out)
        return EXIT_OK
    print(f"dim<=2: {_yes(realizer is not None)}", file=out)
    if realizer is not None:
        sigma, rho = realizer.permutations()
        print(f"ext1: {' '.join(map(str, realizer.ext1))}", file=out)
        print(f"ext2: {' '.join(map(str, realizer.ext2))}", file=out)
        print(f"sigma: {sigma}", file=out)
        print(f"rho: {rho}", file=out)
    return EXIT_OK


def _descent_values(d: DescentSet, metric: str, limit: int) -> tuple[int, int]:
    g = descent_to_graph(d)
    if metric == "linf":
        return descent_linf_closed_form(d), linf_diameter(g).bound
    return descent_kendall_closed_form(d), kendall_diameter(g, exhaustive_limit=limit).bound


def _parse_positions(text: str) -> frozenset:
    text = text.strip().strip("{}")
    try:
        return frozenset(int(s) for s in text.replace(" ", "").split(",") if s)
    except ValueError:
        raise ParseError(f"bad descent list {text!r}") from None


def cmd_descent(args, out) -> int:
    limit = args.limit if args.limit is not None else default_limit()
    if args.all:
        if args.n is None:
            raise ParseError("--all needs --n")
        print(f"{'D':<20} {'closed_form':>11} {'generic':>8} {'agree':>6}", file=out)
        for d in DescentSet.all(args.n):
            closed, generic = _descent_values(d, args.metric, limit)
            label = "{" + ",".join(map(str, sorted(d.positions))) + "}"
            print(f"{label:<20} {closed:>11} {generic:>8} {_yes(closed == generic):>6}", file=out)
        return EXIT_OK
    if args.input is not None:
        d = DescentSet.parse(_read(args.input))
    else:
        if args.n is None:
            raise ParseError("give --n with --descents, or --input")
        try:
            d = DescentSet(args.n, _parse_positions(args.descents or ""))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    closed, generic = _descent_values(d, args.metric, limit)
    print(f"descent set: {d}", file=out)
    print(f"metric: {args.metric}", file=out)
    print(f"closed form: {closed}", file=out)
    print(f"generic: {generic}", file=out)
    print(f"agree: {_yes(closed == generic)}", file=out)
    return EXIT_OK


def _read_pairs(path: str, n: int) -> HInversionSet:
    text = _read(path).strip()
    try:
        if text.startswith("[") or text.startswith("{"):
            data = json.loads(text)
            pairs = data["pairs"] if isinstance(data, dict) else data
            return HInversionSet(n, frozenset((int(i), int(j)) for i, j in pairs))
        pairs = []
        for line in text.splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                i, j = line.replace(",", " ").split()
                pairs.append((int(i), int(j)))
        return HInversionSet(n, frozenset(pairs))
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad h-inversion set in {path}: {exc}") from None


def cmd_hessenberg(args, out) -> int:
    h = HessenbergFunction.parse(args.h)
    limit = args.limit if args.limit is not None else default_limit()
    if args.sigma is not None:
        sigma = Permutation.parse(args.sigma)
        inv = h_inversion_set(sigma, h)
        print(f"{h}; sigma: {sigma}", file=out)
        print("Inv_h: {" + ", ".join(f"({i},{j})" for i, j in sorted(inv.pairs)) + "}", file=out)
        return EXIT_OK
    s = _read_pairs(args.set, h.n)
    try:
        s.check_against(h)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    family = hessenberg_family(h, s, limit)
    print(f"{h}; S: {{" + ", ".join(f"({i},{j})" for i, j in sorted(s.pairs)) + "}", file=out)
    for p in family:
        print(p, file=out)
    print(f"count={len(family)}", file=out)
    if not family:
        return EXIT_CYCLIC
    oracle_value, _ = brute_diameter(hessenberg_graph(h, s), "kendall", limit)
    if len(family) == 1:
        print("ell(x)-ell(omega): 0", file=out)
    else:
        try:
            x, omega = inversion_extremes(family)
        except NonUniqueExtremes as exc:
            print(f"extremes: not unique ({exc})", file=out)
            print(f"oracle diameter: {oracle_value}", file=out)
            return EXIT_OK
        print(f"x: {x}; omega: {omega}", file=out)
        print(f"ell(x)-ell(omega): {inversion_number(x) - inversion_number(omega)}", file=out)
        if inversion_number(x) - inversion_number(omega) != oracle_value:
            print(f"oracle diameter: {oracle_value}", file=out)
            print("agree: no", file=out)
            return EXIT_OK
    print(f"oracle diameter: {oracle_value}", file=out)
    print("agree: yes", file=out)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    rng = random.Random(args.seed)
    g = random_dag(args.n, args.p, rng)
    out.write(graph_to_json(g) + "\n" if args.json else format_edge_list(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permbound", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized tooling (default 1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check that a graph file is acyclic")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="list every permutation satisfying the graph")
    p.add_argument("input")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("diameter", help="l-inf or Kendall-Tau diameter of the family")
    p.add_argument("input")
    p.add_argument("--metric", choices=("linf", "kendall"), default="linf")
    p.add_argument("--witness", action="store_true", help="print the extremal pair")
    p.add_argument("--limit", type=int, help="largest n for exhaustive fallback")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("dimension", help="decide poset dimension <= 2 and print a realizer")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("descent", help="closed forms for descent-set families")
    p.add_argument("--n", type=int)
    p.add_argument("--descents", help="comma separated positions, e.g. 1,3")
    p.add_argument("--input", help="file holding 'n=5; D={1,3}' or its JSON form")
    p.add_argument("--metric", choices=("linf", "kendall"), default="linf")
    p.add_argument("--all", action="store_true", help="sweep every descent set of size n")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_descent)

    p = sub.add_parser("hessenberg", help="h-inversion sets and their families")
    p.add_argument("--h", required=True, help="e.g. 2,3,4,4 or h=2,3,4,4")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sigma", help="permutation, e.g. '2 4 1 3' or 2413")
    group.add_argument("--set", help="file of 'i j' pairs (or JSON) forming S")
    p.add_argument("--metric", choices=("kendall",), default="kendall")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_hessenberg)

    p = sub.add_parser("generate", help="random acyclic graph in edge-list format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.3, help="edge probability")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CyclicGraph as exc:
        print(f"CyclicGraph: {exc}", file=sys.stderr)
        return EXIT_CYCLIC
    except LimitExceeded as exc:
        print(f"LimitExceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

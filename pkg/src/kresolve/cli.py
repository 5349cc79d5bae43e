"""Command-line interface: generators, solver, formulas, and verification suites.

Exit codes: 0 success, 1 failed checks, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bitset import from_bitset, to_bitset
from .bounds import expand_radius2
from .families import (gen_complete_multipartite, gen_mt, gen_mtk, gen_path,
                       gen_spine_tree)
from .formulas import (multipartite_invariants, path_dim_k, theoretical_bounds,
                       tree_invariants)
from .graph import Graph, GraphError, all_pairs_distances, parse_graph
from .metric import distinguisher_table, kappa
from .solver import (Budget, brute_force_min, lower_bound_pair_slack,
                     solve_exact, solve_greedy)
from .suites import run_suite

BUDGET_NODES_ENV = "KRESOLVE_BUDGET_NODES"
BUDGET_SECS_ENV = "KRESOLVE_BUDGET_SECS"


def _read_graph(path: str | None) -> Graph:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return parse_graph(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _budget(args) -> Budget:
    nodes = args.budget_nodes or int(os.environ.get(BUDGET_NODES_ENV, 0)) or None
    secs = args.budget_secs or float(os.environ.get(BUDGET_SECS_ENV, 0)) or None
    b = Budget()
    if nodes:
        b.max_nodes = nodes
    if secs:
        b.max_seconds = secs
    return b


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        for key, val in obj.items():
            print(f"{key}: {val}")


def cmd_gen(args) -> int:
    if args.family == "mt":
        lg = gen_mt(args.t)
    elif args.family == "mtk":
        lg = gen_mtk(args.t, args.k)
    elif args.family == "multipartite":
        lg = gen_complete_multipartite(_int_list(args.parts))
    elif args.family == "path":
        lg = gen_path(args.n)
    else:
        lg = gen_spine_tree(_int_list(args.leaf_counts))
    sys.stdout.write(lg.graph.serialize())
    return 0


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    if args.method == "brute":
        result = brute_force_min(g, args.k)
    else:
        pd = distinguisher_table(all_pairs_distances(g))
        if args.method == "greedy":
            result = solve_greedy(pd, args.k)
        else:
            result = solve_exact(pd, args.k, _budget(args))
    _emit({
        "k": args.k,
        "size": result.size,
        "set": result.vertices(),
        "status": result.status,
        "nodes_explored": result.nodes_explored,
        "lower_bound_at_exit": result.lower_bound_at_exit,
    }, args.json)
    return 0


def cmd_kappa(args) -> int:
    g = _read_graph(args.graph)
    pd = distinguisher_table(all_pairs_distances(g))
    _emit({"kappa": kappa(pd)}, args.json)
    return 0


def cmd_formula(args) -> int:
    if args.family == "tree":
        g = _read_graph(args.graph)
        params, dim, ftdim = tree_invariants(g)
        _emit({"a": params.a, "b": params.b, "c": params.c,
               "is_path": params.is_path, "dim": dim, "ftdim": ftdim}, args.json)
    elif args.family == "multipartite":
        dim, ftdim = multipartite_invariants(_int_list(args.parts))
        _emit({"dim": dim, "ftdim": ftdim}, args.json)
    elif args.family == "path":
        _emit({"dim_k": path_dim_k(args.n, args.k)}, args.json)
    else:
        b = theoretical_bounds(args.dim, args.t)
        _emit({"ft_upper": b.ft_upper, "k_upper": b.k_upper,
               "jt_low": b.jt_low, "jt_high": b.jt_high}, args.json)
    return 0


def cmd_expand(args) -> int:
    g = _read_graph(args.graph)
    dm = all_pairs_distances(g)
    expanded = expand_radius2(dm, to_bitset(_int_list(args.set)))
    _emit({"expanded": from_bitset(expanded),
           "size": expanded.bit_count()}, args.json)
    return 0


def cmd_certify(args) -> int:
    g = _read_graph(args.graph)
    pd = distinguisher_table(all_pairs_distances(g))
    cert = lower_bound_pair_slack(pd, args.k)
    _emit({
        "k": args.k,
        "bound": cert.bound,
        "pairs": [list(p) for p in cert.pairs],
        "demands": cert.demands,
    }, args.json)
    return 0


def cmd_verify(args) -> int:
    params = {
        "t_max": args.t_max, "t": args.t, "k": args.k, "n_max": args.n_max,
        "samples": args.samples, "seed": args.seed, "budget": _budget(args),
    }
    try:
        report = run_suite(args.suite, **params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report.to_dict(timings=args.timings), indent=2))
    else:
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            print(f"[{mark}] {c.id}: expected {c.expected}, observed "
                  f"{c.observed} ({c.ms} ms) -- {c.anchor}")
        print(f"summary: {report.n_pass} passed, {report.n_fail} failed")
    return 0 if report.all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kresolve",
        description="Metric dimension, fault-tolerant and k-metric dimension "
                    "solver with verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("--family", required=True,
                   choices=["mt", "mtk", "multipartite", "path", "spine"])
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--parts", default="2,2", help="comma-separated part sizes")
    p.add_argument("--leaf-counts", default="2,2",
                   help="comma-separated leaves per spine vertex")
    p.set_defaults(func=cmd_gen)

    def graph_arg(p):
        p.add_argument("graph", nargs="?", default=None,
                       help="edge-list file ('-' or absent: stdin)")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve", help="minimum k-resolving set")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=["exact", "greedy", "brute"],
                   default="exact")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    graph_arg(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kappa", help="largest k admitting a k-resolving set")
    graph_arg(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("formula", help="closed-form values and bounds")
    p.add_argument("--family", required=True,
                   choices=["tree", "multipartite", "path", "bounds"])
    p.add_argument("--parts", default="2,2")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--t", type=int, default=2)
    graph_arg(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("expand", help="radius-2 expansion of a vertex set")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    graph_arg(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("certify", help="pair-slack lower-bound certificate")
    p.add_argument("--k", type=int, default=2)
    graph_arg(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock ms in JSON (breaks byte-for-byte "
                        "reproducibility)")
    p.set_defaults(func=cmd_verify)
    return parser


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()

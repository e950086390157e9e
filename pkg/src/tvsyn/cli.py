"""Command-line front end (``tvsyn``)."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import io
from .dictionary import build_dictionary
from .exceptions import RankAssumptionViolated, TVSynError
from .factors import FAMILIES, table1_report, write_factor_csv
from .graph import (
    branched_path,
    count_spanning_trees_kirchhoff,
    cycle_graph,
    derivative_operator,
    grid_graph,
    is_connected,
    is_tree,
    path_graph,
    star_graph,
)
from .linalg import nullspace, rank
from .solvers import (
    check_corollary41,
    check_lemma21,
    check_lemma31,
    check_lemma32,
    fit_analysis,
    fit_synthesis,
)

METHODS = ("recipe", "tree", "cuts", "closed-form")
LEMMAS = ("21", "31", "32", "c41", "all")


class _UsageError(Exception):
    pass


def _load_graph(args):
    if args.graph:
        return io.read_graph(args.graph)
    fam, n = args.family, args.n
    if fam is None or n is None:
        raise _UsageError("give --graph FILE or --family with --n")
    if fam == "path":
        return path_graph(n)
    if fam == "cycle":
        return cycle_graph(n)
    if fam == "star":
        return star_graph(n)
    if fam == "grid2d":
        return grid_graph(n)
    if args.b is None or args.n1 is None:
        raise _UsageError("--family branched needs --b and --n1")
    return branched_path(n, args.b, args.n1)


def _graph_args(p, k=True):
    p.add_argument("--graph", help="graph text file ('n m' header, then 'tail head' lines)")
    p.add_argument("--family", choices=("path", "cycle", "star", "grid2d", "branched"),
                   help="built-in family instead of --graph")
    p.add_argument("--n", type=int, help="vertex count (grid2d: side length)")
    p.add_argument("--b", type=int, default=None, help="branch vertex (branched)")
    p.add_argument("--n1", type=int, default=None, help="main path length (branched)")
    if k:
        p.add_argument("--k", type=int, default=1, help="derivative order")


def _signal(args, n: int) -> np.ndarray:
    if getattr(args, "y", None):
        y = io.read_vector_csv(args.y)
        if y.size != n:
            raise TVSynError(f"signal has {y.size} values, graph has {n} vertices")
        return y
    print(f"seed {args.seed}", file=sys.stderr)
    return np.random.default_rng(args.seed).standard_normal(n)


def cmd_graph(args) -> int:
    g = _load_graph(args)
    D = derivative_operator(g, args.k)
    print(f"n {g.n}")
    print(f"m {g.m}")
    print(f"connected {str(is_connected(g)).lower()}")
    print(f"tree {str(is_tree(g)).lower()}")
    print(f"rank_D{args.k} {rank(D)} (rows {D.shape[0]})")
    if is_connected(g):
        print(f"spanning_trees {count_spanning_trees_kirchhoff(g)}")
    if args.out:
        io.write_graph(g, args.out)
    if args.operator_out:
        io.write_matrix_csv(D, args.operator_out)
    return 0


def cmd_dict(args) -> int:
    g = _load_graph(args)
    d = build_dictionary(g, args.k, args.method, args.normalization.replace("-", "_"))
    if args.out:
        io.write_dictionary(d, args.out)
    else:
        sys.stdout.write(json.dumps(io.dictionary_to_json(d), indent=1) + "\n")
    print(f"atoms {d.p} unpenalized {d.J.shape[1]}", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args)
    D = derivative_operator(g, args.k)
    y = _signal(args, g.n)
    scale = float(g.n) ** (args.k - 1)
    if args.mode == "analysis":
        result = fit_analysis(y, D, args.lam, scale=scale)
    else:
        d = io.read_dictionary(args.dict) if args.dict else build_dictionary(g, args.k, args.method)
        result = fit_synthesis(y, d.renormalized(D), args.lam, scale=scale)
    if args.out:
        io.write_fit(result, args.out)
    else:
        sys.stdout.write(json.dumps(result.to_dict(), indent=1) + "\n")
    return 0


def _bordered(D) -> np.ndarray:
    B = np.vstack([nullspace(D).T, D])
    if B.shape[0] != B.shape[1]:
        raise RankAssumptionViolated(
            f"operator with {D.shape[0]} rows and rank {rank(D)} cannot be bordered to a square matrix"
        )
    return B


def cmd_verify(args) -> int:
    g = _load_graph(args)
    D = derivative_operator(g, args.k)
    y = _signal(args, g.n)
    lemmas = ("21", "31", "32", "c41") if args.lemma == "all" else (args.lemma,)
    ok = True
    for lemma in lemmas:
        if lemma == "21":
            d = build_dictionary(g, args.k, args.method).renormalized(D)
            U = range(d.J.shape[1])
            report = check_lemma21(y, d.matrix, U, args.lam)
        elif lemma == "31":
            report = check_lemma31(y, D, args.lam)
        elif lemma == "32":
            report = check_lemma32(y, _bordered(D), args.lam)
        else:
            report = check_corollary41(y, g, args.k, args.lam, args.method)
        print(report.line())
        ok &= report.passed
    if not ok:
        print("error: equivalence gap above tolerance", file=sys.stderr)
    return 0 if ok else 1


def cmd_factors(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    reports = table1_report(args.family, sizes, args.sprime, weak=not args.no_weak)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_factor_csv(reports, fh)
    else:
        write_factor_csv(reports, sys.stdout)
    return 0


def cmd_plot(args) -> int:
    io.write_atoms_svg(io.read_dictionary(args.dict), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tvsyn",
        description="Graph total-variation operators, synthesis dictionaries and equivalence checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="validate a graph and print summary information")
    _graph_args(p)
    p.add_argument("--out", help="write the graph in text format")
    p.add_argument("--operator-out", help="write D^k as CSV")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dict", help="build a synthesis dictionary")
    _graph_args(p)
    p.add_argument("--method", choices=METHODS, default="recipe")
    p.add_argument("--normalization", choices=("l1-image", "unit-row"), default="l1-image")
    p.add_argument("--out", help="dictionary JSON path (default: stdout)")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("solve", help="fit the analysis or synthesis estimator")
    _graph_args(p)
    p.add_argument("--mode", choices=("analysis", "synthesis"), default="analysis")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--y", help="signal CSV; a seeded normal draw is used when absent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dict", help="dictionary JSON for synthesis mode")
    p.add_argument("--method", choices=METHODS, default="recipe")
    p.add_argument("--out", help="fit JSON path (default: stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run analysis/synthesis equivalence checks")
    _graph_args(p)
    p.add_argument("--lambda", dest="lam", type=float, default=0.1)
    p.add_argument("--lemma", choices=LEMMAS, default="c41")
    p.add_argument("--method", choices=METHODS, default="recipe")
    p.add_argument("--y", help="signal CSV; a seeded normal draw is used when absent")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factors", help="inverse scaling and compatibility factors as CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument("--sprime", type=int, default=1, help="number of edges in S'")
    p.add_argument("--no-weak", action="store_true", help="skip the weak compatibility bounds")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("plot", help="draw penalized atoms as SVG polylines")
    p.add_argument("--dict", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except (TVSynError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

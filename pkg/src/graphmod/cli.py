"""Command-line front end. Every subcommand prints JSON on stdout.

Exit codes: 0 success, 1 infeasible or no improvement, 2 input error,
3 resource cap or time limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracles
from .bench import SOLVERS, bench, run_fixtures, run_solver
from .cluster_editing import CeConfig
from .errors import ParseError
from .formats import guess_format, instance_files, parse_instance
from .tuner import DEFAULT_GRID, file_fingerprint, random_corpus, tune

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

_STATUS_EXIT = {"ok": EXIT_OK, "infeasible": EXIT_INFEASIBLE, "error": EXIT_INPUT, "resource": EXIT_RESOURCE, "timeout": EXIT_RESOURCE}

ORACLE_MAX_N = 10


class InputError(Exception):
    pass


def _json_arg(text: str | None):
    """Inline JSON, or the path of a JSON file."""
    if text is None:
        return None
    p = Path(text)
    if p.exists():
        text = p.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from None


def _load(path: str, fmt: str | None):
    try:
        return parse_instance(path, fmt)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:  # includes ParseError
        raise InputError(str(exc)) from None


def _policy(args) -> str:
    policy = args.policy or "lexicographic"
    if policy == "random":
        policy = f"random:{args.seed}"
    return policy


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _single(args, problem: str, solver: str, params: dict, sidecar=None) -> int:
    inst = _load(args.file, args.format)
    params["timeout"] = args.timeout
    if sidecar is None:
        sidecar = Path(args.file).with_suffix(".sol")
    rec = run_solver(problem, solver, inst.payload, params, instance=Path(args.file).name, sidecar=sidecar)
    _emit(rec.to_dict())
    if rec.status == "error":
        print(rec.error, file=sys.stderr)
    return _STATUS_EXIT[rec.status]


def cmd_hcd(args):
    return _single(args, "hcd", "exact", {"k": args.k})


def cmd_hs(args):
    return _single(args, "hcd", "hs", {"policy": _policy(args)})


def cmd_anon(args):
    return _single(args, "anon", "exact" if args.exact else "lt", {"ell": args.ell, "k": args.k})


def cmd_vc_lp(args):
    return _single(args, "vc", "above-lp", {"k": args.k})


def cmd_vc_ls(args):
    return _single(args, "vc", "ls", {"k": args.k, "cover": args.cover}, sidecar=args.solution and Path(args.solution))


def cmd_fast_ls(args):
    return _single(args, "fast", "ls", {"k": args.k}, sidecar=args.solution and Path(args.solution))


def cmd_ilc(args):
    solver = "greedy" if args.greedy else "ilc"
    return _single(args, "ilc", solver, {"c": args.c, "global_budget": args.global_budget or None})


def cmd_ce(args):
    cfg = _json_arg(args.config) or {}
    try:
        cfg = CeConfig.from_dict({**cfg, "seed": args.seed})
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad config: {exc}") from None
    return _single(args, "ce", "bnb", {"k": args.k, "config": cfg})


def cmd_tune(args):
    grid = _json_arg(args.grid)
    if args.random is not None:
        corpus = random_corpus(args.random, n=args.n, p=args.density, seed=args.seed)
        fingerprint = None
    else:
        if args.corpus is None:
            raise InputError("give a corpus directory or --random COUNT")
        paths = [p for p in instance_files(args.corpus) if guess_format(p) in ("edge_list", "dimacs")]
        corpus = [(p.name, _load(str(p), args.format).payload.graph) for p in paths]
        fingerprint = file_fingerprint(paths)
    try:
        report = tune(corpus, grid, node_limit=args.node_limit, seed=args.seed, time_limit=args.timeout, fingerprint=fingerprint)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = report.to_json(include_timing=args.include_timing)
    if args.output:
        Path(args.output).write_text(text + "\n")
    print(text)
    return EXIT_OK


def cmd_oracle(args):
    inst = _load(args.file, args.format)
    payload = inst.payload
    g = payload if args.problem == "fast" else payload.graph
    if g.n > ORACLE_MAX_N:
        print(f"exhaustive search is capped at {ORACLE_MAX_N} vertices", file=sys.stderr)
        return EXIT_RESOURCE
    if args.problem == "hcd":
        opt = oracles.hcd_partition(g)
    elif args.problem == "anon":
        opt = oracles.anon_insertions(g, args.ell)
    elif args.problem == "vc":
        opt = oracles.min_vertex_cover(g)
    elif args.problem == "fast":
        opt = oracles.fas_arc_subset(g.n, g.arcs)
    else:
        opt = oracles.cluster_editing(g)
    _emit({"schema_version": 1, "problem": args.problem, "instance": Path(args.file).name, "optimum": opt})
    return EXIT_OK


def cmd_fixtures(args):
    records = run_fixtures()
    _emit([r.to_dict(include_timing=False) for r in records])
    return EXIT_OK if all(r.valid for r in records) else EXIT_INFEASIBLE


def cmd_bench(args):
    if not Path(args.corpus).is_dir():
        raise InputError(f"{args.corpus} is not a directory")
    params = {
        "k": args.k,
        "ell": args.ell,
        "c": args.c,
        "policy": _policy(args) if args.policy else None,
        "config": _json_arg(args.config),
        "timeout": args.timeout,
    }
    try:
        records = bench(args.corpus, args.problem, args.solver, {k: v for k, v in params.items() if v is not None})
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for r in records:
        print(json.dumps(r.to_dict(include_timing=args.include_timing), sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphmod", description="Exact and local-search solvers for graph modification problems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file=True):
        p = sub.add_parser(name, help=help_text)
        if file:
            p.add_argument("file")
        p.add_argument("--format", choices=["edge_list", "dimacs", "tournament", "listcoloring"])
        p.add_argument("--timeout", type=float, help="wall-clock limit in seconds")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)
        return p

    p = add("hcd", cmd_hcd, "exact Highly Connected Deletion")
    p.add_argument("--k", type=int, help="edge deletion budget (default: number of edges)")

    p = add("hs", cmd_hs, "recursive minimum-cut clustering heuristic")
    p.add_argument("--policy", help="lexicographic, adversarial, random or random:<seed>")

    p = add("anon", cmd_anon, "degree anonymization by edge insertion")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, help="insertion budget for --exact")
    p.add_argument("--exact", action="store_true", help="exhaustive search instead of the heuristic")

    p = add("vc-lp", cmd_vc_lp, "LP relaxation and vertex cover above the LP bound")
    p.add_argument("--k", type=int)

    p = add("vc-ls", cmd_vc_ls, "local search for a smaller vertex cover")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cover", help="seed cover as comma-separated labels")
    p.add_argument("--solution", help="file with the seed cover (default: <instance>.sol)")

    p = add("fast-ls", cmd_fast_ls, "local search for a smaller feedback arc set in a tournament")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--solution", help="file with the seed arcs, one 'u v' per line (default: <instance>.sol)")

    p = add("ilc", cmd_ilc, "list-coloring heuristic with incremental recoloring")
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--global-budget", action="store_true")
    p.add_argument("--greedy", action="store_true", help="run the greedy baseline instead")

    p = add("ce", cmd_ce, "exact Cluster Editing")
    p.add_argument("--k", type=int)
    p.add_argument("--config", help="solver configuration as JSON or a JSON file")

    p = add("tune", cmd_tune, "grid search over Cluster Editing configurations", file=False)
    p.add_argument("corpus", nargs="?", help="directory of edge-list or DIMACS graphs")
    p.add_argument("--random", type=int, metavar="COUNT", help="use COUNT seeded random graphs instead")
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--density", type=float, default=0.6)
    p.add_argument("--grid", help=f"grid as JSON; default {json.dumps(DEFAULT_GRID)}")
    p.add_argument("--node-limit", type=int, default=200_000)
    p.add_argument("--output")
    p.add_argument("--include-timing", action="store_true")

    p = add("oracle", cmd_oracle, "exhaustive optimum for small instances")
    p.add_argument("--problem", choices=["hcd", "anon", "vc", "fast", "ce"], required=True)
    p.add_argument("--ell", type=int, default=2)

    add("fixtures", cmd_fixtures, "run the built-in worked examples", file=False)

    p = add("bench", cmd_bench, "run one solver over a directory of instances", file=False)
    p.add_argument("corpus")
    p.add_argument("--problem", choices=sorted(SOLVERS), required=True)
    p.add_argument("--solver", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--policy")
    p.add_argument("--config")
    p.add_argument("--include-timing", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

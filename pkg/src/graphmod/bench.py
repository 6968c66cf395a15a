"""Result records, a solver dispatcher shared with the CLI, and the benchmark runner.

Every solution is re-checked against its instance with the problem's own
predicate before a record is marked valid.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .anonymity import anon_exact, is_l_anonymous, lt_heuristic
from .cluster_editing import CeConfig, ce_solve, is_cluster_graph
from .coloring import greedy_coloring, ilc_color_graph, is_proper_list_coloring
from .errors import GraphModError, ParseError, ResourceLimitError
from .fixtures import anonymity_example, hcd_example, local_search_vc_example, vc_lp_example
from .formats import LabeledGraph, ListColoringData, guess_format, instance_files, parse_instance
from .graph import EditSet, Graph, TieBreakPolicy
from .hcd import hcd_exact, hs_cluster, validate_hcd
from .stats import DeadlineExceeded, NodeLimitExceeded, SearchStats
from .tournament import Tournament, fas_exact, is_acyclic_after, ls_fast
from .vertex_cover import exchange_distance, is_vertex_cover, lp_half_integral, ls_vertex_cover, vc_above_lp

SCHEMA_VERSION = 1

SOLVERS = {
    "hcd": ("exact", "hs"),
    "anon": ("lt", "exact"),
    "vc": ("above-lp", "ls"),
    "fast": ("exact", "ls"),
    "ilc": ("ilc", "greedy"),
    "ce": ("bnb",),
}

# which instance formats each problem reads
PROBLEM_FORMATS = {
    "hcd": ("edge_list", "dimacs"),
    "anon": ("edge_list", "dimacs"),
    "vc": ("edge_list", "dimacs"),
    "ce": ("edge_list", "dimacs"),
    "fast": ("tournament",),
    "ilc": ("listcoloring",),
}


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass
class ResultRecord:
    problem: str
    instance: str
    solver: str
    params: dict
    status: str = "ok"  # ok | infeasible | error | resource | timeout
    cost: int | None = None
    nodes: int | None = None
    wall_time: float = 0.0
    valid: bool = False
    solution: Any = None
    extra: dict = field(default_factory=dict)
    error: str | None = None

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "problem": self.problem,
            "instance": self.instance,
            "solver": self.solver,
            "params": self.params,
            "status": self.status,
            "cost": self.cost,
            "nodes": self.nodes,
            "valid": self.valid,
            "solution": self.solution,
            "extra": self.extra,
            "error": self.error,
        }
        if include_timing:
            d["wall_time"] = self.wall_time
        return d


def _edges_out(lab, edges) -> list[list[int]]:
    return sorted([lab[u], lab[v]] for u, v in edges)


def _edits_out(lab, es: EditSet) -> dict:
    return {"delete": _edges_out(lab, es.deletions), "insert": _edges_out(lab, es.insertions)}


def _read_seed(path: Path | None, params: dict, key: str):
    if key in params and params[key] is not None:
        return params[key]
    if path is None or not path.exists():
        raise ValueError(f"no seed solution: pass {key} or provide {path.name if path else 'a .sol file'}")
    return path.read_text()


def parse_label_set(text) -> list[int]:
    if isinstance(text, (list, tuple, set, frozenset)):
        return [int(x) for x in text]
    tokens = text.replace(",", " ").split()
    return [int(t) for t in tokens if not t.startswith("#")]


def parse_arc_list(text) -> list[tuple[int, int]]:
    out = []
    for line in str(text).splitlines():
        line = line.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise ParseError("expected an arc 'u v'", len(out) + 1, 1)
        out.append((int(line[0]) - 1, int(line[1]) - 1))
    return out


def _solve_graph(problem, solver, lg: LabeledGraph, params, stats, sidecar, rec: ResultRecord):
    g, lab = lg.graph, lg.labels
    if problem == "hcd":
        if solver == "exact":
            k = params.get("k")
            sol = hcd_exact(g, g.m if k is None else int(k), stats=stats)
        else:
            sol = hs_cluster(g, TieBreakPolicy.parse(params.get("policy") or "lexicographic"))
        if sol is None:
            rec.status = "infeasible"
            return
        rec.cost = sol.cost
        rec.solution = {
            "delete": _edges_out(lab, sol.deleted),
            "clusters": sorted(sorted(lab[v] for v in c) for c in sol.clusters),
        }
        rec.valid = validate_hcd(g, sol)
    elif problem == "anon":
        ell = int(params.get("ell") or 2)
        if solver == "lt":
            es = lt_heuristic(g, ell)
        else:
            k = params.get("k")
            es = anon_exact(g, ell, g.n * (g.n - 1) // 2 if k is None else int(k))
        if es is None:
            rec.status = "infeasible"
            return
        rec.cost = es.size
        rec.solution = _edits_out(lab, es)
        rec.valid = not es.deletions and is_l_anonymous(es.apply(g), ell)
    elif problem == "vc":
        pos = {x: i for i, x in enumerate(lab)}
        if solver == "above-lp":
            a = lp_half_integral(g)
            rec.extra["lp_value"] = rational(a.lp_value)
            rec.extra["lp"] = {str(lab[v]): rational(x) for v, x in sorted(a.value.items())}
            k = params.get("k")
            k = g.n if k is None else int(k)
            cover = vc_above_lp(g, k, stats=stats)
            if cover is None:
                rec.status = "infeasible"
                return
            rec.valid = is_vertex_cover(g, cover) and len(cover) <= k
        else:
            seed = {pos[x] for x in parse_label_set(_read_seed(sidecar, params, "cover"))}
            k = int(params.get("k") or 0)
            rec.extra["seed_size"] = len(seed)
            cover = ls_vertex_cover(g, seed, k)
            if cover is None:
                rec.status = "infeasible"
                return
            rec.extra["distance"] = exchange_distance(seed, cover)
            rec.valid = is_vertex_cover(g, cover) and len(cover) < len(seed) and rec.extra["distance"] <= k
        rec.cost = len(cover)
        rec.solution = sorted(lab[v] for v in cover)
    elif problem == "ce":
        cfg = params.get("config")
        cfg = cfg if isinstance(cfg, CeConfig) else CeConfig.from_dict(cfg or {})
        rec.params["config"] = cfg.to_dict()
        k = params.get("k")
        k = g.m if k is None else int(k)
        es = ce_solve(g, k, cfg, stats)
        if es is None:
            rec.status = "infeasible"
            return
        rec.cost = es.size
        rec.solution = _edits_out(lab, es)
        rec.valid = es.size <= k and is_cluster_graph(es.apply(g))


def _solve_fast(solver, t: Tournament, params, sidecar, rec: ResultRecord):
    if solver == "exact":
        s = fas_exact(t)
        rec.valid = is_acyclic_after(t, s)
    else:
        seed = frozenset(parse_arc_list(_read_seed(sidecar, params, "solution")))
        k = int(params.get("k") or 0)
        rec.extra["seed_size"] = len(seed)
        s = ls_fast(t, seed, k)
        if s is None:
            rec.status = "infeasible"
            return
        rec.extra["distance"] = len(seed ^ s)
        rec.valid = is_acyclic_after(t, s) and len(s) < len(seed) and len(seed ^ s) <= k
    rec.cost = len(s)
    rec.solution = sorted([u + 1, v + 1] for u, v in s)


def _solve_ilc(solver, data: ListColoringData, params, stats, rec: ResultRecord):
    g, lists = data.graph, data.lists
    if solver == "greedy":
        col = greedy_coloring(g, lists)
    else:
        c = int(params.get("c") or 0)
        col = ilc_color_graph(g, lists, c, global_budget=bool(params.get("global_budget")), stats=stats)
    if col is None:
        rec.status = "infeasible"
        return
    rec.cost = len(set(col.values()))
    rec.solution = {str(v + 1): x for v, x in sorted(col.items())}
    rec.valid = is_proper_list_coloring(g, lists, col)


def run_solver(problem: str, solver: str, payload, params: dict | None = None, instance: str = "-", sidecar=None) -> ResultRecord:
    """Solve one parsed instance and return a re-validated record.

    Failures are captured in the record: ``error`` for bad input or seed
    solutions, ``resource`` for refused sizes or node caps, ``timeout`` for
    the wall-clock limit in ``params['timeout']``.
    """
    if problem not in SOLVERS:
        raise ValueError(f"unknown problem {problem!r}")
    if solver not in SOLVERS[problem]:
        raise ValueError(f"solver for {problem} must be one of {SOLVERS[problem]}")
    params = dict(params or {})
    rec = ResultRecord(problem, instance, solver, {k: v for k, v in params.items() if v is not None})
    stats = SearchStats.with_timeout(params.get("timeout"), params.get("node_limit"))
    start = time.perf_counter()
    try:
        if problem == "fast":
            _solve_fast(solver, payload, params, sidecar, rec)
        elif problem == "ilc":
            _solve_ilc(solver, payload, params, stats, rec)
        else:
            if isinstance(payload, Graph):
                payload = LabeledGraph(payload, tuple(v + 1 for v in payload.vertices))
            _solve_graph(problem, solver, payload, params, stats, sidecar, rec)
    except (ResourceLimitError, NodeLimitExceeded) as exc:
        rec.status, rec.error = "resource", str(exc)
    except DeadlineExceeded as exc:
        rec.status, rec.error = "timeout", str(exc)
    except (GraphModError, ValueError, KeyError) as exc:
        rec.status, rec.error = "error", f"{type(exc).__name__}: {exc}"
        rec.valid = False
    rec.nodes = stats.nodes
    rec.wall_time = time.perf_counter() - start
    if rec.status != "ok":
        rec.valid = False
    return rec


def run_fixtures() -> list[ResultRecord]:
    """The four small worked instances with their stated parameters."""
    records = []

    rec = run_solver("hcd", "exact", hcd_example(), {"k": 3}, instance="hcd-example")
    records.append(rec)

    g = anonymity_example()
    rec = run_solver("anon", "lt", g, {"ell": 2}, instance="anonymity-example")
    exact = anon_exact(g, 2, 3)
    rec.extra["optimum"] = None if exact is None else exact.size
    records.append(rec)

    g, seed = local_search_vc_example()
    records.append(
        run_solver("vc", "ls", g, {"k": 3, "cover": sorted(v + 1 for v in seed)}, instance="local-search-vc-example")
    )

    records.append(run_solver("vc", "above-lp", vc_lp_example(), {"k": 3}, instance="vc-lp-example"))
    return records


def bench(corpus_dir, problem: str, solver: str, params: dict | None = None) -> list[ResultRecord]:
    """One record per instance file of a matching format, in file-name order.

    Local-search solvers read their seed solution from ``<stem>.sol`` next to
    the instance unless one is passed in `params`.
    """
    if problem not in PROBLEM_FORMATS:
        raise ValueError(f"unknown problem {problem!r}")
    records = []
    for path in instance_files(corpus_dir):
        fmt = guess_format(path)
        if fmt not in PROBLEM_FORMATS[problem]:
            continue
        try:
            inst = parse_instance(path, fmt)
        except (ParseError, ValueError) as exc:
            records.append(ResultRecord(problem, path.name, solver, dict(params or {}), status="error", error=str(exc)))
            continue
        records.append(run_solver(problem, solver, inst.payload, params, instance=path.name, sidecar=path.with_suffix(".sol")))
    return records

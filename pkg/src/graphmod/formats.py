"""Text formats for instances: edge list, DIMACS, tournaments and list-coloring.

External vertex ids are positive integers. Parsing maps them to dense
internal ids 0..n-1 in increasing label order and keeps the labels, so a
serialized instance parses back to the same object.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .errors import ParseError
from .graph import Graph
from .tournament import Tournament

FORMATS = ("edge_list", "dimacs", "tournament", "listcoloring")

_SUFFIXES = {
    ".edges": "edge_list",
    ".el": "edge_list",
    ".txt": "edge_list",
    ".dimacs": "dimacs",
    ".col": "dimacs",
    ".tour": "tournament",
    ".tournament": "tournament",
    ".lc": "listcoloring",
}


class DuplicateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]  # labels[i] is the external id of internal vertex i

    def label(self, v: int) -> int:
        return self.labels[v]

    def internal(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex label {label}") from None


@dataclass(frozen=True)
class ListColoringData:
    graph: Graph
    lists: dict[int, frozenset[int]]


@dataclass(frozen=True)
class InstanceFile:
    format: str
    payload: Any
    source: str = "<string>"


def _lines(text: str, comment: str):
    """(line number, [(column, token), ...]) for non-empty lines, comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw
        if comment == "#":
            body = raw.split("#", 1)[0]
        elif raw.lstrip().startswith(comment):
            continue
        tokens = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            tokens.append((col + 1, part))
            col += len(part)
        if tokens:
            yield lineno, tokens


def _int(tok, lineno, path, minimum=None):
    col, s = tok
    try:
        value = int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", lineno, col, path) from None
    if minimum is not None and value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value}", lineno, col, path)
    return value


def _add_edge(seen: set, a: int, b: int, lineno: int, col: int, path):
    if a == b:
        raise ParseError(f"self-loop on vertex {a}", lineno, col, path)
    key = (min(a, b), max(a, b))
    if key in seen:
        warnings.warn(f"{path}:{lineno}: duplicate edge {a} {b} ignored", DuplicateEdgeWarning, stacklevel=3)
        return
    seen.add(key)


def _densify(labels: set[int], edges: set) -> LabeledGraph:
    order = tuple(sorted(labels))
    pos = {lab: i for i, lab in enumerate(order)}
    return LabeledGraph(Graph(range(len(order)), [(pos[a], pos[b]) for a, b in edges]), order)


def parse_edge_list(text: str, path: str = "<string>") -> LabeledGraph:
    """One edge "u v" per line; a line with a single id declares an isolated vertex."""
    labels: set[int] = set()
    edges: set = set()
    for lineno, toks in _lines(text, "#"):
        if len(toks) > 2:
            raise ParseError("expected 'u v' or a single vertex id", lineno, toks[2][0], path)
        ids = [_int(t, lineno, path, minimum=1) for t in toks]
        labels.update(ids)
        if len(ids) == 2:
            _add_edge(edges, ids[0], ids[1], lineno, toks[1][0], path)
    return _densify(labels, edges)


def format_edge_list(lg: LabeledGraph | Graph) -> str:
    if isinstance(lg, Graph):
        lg = _relabel(lg)
    g, lab = lg.graph, lg.labels
    out = [f"{lab[u]} {lab[v]}" for u, v in g.edges()]
    out += [f"{lab[v]}" for v in g.vertices if g.degree(v) == 0]
    return "\n".join(out) + ("\n" if out else "")


def _relabel(g: Graph) -> LabeledGraph:
    pos = {v: i for i, v in enumerate(g.vertices)}
    dense = Graph(range(g.n), [(pos[u], pos[v]) for u, v in g.edges()])
    return LabeledGraph(dense, tuple(v + 1 for v in g.vertices))


def parse_dimacs(text: str, path: str = "<string>") -> LabeledGraph:
    n = None
    declared_m = 0
    edges: set = set()
    for lineno, toks in _lines(text, "c"):
        head = toks[0][1]
        if head == "p":
            if n is not None:
                raise ParseError("second problem line", lineno, toks[0][0], path)
            if len(toks) != 4 or toks[1][1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno, toks[0][0], path)
            n = _int(toks[2], lineno, path, minimum=0)
            declared_m = _int(toks[3], lineno, path, minimum=0)
        elif head == "e":
            if n is None:
                raise ParseError("edge before the problem line", lineno, toks[0][0], path)
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno, toks[0][0], path)
            a, b = (_int(t, lineno, path, minimum=1) for t in toks[1:])
            for tok, x in zip(toks[1:], (a, b)):
                if x > n:
                    raise ParseError(f"vertex {x} exceeds n={n}", lineno, tok[0], path)
            _add_edge(edges, a, b, lineno, toks[2][0], path)
        else:
            raise ParseError(f"unknown line type {head!r}", lineno, toks[0][0], path)
    if n is None:
        raise ParseError("missing problem line", 1, 1, path)
    if declared_m != len(edges):
        warnings.warn(f"{path}: header declares {declared_m} edges, found {len(edges)}", stacklevel=2)
    return _densify(set(range(1, n + 1)), edges)


def format_dimacs(lg: LabeledGraph | Graph) -> str:
    g = lg.graph if isinstance(lg, LabeledGraph) else lg
    pos = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = [f"p edge {g.n} {g.m}"] + [f"e {pos[u]} {pos[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _header_n(lines, path):
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected the vertex count", 1, 1, path) from None
    if len(toks) != 1:
        raise ParseError("first line must hold the vertex count only", lineno, toks[0][0], path)
    return _int(toks[0], lineno, path, minimum=0)


def parse_tournament(text: str, path: str = "<string>") -> Tournament:
    """Vertex count, then one arc "u v" (u beats v) per line, 1-based."""
    lines = _lines(text, "#")
    n = _header_n(lines, path)
    arcs = set()
    for lineno, toks in lines:
        if len(toks) != 2:
            raise ParseError("expected an arc 'u v'", lineno, toks[0][0], path)
        a, b = (_int(t, lineno, path, minimum=1) for t in toks)
        for tok, x in zip(toks, (a, b)):
            if x > n:
                raise ParseError(f"vertex {x} exceeds n={n}", lineno, tok[0], path)
        if a == b:
            raise ParseError(f"self-loop on vertex {a}", lineno, toks[1][0], path)
        if (b - 1, a - 1) in arcs:
            raise ParseError(f"both directions given for {a} {b}", lineno, toks[0][0], path)
        if (a - 1, b - 1) in arcs:
            warnings.warn(f"{path}:{lineno}: duplicate arc {a} {b} ignored", DuplicateEdgeWarning, stacklevel=2)
        arcs.add((a - 1, b - 1))
    try:
        return Tournament(n, frozenset(arcs))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1, path) from None


def format_tournament(t: Tournament) -> str:
    lines = [str(t.n)] + [f"{u + 1} {v + 1}" for u, v in sorted(t.arcs)]
    return "\n".join(lines) + "\n"


def parse_listcoloring(text: str, path: str = "<string>") -> ListColoringData:
    """Vertex count n, then n lines with the color list of vertex 1..n, then edges "u v"."""
    lines = _lines(text, "#")
    n = _header_n(lines, path)
    lists = {}
    for v in range(n):
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"missing color list for vertex {v + 1}", 1, 1, path) from None
        lists[v] = frozenset(_int(t, lineno, path) for t in toks)
    edges: set = set()
    for lineno, toks in lines:
        if len(toks) != 2:
            raise ParseError("expected an edge 'u v'", lineno, toks[0][0], path)
        a, b = (_int(t, lineno, path, minimum=1) for t in toks)
        for tok, x in zip(toks, (a, b)):
            if x > n:
                raise ParseError(f"vertex {x} exceeds n={n}", lineno, tok[0], path)
        _add_edge(edges, a, b, lineno, toks[1][0], path)
    return ListColoringData(Graph(range(n), [(a - 1, b - 1) for a, b in edges]), lists)


def format_listcoloring(data: ListColoringData) -> str:
    g = data.graph
    lines = [str(g.n)] + [" ".join(str(x) for x in sorted(data.lists[v])) for v in g.vertices]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


_PARSERS = {
    "edge_list": parse_edge_list,
    "dimacs": parse_dimacs,
    "tournament": parse_tournament,
    "listcoloring": parse_listcoloring,
}

_WRITERS = {
    "edge_list": format_edge_list,
    "dimacs": format_dimacs,
    "tournament": format_tournament,
    "listcoloring": format_listcoloring,
}


def guess_format(path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix not in _SUFFIXES:
        raise ValueError(f"cannot infer the format of {path}; pass it explicitly")
    return _SUFFIXES[suffix]


def parse_text(text: str, fmt: str, path: str = "<string>") -> Any:
    if fmt not in _PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return _PARSERS[fmt](text, path)


def serialize(payload: Any, fmt: str) -> str:
    if fmt not in _WRITERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return _WRITERS[fmt](payload)


def parse_instance(path, fmt: str | None = None) -> InstanceFile:
    fmt = fmt or guess_format(path)
    text = Path(path).read_text()
    return InstanceFile(fmt, parse_text(text, fmt, str(path)), str(path))


def instance_files(directory, suffixes: Sequence[str] | None = None) -> list[Path]:
    """Instance files in a directory, sorted by name; ``.sol`` sidecars are skipped."""
    allowed = set(suffixes) if suffixes is not None else set(_SUFFIXES)
    return sorted(p for p in Path(directory).iterdir() if p.is_file() and p.suffix.lower() in allowed)

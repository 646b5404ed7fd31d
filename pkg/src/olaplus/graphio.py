"""Reading and writing graphs as plain edge lists or DIMACS-style files.

Edge list::

    # comment
    3 2
    1 2
    2 3

DIMACS::

    c comment
    p edge 3 2
    e 1 2
    e 2 3

Vertex labels are the integers ``1..n`` unless ``labels="map"`` is given, in
which case any whitespace-free tokens are accepted and numbered in order of
first appearance.
"""

from __future__ import annotations

from pathlib import Path

from .exceptions import EndpointOutOfRange, ParseError
from .graph import Graph, build_graph

__all__ = ["parse_graph", "parse_graph_text", "parse_labeled_text", "format_graph", "write_graph"]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#c":
            continue
        yield lineno, line.split()


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def _read(text: str):
    """Return ``(n, [(token, token)], [line numbers])``."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("empty input: expected an 'n m' or 'p edge n m' header", 0)
    hline, tokens = header
    dimacs = tokens[0] == "p"
    if dimacs:
        if len(tokens) != 4:
            raise ParseError("DIMACS header must read 'p edge n m'", hline)
        tokens = tokens[2:]
    elif len(tokens) != 2:
        raise ParseError("header must read 'n m'", hline)
    n = _int(tokens[0], hline, "vertex count")
    m = _int(tokens[1], hline, "edge count")
    if n < 0 or m < 0:
        raise ParseError("counts must be nonnegative", hline)
    pairs, where = [], []
    for lineno, tokens in lines:
        if dimacs:
            if tokens[0] != "e" or len(tokens) != 3:
                raise ParseError("expected 'e u v'", lineno)
            tokens = tokens[1:]
        elif len(tokens) != 2:
            raise ParseError("expected 'u v'", lineno)
        pairs.append((tokens[0], tokens[1]))
        where.append(lineno)
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}", where[-1] if where else hline)
    return n, pairs, where


def parse_graph_text(text: str) -> Graph:
    """Parse either format; endpoints must be integers in ``1..n``."""
    n, pairs, where = _read(text)
    edges = [(_int(u, ln, "endpoint"), _int(v, ln, "endpoint")) for (u, v), ln in zip(pairs, where)]
    return build_graph(n, edges, lines=where)


def parse_labeled_text(text: str) -> tuple[Graph, tuple[str, ...]]:
    """Parse with arbitrary labels; returns the graph and the label of each
    vertex id (``labels[v - 1]``).  Labels never seen on an edge are absent,
    so isolated vertices get synthetic names ``"_1"``, ``"_2"``..."""
    n, pairs, where = _read(text)
    ids: dict[str, int] = {}
    edges = []
    for (u, v), ln in zip(pairs, where):
        for tok in (u, v):
            if tok not in ids:
                if len(ids) == n:
                    raise EndpointOutOfRange((u, v), len(edges), ln, f"more than {n} distinct labels")
                ids[tok] = len(ids) + 1
        edges.append((ids[u], ids[v]))
    labels = list(ids)
    labels += [f"_{i}" for i in range(1, n - len(labels) + 1)]
    return build_graph(n, edges, lines=where), tuple(labels)


def parse_graph(path, labels: str = "strict"):
    """Read a graph file.  ``labels="map"`` returns ``(graph, labels)``."""
    text = Path(path).read_text()
    if labels == "map":
        return parse_labeled_text(text)
    if labels != "strict":
        raise ValueError("labels must be 'strict' or 'map'")
    return parse_graph_text(text)


def format_graph(g: Graph, style: str = "edgelist") -> str:
    if style == "edgelist":
        out = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.iter_edges()]
    elif style == "dimacs":
        out = [f"p edge {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.iter_edges()]
    else:
        raise ValueError(f"unknown graph format {style!r}")
    return "\n".join(out) + "\n"


def write_graph(g: Graph, path, style: str = "edgelist") -> None:
    Path(path).write_text(format_graph(g, style))

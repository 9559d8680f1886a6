"""Plain-text serialization for graphs and colorings.

Graph format, bit-exact: one header line ``n m d`` with d in
{oriented, symmetric}, then m edge lines ``u v`` (0-based) in canonical
lexicographic order, LF endings, trailing newline.  A coloring is m lines
``u v c`` in the same edge order as its host graph.
"""
from __future__ import annotations

from .errors import FormatError, GraphShapeError
from .graphs import EdgeColoring, OrientedGraph

_KINDS = {"oriented": False, "symmetric": True}


def serialize_graph(g: OrientedGraph) -> str:
    kind = "symmetric" if g.allow_antiparallel else "oriented"
    lines = [f"{g.n} {g.edge_count} {kind}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _int_field(token: str, line_no: int, col: int, what: str) -> int:
    if not token or not (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
        raise FormatError(f"expected {what}, got {token!r}", line_no, col)
    return int(token)


def parse_graph(text: str) -> OrientedGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty input", 1)
    head = lines[0].split()
    if len(head) != 3:
        raise FormatError("header must be 'n m kind'", 1)
    n = _int_field(head[0], 1, 1, "vertex count")
    m = _int_field(head[1], 1, 2, "edge count")
    if head[2] not in _KINDS:
        raise FormatError(f"kind must be oriented|symmetric, got {head[2]!r}", 1, 3)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", 1)
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}",
                          min(len(lines) + 1, m + 2))
    edges = []
    for i, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", i)
        u = _int_field(parts[0], i, 1, "vertex id")
        v = _int_field(parts[1], i, 2, "vertex id")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}", i)
        edges.append((u, v))
    try:
        return OrientedGraph(n, edges, allow_antiparallel=_KINDS[head[2]])
    except GraphShapeError as exc:
        raise FormatError(str(exc), 1) from exc


def serialize_coloring(g: OrientedGraph, coloring: EdgeColoring) -> str:
    coloring.validate_total(g)
    lines = [f"{u} {v} {coloring.color(u, v)}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_coloring(text: str, g: OrientedGraph,
                   num_colors: int | None = None) -> EdgeColoring:
    """Parse a coloring against its host graph.

    num_colors defaults to the largest color id present (at least 1).
    Color ids below 1 or above an explicit num_colors are format errors, as
    are edges absent from g, duplicates, or missing edges.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    assign: dict[tuple[int, int], int] = {}
    for i, raw in enumerate(lines, start=1):
        parts = raw.split()
        if len(parts) != 3:
            raise FormatError("coloring line must be 'u v c'", i)
        u = _int_field(parts[0], i, 1, "vertex id")
        v = _int_field(parts[1], i, 2, "vertex id")
        c = _int_field(parts[2], i, 3, "color id")
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise FormatError(f"({u},{v}) is not an edge of the host graph", i)
        if (u, v) in assign:
            raise FormatError(f"duplicate edge ({u},{v})", i)
        if c < 1:
            raise FormatError(f"color ids start at 1, got {c}", i, 3)
        if num_colors is not None and c > num_colors:
            raise FormatError(f"color {c} exceeds declared {num_colors}", i, 3)
        assign[(u, v)] = c
    if len(assign) != g.edge_count:
        raise FormatError(
            f"host graph has {g.edge_count} edges, coloring covers {len(assign)}",
            len(lines) + 1)
    if num_colors is None:
        num_colors = max(assign.values(), default=1)
    return EdgeColoring(num_colors, assign)


def write_graph(path, g: OrientedGraph) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_graph(g))


def read_graph(path) -> OrientedGraph:
    with open(path, encoding="ascii") as fh:
        return parse_graph(fh.read())


def write_coloring(path, g: OrientedGraph, coloring: EdgeColoring) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_coloring(g, coloring))


def read_coloring(path, g: OrientedGraph,
                  num_colors: int | None = None) -> EdgeColoring:
    with open(path, encoding="ascii") as fh:
        return parse_coloring(fh.read(), g, num_colors)

"""Core graph types.

Vertices are always 0..n-1.  Adjacency is kept as one Python int bitmask per
vertex in each direction, so direction queries, neighborhood unions and
set-restricted scans are single big-int operations.  Graphs are immutable
after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ColoringError, GraphShapeError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class OrientedGraph:
    """A finite digraph without self loops.

    With ``allow_antiparallel=False`` (the default) at most one of (u, v) and
    (v, u) may be present; with ``True`` both directions are legal, which is
    how complete symmetric digraphs and per-color subgraphs of them are
    represented.
    """

    __slots__ = ("n", "allow_antiparallel", "_out", "_in", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 allow_antiparallel: bool = False):
        if n < 0:
            raise GraphShapeError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.allow_antiparallel = allow_antiparallel
        self._out = [0] * n
        self._in = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphShapeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphShapeError(f"self loop at vertex {u}")
            if self._out[u] >> v & 1:
                continue
            if not allow_antiparallel and (self._out[v] >> u & 1):
                raise GraphShapeError(
                    f"antiparallel pair ({u},{v})/({v},{u}) in an oriented graph")
            self._out[u] |= 1 << v
            self._in[v] |= 1 << u
            m += 1
        self._m = m

    # -- queries ---------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def density(self) -> float:
        return self._m / (self.n * self.n) if self.n else 0.0

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def out_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._out[v]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._in[v]))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges sorted lexicographically; this is the canonical order
        used by the text format and by deterministic algorithms."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self._out[u]):
                out.append((u, v))
        return out

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices: Iterable[int]) -> tuple["OrientedGraph", list[int]]:
        """Induced subgraph on `vertices`.

        Returns (graph, new_to_old) where the subgraph's vertex i corresponds
        to new_to_old[i] in self.  Vertex order is ascending.
        """
        keep = sorted(set(vertices))
        index = {old: new for new, old in enumerate(keep)}
        kmask = mask_of(keep)
        edges = []
        for old_u in keep:
            for old_v in iter_bits(self._out[old_u] & kmask):
                edges.append((index[old_u], index[old_v]))
        return OrientedGraph(len(keep), edges, self.allow_antiparallel), keep

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "OrientedGraph":
        """Same vertex set, different edge set (used for per-color classes)."""
        return OrientedGraph(self.n, edges, self.allow_antiparallel)

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return (self.n == other.n
                and self.allow_antiparallel == other.allow_antiparallel
                and self._out == other._out)

    def __hash__(self):
        return hash((self.n, self.allow_antiparallel, tuple(self._out)))

    def __repr__(self) -> str:
        kind = "symmetric" if self.allow_antiparallel else "oriented"
        return f"OrientedGraph(n={self.n}, m={self._m}, {kind})"


def complete_symmetric(n: int) -> OrientedGraph:
    """The complete symmetric digraph: both directions of every pair."""
    edges = [(u, v) for u in range(n) for v in range(n) if u != v]
    return OrientedGraph(n, edges, allow_antiparallel=True)


def transitive_tournament(n: int) -> OrientedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return OrientedGraph(n, edges)


def is_tournament(g: OrientedGraph) -> bool:
    """Exactly one direction present for every vertex pair."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) == g.has_edge(v, u):
                return False
    return True


@dataclass(frozen=True)
class Tournament:
    """An orientation of the complete graph; validated on construction."""

    underlying: OrientedGraph

    def __post_init__(self):
        if not is_tournament(self.underlying):
            raise GraphShapeError("underlying graph is not a tournament")

    @property
    def n(self) -> int:
        return self.underlying.n


def as_graph(g) -> OrientedGraph:
    """Accept either a bare OrientedGraph or a Tournament wrapper."""
    return g.underlying if isinstance(g, Tournament) else g


@dataclass(frozen=True)
class DirectedPath:
    """A simple directed path given by its vertex sequence.

    The empty path (no vertices) is permitted and has length 0; so does the
    single-vertex path.  `length` counts edges.
    """

    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        object.__setattr__(self, "vertices", tuple(vertices))
        seen = set(self.vertices)
        if len(seen) != len(self.vertices):
            raise GraphShapeError(f"path repeats a vertex: {self.vertices}")

    @property
    def length(self) -> int:
        return max(0, len(self.vertices) - 1)

    def is_valid_in(self, g: OrientedGraph) -> bool:
        vs = self.vertices
        if any(not (0 <= v < g.n) for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


class EdgeColoring:
    """A total map from a host graph's edges to colors 1..num_colors."""

    __slots__ = ("num_colors", "_assign")

    def __init__(self, num_colors: int,
                 assignment: Iterable[tuple[tuple[int, int], int]] | dict = ()):
        if num_colors < 1:
            raise ColoringError(f"need at least one color, got {num_colors}")
        self.num_colors = num_colors
        items = assignment.items() if isinstance(assignment, dict) else assignment
        self._assign = {}
        for (u, v), c in items:
            if not (1 <= c <= num_colors):
                raise ColoringError(f"color {c} for edge ({u},{v}) outside 1..{num_colors}")
            self._assign[(u, v)] = c

    def color(self, u: int, v: int) -> int:
        return self._assign[(u, v)]

    def get(self, u: int, v: int, default=None):
        return self._assign.get((u, v), default)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._assign.items())

    def __len__(self) -> int:
        return len(self._assign)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.num_colors == other.num_colors and self._assign == other._assign

    def validate_total(self, g: OrientedGraph) -> None:
        """Every edge of g colored, and nothing else."""
        edges = set(g.edges())
        got = set(self._assign)
        missing = edges - got
        extra = got - edges
        if missing:
            raise ColoringError(f"{len(missing)} uncolored edges, e.g. {sorted(missing)[0]}")
        if extra:
            raise ColoringError(f"{len(extra)} colored non-edges, e.g. {sorted(extra)[0]}")

    def class_graph(self, g: OrientedGraph, c: int) -> OrientedGraph:
        """Subgraph of g holding exactly the edges of color c (same ids)."""
        edges = [e for e, col in self._assign.items() if col == c and g.has_edge(*e)]
        return OrientedGraph(g.n, edges, allow_antiparallel=True)

    def restricted_to(self, edges: Iterable[tuple[int, int]],
                      num_colors: int | None = None) -> "EdgeColoring":
        sub = {e: self._assign[e] for e in edges}
        return EdgeColoring(num_colors or self.num_colors, sub)


class VertexColoring:
    """A map from every vertex to a class id 1..num_classes."""

    __slots__ = ("colors", "num_classes")

    def __init__(self, colors: Sequence[int], num_classes: int | None = None):
        self.colors = tuple(colors)
        top = max(self.colors, default=0)
        self.num_classes = num_classes if num_classes is not None else top
        if any(not (1 <= c <= self.num_classes) for c in self.colors):
            raise ColoringError("vertex class id outside 1..num_classes")

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def classes(self) -> list[list[int]]:
        """Vertex lists per class id, 0-indexed list of classes 1..k."""
        out = [[] for _ in range(self.num_classes)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def is_proper(self, g: OrientedGraph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())

"""Longest-path primitives: linear DP on DAGs, bitmask DP for small graphs,
and the level decomposition that underpins the coloring constructions."""
from __future__ import annotations

from .errors import CyclicGraphError, SizeLimitError
from .graphs import DirectedPath, OrientedGraph, iter_bits

EXACT_VERTEX_LIMIT = 16


def find_cycle(g: OrientedGraph) -> list[int] | None:
    """Some directed cycle as a vertex list, or None if g is acyclic."""
    WHITE, GRAY, BLACK = 0, 1, 2
    state = [WHITE] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if state[root] != WHITE:
            continue
        stack = [(root, iter(g.out_neighbors(root)))]
        state[root] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == GRAY:
                    cycle = [w]
                    cur = v
                    while cur != w:
                        cycle.append(cur)
                        cur = parent[cur]
                    cycle.reverse()
                    return cycle
                if state[w] == WHITE:
                    state[w] = GRAY
                    parent[w] = v
                    stack.append((w, iter(g.out_neighbors(w))))
                    advanced = True
                    break
            if not advanced:
                state[v] = BLACK
                stack.pop()
    return None


def topological_order(g: OrientedGraph) -> list[int]:
    """Kahn's algorithm; raises CyclicGraphError with a witness cycle."""
    indeg = [g.in_degree(v) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    order = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in g.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != g.n:
        raise CyclicGraphError("graph contains a directed cycle", find_cycle(g))
    return order


def is_acyclic(g: OrientedGraph) -> bool:
    try:
        topological_order(g)
        return True
    except CyclicGraphError:
        return False


def level_decomposition(g: OrientedGraph) -> list[list[int]]:
    """Partition an acyclic graph's vertices by longest-path-ending length.

    Level j holds the vertices whose longest incoming path has exactly j
    edges; every edge goes from a strictly lower level to a higher one.
    """
    order = topological_order(g)
    level = [0] * g.n
    for v in order:
        for w in g.out_neighbors(v):
            if level[v] + 1 > level[w]:
                level[w] = level[v] + 1
    top = max(level, default=0)
    out = [[] for _ in range(top + 1)]
    for v in range(g.n):
        out[level[v]].append(v)
    return out


def longest_path_dag(g: OrientedGraph) -> DirectedPath:
    """Longest directed path of an acyclic graph, linear-time DP."""
    order = topological_order(g)
    dist = [0] * g.n
    pred = [-1] * g.n
    for v in order:
        for w in g.out_neighbors(v):
            if dist[v] + 1 > dist[w]:
                dist[w] = dist[v] + 1
                pred[w] = v
    if g.n == 0:
        return DirectedPath(())
    end = max(range(g.n), key=lambda v: dist[v])
    path = [end]
    while pred[path[-1]] != -1:
        path.append(pred[path[-1]])
    path.reverse()
    return DirectedPath(path)


def longest_path_length_masks(adj_out: list[int], n: int) -> int:
    """Length (edges) of the longest simple path, given out-adjacency masks.

    Subset DP: reach[mask] is the bitmask of vertices at which some simple
    path covering exactly `mask` can end.  Only populated masks are touched,
    which keeps sparse inputs fast.
    """
    if n == 0:
        return 0
    reach = {}
    for v in range(n):
        reach[1 << v] = 1 << v
    best = 0
    frontier = list(reach.items())
    while frontier:
        nxt = {}
        for mask, ends in frontier:
            for v in iter_bits(ends):
                new = adj_out[v] & ~mask
                for u in iter_bits(new):
                    m2 = mask | (1 << u)
                    cur = nxt.get(m2, 0) | reach.get(m2, 0)
                    if not (cur >> u & 1):
                        nxt[m2] = cur | (1 << u)
        if not nxt:
            break
        for m2, ends in nxt.items():
            reach[m2] = reach.get(m2, 0) | ends
        best += 1
        frontier = list(nxt.items())
    return best


def longest_path_exact(g: OrientedGraph, limit: int = EXACT_VERTEX_LIMIT) -> DirectedPath:
    """Longest simple path by subset DP; works on cyclic inputs.

    Exponential in the vertex count, so inputs above `limit` vertices are
    rejected.  Ties resolve toward lexicographically smaller vertex
    sequences because expansion scans ascending ids.
    """
    if g.n > limit:
        raise SizeLimitError(f"exact search limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return DirectedPath(())
    adj = [g.out_mask(v) for v in range(g.n)]
    # reach[mask] = endpoints of simple paths covering mask, layered by |mask|
    reach = [dict() for _ in range(g.n + 1)]
    for v in range(g.n):
        reach[1][1 << v] = 1 << v
    best_mask, best_end, best_size = 1, 0, 1
    for size in range(1, g.n):
        layer = reach[size]
        if not layer:
            break
        target = reach[size + 1]
        for mask, ends in layer.items():
            for v in iter_bits(ends):
                new = adj[v] & ~mask
                for u in iter_bits(new):
                    m2 = mask | (1 << u)
                    target[m2] = target.get(m2, 0) | (1 << u)
        if target and size + 1 > best_size:
            best_size = size + 1
            best_mask = min(target)
            best_end = next(iter_bits(target[best_mask]))
    # reconstruct by walking backwards through the layers
    path = [best_end]
    mask, v = best_mask, best_end
    for size in range(best_size, 1, -1):
        prev_mask = mask ^ (1 << v)
        ends = reach[size - 1].get(prev_mask, 0)
        for u in iter_bits(ends):
            if g.has_edge(u, v):
                path.append(u)
                mask, v = prev_mask, u
                break
        else:  # pragma: no cover - DP bookkeeping guarantees a predecessor
            raise AssertionError("path reconstruction lost its predecessor")
    path.reverse()
    return DirectedPath(path)


def longest_path_auto(g: OrientedGraph, limit: int = EXACT_VERTEX_LIMIT) -> DirectedPath:
    """DAG fast path when acyclic, otherwise exact subset DP."""
    if is_acyclic(g):
        return longest_path_dag(g)
    return longest_path_exact(g, limit)

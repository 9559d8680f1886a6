"""Exact reference answers for small colored digraphs.

Everything here is brute force with pruning, meant to check the
constructive modules and to pin expected values in tests, not to scale.
The two central questions: how long is the longest monochromatic path of a
given coloring, and what is the best (minimal) value an adversary can
force over all colorings with a given number of colors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG
from .errors import BudgetExceededError, SizeLimitError
from .graphs import DirectedPath, EdgeColoring, OrientedGraph
from .paths import (
    EXACT_VERTEX_LIMIT,
    is_acyclic,
    longest_path_dag,
    longest_path_exact,
    longest_path_length_masks,
)

# exact subset DP on a cyclic color class is only attempted up to this many
# support vertices; larger cyclic classes abort instead of hanging
_CLASS_SUPPORT_LIMIT = 22


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: object  # DirectedPath, EdgeColoring, or None
    explored: int

    def to_dict(self) -> dict:
        if isinstance(self.witness, DirectedPath):
            witness = list(self.witness.vertices)
        elif isinstance(self.witness, EdgeColoring):
            witness = [[u, v, c] for (u, v), c in self.witness.items()]
        else:
            witness = None
        return {"value": self.value, "witness": witness, "explored": self.explored}


def longest_mono_path(g: OrientedGraph, coloring: EdgeColoring,
                      limit: int = EXACT_VERTEX_LIMIT) -> dict[int, OracleResult]:
    """Exact longest path per color class, as {color: result}.

    Acyclic classes are handled in linear time at any size.  Cyclic classes
    are compressed to their support (vertices with an incident edge of that
    color) and solved by subset DP; support beyond `limit` raises
    SizeLimitError rather than returning an estimate.
    """
    coloring.validate_total(g)
    out: dict[int, OracleResult] = {}
    for color in range(1, coloring.num_colors + 1):
        cg = coloring.class_graph(g, color)
        if is_acyclic(cg):
            p = longest_path_dag(cg)
            out[color] = OracleResult(p.length, p, cg.n)
            continue
        support = [v for v in range(cg.n) if cg.degree(v) > 0]
        if len(support) > limit:
            raise SizeLimitError(
                f"color {color} has cyclic support {len(support)} > {limit}")
        sub, back = cg.subgraph(support)
        p = longest_path_exact(sub, limit)
        lifted = DirectedPath(back[v] for v in p.vertices)
        out[color] = OracleResult(lifted.length, lifted, 1 << sub.n)
    return out


def max_mono_path(g: OrientedGraph, coloring: EdgeColoring,
                  limit: int = EXACT_VERTEX_LIMIT) -> int:
    """Longest monochromatic path over all colors of one coloring."""
    per_color = longest_mono_path(g, coloring, limit)
    return max((r.value for r in per_color.values()), default=0)


def _class_exceeds(edges: list[tuple[int, int]], bound: int) -> bool:
    """Does the digraph on these edges contain a path longer than `bound`?

    Cheap filters first: fewer than bound+1 edges can never exceed, and an
    acyclic class is measured by DAG DP at any size.
    """
    if len(edges) <= bound:
        return False
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    adj = [0] * n
    indeg = [0] * n
    for u, v in edges:
        a, b = index[u], index[v]
        if not (adj[a] >> b) & 1:
            adj[a] |= 1 << b
            indeg[b] += 1
    # Kahn: acyclic -> longest path by level DP
    order = [v for v in range(n) if indeg[v] == 0]
    deg = list(indeg)
    head = 0
    dist = [0] * n
    while head < len(order):
        u = order[head]
        head += 1
        m = adj[u]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if dist[u] + 1 > dist[w]:
                dist[w] = dist[u] + 1
            deg[w] -= 1
            if deg[w] == 0:
                order.append(w)
    if len(order) == n:
        return max(dist) > bound
    if n > _CLASS_SUPPORT_LIMIT:
        raise SizeLimitError(
            f"cyclic class with support {n} > {_CLASS_SUPPORT_LIMIT}")
    return longest_path_length_masks(adj, n) > bound


def _decision_search(g: OrientedGraph, q: int, bound: int, budget: int,
                     spent: int) -> tuple[EdgeColoring | None, int]:
    """A q-coloring of g with every monochromatic path <= bound, or None.

    Colors are interchangeable, so edge i may only use colors up to one
    past the highest color already used (canonical-form symmetry
    reduction).  `spent` nodes are already charged against the budget.
    """
    edges = g.edges()
    m = len(edges)
    assign: dict[tuple[int, int], int] = {}
    class_edges: list[list[tuple[int, int]]] = [[] for _ in range(q + 1)]
    nodes = spent

    def dfs(pos: int, used: int) -> bool:
        nonlocal nodes
        if pos == m:
            return True
        e = edges[pos]
        for c in range(1, min(q, used + 1) + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(
                    f"coloring search exceeded {budget} nodes")
            assign[e] = c
            class_edges[c].append(e)
            ok = not _class_exceeds(class_edges[c], bound)
            if ok and dfs(pos + 1, max(used, c)):
                return True
            class_edges[c].pop()
            del assign[e]
        return False

    if dfs(0, 0):
        return EdgeColoring(q, dict(assign)), nodes
    return None, nodes


def _budget_precheck(m: int, q: int, budget: int) -> None:
    if q ** m > budget * math.factorial(min(q, m) if m else 1):
        raise BudgetExceededError(
            f"{q}^{m} colorings dwarf the budget of {budget} nodes")


def min_max_mono_path(g: OrientedGraph, q: int,
                      budget: int | None = None) -> OracleResult:
    """Smallest achievable longest-monochromatic-path over all q-colorings.

    Exhaustive (with symmetry and pruning); the witness is a coloring
    attaining the minimum.  Intended for |E| around 20 or less at q=2.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if budget is None:
        budget = DEFAULT_CONFIG.coloring_budget
    m = g.edge_count
    if m == 0:
        return OracleResult(0, EdgeColoring(q, {}), 0)
    _budget_precheck(m, q, budget)
    spent = 0
    for bound in range(1, g.n):
        witness, spent = _decision_search(g, q, bound, budget, spent)
        if witness is not None:
            return OracleResult(bound, witness, spent)
    raise AssertionError("a path of length n-1 can never be exceeded")


def arrowing_check(g: OrientedGraph, n_target: int, q: int,
                   budget: int | None = None) -> tuple[bool, EdgeColoring | None]:
    """Does every q-coloring of g contain a monochromatic path of length
    (in edges) at least n_target?  Equivalent to min_max_mono_path(g, q)
    >= n_target.  Returns (answer, witness) with a refuting coloring when
    the answer is False."""
    if n_target < 0:
        raise ValueError("n_target must be >= 0")
    if q < 1:
        raise ValueError("q must be >= 1")
    if n_target == 0:
        return True, None
    if budget is None:
        budget = DEFAULT_CONFIG.coloring_budget
    _budget_precheck(g.edge_count, q, budget)
    witness, _ = _decision_search(g, q, n_target - 1, budget, 0)
    if witness is not None:
        return False, witness
    return True, None

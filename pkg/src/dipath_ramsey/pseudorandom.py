"""Tournament generators and k-pseudorandomness machinery.

A digraph is k-pseudorandom when every two disjoint k-sets A, B span at
least one edge from A to B.  This module measures that quantity exactly
(small n), refutes it by sampling (large n), and implements the two path
constructions whose guarantees are conditional on it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .errors import BudgetExceededError, GraphShapeError, ThreadingError
from .graphs import (
    DirectedPath,
    OrientedGraph,
    Tournament,
    as_graph,
    iter_bits,
    mask_of,
)

# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniform random tournament; identical (n, seed) gives identical edges."""
    if n < 1:
        raise GraphShapeError("need n >= 1")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Tournament(OrientedGraph(n, edges))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def paley_tournament(p: int) -> Tournament:
    """Quadratic-residue tournament on Z_p, for prime p congruent 3 mod 4.

    Edge i -> j exactly when (i - j) mod p is a nonzero square; p = 3 mod 4
    makes -1 a non-square, so exactly one direction exists per pair.
    """
    if not is_prime(p):
        raise GraphShapeError(f"{p} is not prime")
    if p % 4 != 3:
        raise GraphShapeError(f"{p} is not congruent to 3 mod 4")
    residues = {(x * x) % p for x in range(1, p)}
    edges = [(i, j) for i in range(p) for j in range(p)
             if i != j and (i - j) % p in residues]
    return Tournament(OrientedGraph(p, edges))


def random_oriented_graph(n: int, m: int, seed: int) -> OrientedGraph:
    """Random oriented graph with exactly m edges (no antiparallel pairs)."""
    if m > n * (n - 1) // 2:
        raise GraphShapeError(f"m={m} exceeds the oriented maximum for n={n}")
    rng = random.Random(seed)
    chosen = set()
    edges = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in chosen:
            continue
        chosen.add(key)
        edges.append((u, v))
    return OrientedGraph(n, edges)


def random_digraph(n: int, m: int, seed: int) -> OrientedGraph:
    """Random non-simple digraph with exactly m edges (antiparallel allowed)."""
    if m > n * (n - 1):
        raise GraphShapeError(f"m={m} exceeds the digraph maximum for n={n}")
    rng = random.Random(seed)
    chosen = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((u, v))
    return OrientedGraph(n, sorted(chosen), allow_antiparallel=True)


# ---------------------------------------------------------------------------
# pseudorandomness measurement
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PseudorandomnessReport:
    mode: str  # "exact" | "sampled"
    k_star: int | None = None
    counterexample: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    trials: int = 0
    vacuous: bool = False
    explored: int = 0

    def to_dict(self) -> dict:
        out = {"mode": self.mode, "trials": self.trials, "vacuous": self.vacuous,
               "explored": self.explored}
        if self.k_star is not None:
            out["k_star"] = self.k_star
        if self.counterexample is not None:
            out["counterexample"] = [list(self.counterexample[0]),
                                     list(self.counterexample[1])]
        return out


def _violating_pair(g: OrientedGraph, k: int):
    """First (A, B) with |A|=|B|=k and no A->B edge, scanning A ascending.

    Only A needs enumeration: a partner B exists exactly when at least k
    vertices lie outside A and all of A's out-neighborhoods.
    """
    n = g.n
    out = [g.out_mask(v) for v in range(n)]
    full = g.full_mask()
    for a_tuple in itertools.combinations(range(n), k):
        closed = mask_of(a_tuple)
        for v in a_tuple:
            closed |= out[v]
        free = full & ~closed
        if free.bit_count() >= k:
            b = list(itertools.islice(iter_bits(free), k))
            return a_tuple, tuple(b)
    return None


def pseudorandomness_exact(g, budget: int = 2_000_000) -> PseudorandomnessReport:
    """Minimal k_star such that g is k_star-pseudorandom, by upward scan.

    Monotone: once the property holds at k it holds for larger sizes, so the
    scan stops at the first passing k.  Sizes past floor(n/2) admit no
    disjoint pair at all; reaching them is reported as vacuous.
    """
    g = as_graph(g)
    n = g.n
    explored = 0
    last_violation = None
    k = 1
    while True:
        if k > n // 2:
            return PseudorandomnessReport(
                mode="exact", k_star=k, counterexample=last_violation,
                vacuous=True, explored=explored)
        cost = comb(n, k)
        if explored + cost > budget:
            raise BudgetExceededError(
                f"subset budget exhausted at k={k} ({explored + cost} > {budget}); "
                "fall back to sampled mode")
        explored += cost
        violation = _violating_pair(g, k)
        if violation is None:
            return PseudorandomnessReport(
                mode="exact", k_star=k, counterexample=last_violation,
                vacuous=False, explored=explored)
        last_violation = violation
        k += 1


def refute_pseudorandomness(g, k: int, trials: int, seed: int):
    """Monte Carlo search for a violating pair; None means none was found.

    One-sided: a returned pair is a certain refutation, while None only
    suggests the property holds.
    """
    g = as_graph(g)
    n = g.n
    if k < 1 or k > n // 2:
        raise ValueError(f"k must be in [1, {n // 2}] for n={n}")
    rng = random.Random(seed)
    for _ in range(trials):
        picked = rng.sample(range(n), 2 * k)
        a, b = picked[:k], picked[k:]
        b_mask = mask_of(b)
        if all(g.out_mask(v) & b_mask == 0 for v in a):
            return tuple(sorted(a)), tuple(sorted(b))
    return None


# ---------------------------------------------------------------------------
# conditional path constructions
# ---------------------------------------------------------------------------


def dfs_long_path(g, k: int) -> DirectedPath:
    """Long path via depth-first search, tracking the explored/unvisited split.

    The stack always spans a directed path.  The path is snapshotted at the
    single moment the explored set and the unvisited set have equal size
    (where pseudorandomness forces the stack to be large), and the deepest
    stack overall is kept too; the longer of the two is returned.  For a
    k-pseudorandom input the result has length >= n - 2k + 1.

    Vertices are explored in ascending id order for reproducibility.
    """
    g = as_graph(g)
    n = g.n
    if n == 0:
        return DirectedPath(())
    t_mask = g.full_mask()  # unvisited
    s_count = 0
    stack: list[int] = []
    snapshot: tuple[int, ...] | None = None
    best: tuple[int, ...] = ()

    def note_state():
        nonlocal snapshot, best
        if len(stack) > len(best):
            best = tuple(stack)
        t_count = t_mask.bit_count()
        if snapshot is None and s_count == t_count:
            snapshot = tuple(stack)

    note_state()
    while s_count < n:
        if not stack:
            lowest = t_mask & -t_mask
            v = lowest.bit_length() - 1
            t_mask &= ~lowest
            stack.append(v)
            note_state()
            continue
        v = stack[-1]
        candidates = g.out_mask(v) & t_mask
        if candidates:
            lowest = candidates & -candidates
            u = lowest.bit_length() - 1
            t_mask &= ~lowest
            stack.append(u)
        else:
            stack.pop()
            s_count += 1
        note_state()

    chosen = best if snapshot is None or len(best) >= len(snapshot) else snapshot
    return DirectedPath(chosen)


def thread_path_through_sets(g: OrientedGraph, k: int,
                             sets: list[tuple[int, ...]]) -> DirectedPath:
    """Path visiting one vertex from each set, in order.

    Works backwards: the good vertices of a set are those with an edge into
    the good part of the next set.  A k-pseudorandom graph keeps every good
    set large when all sets have >= 2k vertices; on failure the 1-based
    index of the set whose good part emptied is reported.
    """
    t = len(sets)
    if t == 0:
        return DirectedPath(())
    seen: set[int] = set()
    for idx, s in enumerate(sets):
        if not s:
            raise ThreadingError(f"set {idx + 1} is empty", idx + 1)
        overlap = seen & set(s)
        if overlap:
            raise ThreadingError(f"sets are not disjoint at {sorted(overlap)[0]}", idx + 1)
        seen |= set(s)
    good = [0] * t
    good[t - 1] = mask_of(sets[t - 1])
    for j in range(t - 2, -1, -1):
        nxt = good[j + 1]
        mask = 0
        for v in sets[j]:
            if g.out_mask(v) & nxt:
                mask |= 1 << v
        if mask == 0:
            raise ThreadingError(
                f"no vertex of set {j + 1} reaches the good part of set {j + 2}",
                j + 1)
        good[j] = mask
    path = []
    lowest = good[0] & -good[0]
    v = lowest.bit_length() - 1
    path.append(v)
    for j in range(1, t):
        options = g.out_mask(v) & good[j]
        lowest = options & -options
        v = lowest.bit_length() - 1
        path.append(v)
    return DirectedPath(path)

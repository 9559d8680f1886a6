#!/usr/bin/env python3
"""Exhaustive and randomized audit of the two-path cycle decomposition.

Checks every 2-coloring of the complete symmetric digraph for t <= 5
(over 10^6 instances at t=5), then random colorings for t up to 48.
Each decomposition is validated structurally and its best segment checked
against the floor(t/2) promise.  Also reports how often each construction
layer (plain insert, repair insert, pair repair, exhaustive fallback)
closed the cycle, by instrumenting the internal helpers.

Exits nonzero on the first violation.
"""
import argparse
import random
import sys
from collections import Counter

from dipath_ramsey import EdgeColoring, complete_symmetric, raynaud
from dipath_ramsey import classic

LAYERS = ("single_insert", "repair_insert", "pair_repair", "exhaustive")


class LayerCounter:
    """Wrap the private construction layers with hit counters."""

    def __init__(self):
        self.hits = Counter()
        self._orig = {}

    def __enter__(self):
        for name, attr in (("single_insert", "_try_single_insert"),
                           ("repair_insert", "_try_repair_insert"),
                           ("pair_repair", "_try_pair_repair"),
                           ("exhaustive", "_exhaustive_cycle")):
            orig = getattr(classic, attr)
            self._orig[attr] = orig

            def wrapped(*args, _orig=orig, _name=name, **kw):
                out = _orig(*args, **kw)
                if out:
                    self.hits[_name] += 1
                return out

            setattr(classic, attr, wrapped)
        return self

    def __exit__(self, *exc):
        for attr, orig in self._orig.items():
            setattr(classic, attr, orig)
        return False


def check_one(t: int, coloring: EdgeColoring) -> None:
    dec = raynaud(t, coloring)
    dec.validate(coloring)
    seg, _ = dec.best_segment()
    if seg.length < t // 2:
        raise AssertionError(
            f"t={t}: best segment {seg.length} < {t // 2}"
            f" for coloring {dict(coloring.items())}")


def exhaustive(t: int) -> int:
    host = complete_symmetric(t)
    edges = host.edges()
    for bits in range(1 << len(edges)):
        coloring = EdgeColoring(2, {e: 1 + ((bits >> i) & 1)
                                    for i, e in enumerate(edges)})
        check_one(t, coloring)
    return 1 << len(edges)


def randomized(t: int, samples: int, rng: random.Random) -> int:
    edges = complete_symmetric(t).edges()
    for _ in range(samples):
        coloring = EdgeColoring(2, {e: rng.randint(1, 2) for e in edges})
        check_one(t, coloring)
    return samples


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exhaustive", type=int, default=5,
                    help="largest t checked over ALL colorings (default 5)")
    ap.add_argument("--samples", type=int, default=200,
                    help="random colorings per medium t (default 200)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    total = 0
    with LayerCounter() as counter:
        for t in range(1, args.max_exhaustive + 1):
            n = exhaustive(t)
            total += n
            print(f"t={t}: {n} colorings exhaustively verified")
        for t in (6, 9, 14, 25, 34, 48):
            n = randomized(t, args.samples, rng)
            total += n
            print(f"t={t}: {n} random colorings verified")
    print(f"\n{total} decompositions valid; construction layer hits:")
    for layer in LAYERS:
        print(f"  {layer:>14}: {counter.hits.get(layer, 0)}")
    return 0


if __name__ == "__main__":
    try:
        sys.exit(main())
    except AssertionError as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        sys.exit(1)

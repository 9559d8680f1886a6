"""Tunable constants shared by the coloring and path-extraction pipelines.

The asymptotic arguments behind the constructions fix their constants for
astronomically large inputs.  Desk-scale runs need the same machinery with
gentler numbers, so every constant lives here and `relax` marks a config
whose values differ from the faithful defaults.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, replace


@dataclass(frozen=True)
class ConstantsConfig:
    # acyclic-set extraction constant (size target c*log(n)/(eps*log(1/eps)))
    c: float = 0.1
    # headline lower-bound constant; None derives the default from c and q
    c1: float | None = None
    # scales the (n/2q)^q low-degree split threshold
    degree_exponent_factor: float = 1.0
    # scales the (n/16q)^{2q} residue-edge stop rule
    termination_edge_threshold: float = 1.0
    # True when constants were overridden for desk-scale runs
    relax: bool = False
    # two-color extraction stage factors, in units of k vertices per block
    block_factor: int = 7
    path_floor_factor: int = 5
    cycle_floor_factor: int = 3
    # exhaustive-search budgets
    exact_path_limit: int = 16
    coloring_budget: int = 1 << 22
    subset_budget: int = 2_000_000

    def __post_init__(self) -> None:
        for name in ("c", "degree_exponent_factor", "termination_edge_threshold"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.c1 is not None and self.c1 <= 0:
            raise ValueError("c1 must be positive when given")
        for name in ("block_factor", "path_floor_factor", "cycle_floor_factor",
                     "exact_path_limit", "coloring_budget", "subset_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")

    # -- derived quantities ------------------------------------------------

    def c1_value(self, q: int) -> float:
        """Lower-bound constant for q+1 colors; derived from c unless pinned."""
        if self.c1 is not None:
            return self.c1
        return self.c ** (1.0 / q) / (8 * (2 * q) ** q * (16 * q * q) ** (q + 1))

    def degree_threshold(self, n: int, q: int) -> float:
        """Total-degree cutoff separating the low-degree part."""
        return (self.degree_exponent_factor * n / (2 * q)) ** q

    def termination_threshold(self, n: int, q: int) -> float:
        """Residue edge count below which family extraction stops."""
        return self.termination_edge_threshold * (n / (16 * q)) ** (2 * q)

    def acyclic_target(self, n: int, eps: float) -> float:
        """Acyclic-set size promised at density eps on n vertices."""
        if n <= 1:
            return 1.0
        if eps <= 0:
            return float(n)
        if eps >= 0.25:
            return math.floor(math.log2(n)) + 1
        return self.c * math.log2(n) / (eps * math.log2(1 / eps))

    @property
    def red_divisor(self) -> int:
        """c_R: red-branch guarantee is n/(c_R * k)."""
        return 4 * self.block_factor

    @property
    def blue_divisor(self) -> int:
        """c_B: blue-branch guarantee is n/c_B."""
        return 4 * self.block_factor

    def red_threshold(self, n: int, k: int) -> int:
        """Dichotomy threshold for the red subgraph, ceil(n/(2*f*k))."""
        return max(1, math.ceil(n / (2 * self.block_factor * k)))

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ConstantsConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**data)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ConstantsConfig":
        return cls.from_dict(json.loads(text))

    @classmethod
    def relaxed(cls, **overrides) -> "ConstantsConfig":
        """Desk-scale defaults: small-degree split and block sizes that stay
        non-degenerate for n in the tens-to-hundreds range."""
        base = dict(
            relax=True,
            degree_exponent_factor=0.5,
            termination_edge_threshold=16.0,
            block_factor=4,
            path_floor_factor=2,
            cycle_floor_factor=1,
        )
        base.update(overrides)
        base["relax"] = True
        return cls(**base)

    def with_overrides(self, **overrides) -> "ConstantsConfig":
        return replace(self, **overrides)


DEFAULT_CONFIG = ConstantsConfig()

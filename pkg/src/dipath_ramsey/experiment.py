"""Experiment manifests and the deterministic run harness.

A manifest fully determines a run: generator model and sizes, the module
under test, constants, repetition count, and output paths.  Per-run seeds
are hashes of (experiment id, size, run index), so neither execution order
nor worker count can change a single row.  CSV rows carry only derived
quantities (bit-for-bit reproducible); wall-clock time lives in the JSON
aggregate alongside the effective constants.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .adversary import check_partition, theorem1_adversary
from .builder import multicolor_path_finder, two_color_path_finder
from .config import DEFAULT_CONFIG, ConstantsConfig
from .errors import (
    BudgetExceededError,
    DipathError,
    ManifestError,
    SizeLimitError,
)
from .graphs import EdgeColoring, OrientedGraph
from .oracle import longest_mono_path
from .pseudorandom import (
    paley_tournament,
    pseudorandomness_exact,
    random_digraph,
    random_oriented_graph,
    random_tournament,
    refute_pseudorandomness,
)

_KINDS = ("prcheck", "adversary", "builder")
_MODELS = ("tournament", "paley", "oriented", "digraph")

WORKERS_ENV = "DIPATH_RAMSEY_WORKERS"


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    sizes: tuple[int, ...]
    density: float = 0.1

    def __post_init__(self):
        if self.model not in _MODELS:
            raise ManifestError(f"unknown generator model {self.model!r}")
        if any(n < 0 for n in self.sizes):
            raise ManifestError("sizes must be nonnegative")
        if not 0.0 <= self.density <= 1.0:
            raise ManifestError("density must lie in [0, 1]")

    def to_dict(self) -> dict:
        return {"model": self.model, "sizes": list(self.sizes),
                "density": self.density}


@dataclass(frozen=True)
class ExperimentManifest:
    experiment_id: str
    kind: str
    generator: GeneratorSpec
    config: ConstantsConfig = DEFAULT_CONFIG
    repetitions: int = 1
    params: dict = field(default_factory=dict)
    csv_path: str = "results.csv"
    json_path: str = "results.json"

    def __post_init__(self):
        if not self.experiment_id:
            raise ManifestError("experiment_id must be nonempty")
        if self.kind not in _KINDS:
            raise ManifestError(
                f"kind must be one of {_KINDS}, got {self.kind!r}")
        if self.repetitions < 0:
            raise ManifestError("repetitions must be nonnegative")

    def to_dict(self) -> dict:
        return {
            "experiment_id": self.experiment_id,
            "kind": self.kind,
            "generator": self.generator.to_dict(),
            "config": self.config.to_dict(),
            "repetitions": self.repetitions,
            "params": dict(self.params),
            "csv_path": self.csv_path,
            "json_path": self.json_path,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentManifest":
        if not isinstance(data, dict):
            raise ManifestError("manifest must be a JSON object")
        try:
            gen = data["generator"]
            spec = GeneratorSpec(model=gen["model"],
                                 sizes=tuple(int(n) for n in gen["sizes"]),
                                 density=float(gen.get("density", 0.1)))
            cfg = (ConstantsConfig.from_dict(data["config"])
                   if "config" in data else DEFAULT_CONFIG)
            return cls(
                experiment_id=str(data["experiment_id"]),
                kind=str(data["kind"]),
                generator=spec,
                config=cfg,
                repetitions=int(data.get("repetitions", 1)),
                params=dict(data.get("params", {})),
                csv_path=str(data.get("csv_path", "results.csv")),
                json_path=str(data.get("json_path", "results.json")),
            )
        except ManifestError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ManifestError(f"bad manifest field: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExperimentManifest":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ManifestError(f"manifest is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def hash(self) -> str:
        canonical = json.dumps(self.to_dict(), sort_keys=True,
                               separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass(frozen=True)
class ResultRecord:
    manifest_hash: str
    kind: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    failures: int
    aggregates: dict
    wall_clock_seconds: float

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "manifest_hash": self.manifest_hash,
            "kind": self.kind,
            "rows": len(self.rows),
            "failures": self.failures,
            "aggregates": self.aggregates,
            "wall_clock_seconds": self.wall_clock_seconds,
        }


def derive_seed(experiment_id: str, n: int, run_index: int) -> int:
    digest = hashlib.sha256(f"{experiment_id}:{n}:{run_index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _generate(spec: GeneratorSpec, n: int, seed: int) -> OrientedGraph:
    if spec.model == "tournament":
        return random_tournament(n, seed).underlying
    if spec.model == "paley":
        return paley_tournament(n).underlying
    if spec.model == "oriented":
        m = round(spec.density * n * n)
        return random_oriented_graph(n, m, seed)
    m = round(spec.density * n * n)
    return random_digraph(n, m, seed)


_COLUMNS = {
    "prcheck": ("n", "run", "seed", "mode", "k_star", "vacuous",
                "counterexample", "trials", "ok"),
    "adversary": ("n", "run", "seed", "q", "num_colors", "x_bound",
                  "residue_bound", "covered_bound", "total_bound",
                  "measured", "ok"),
    "builder": ("n", "run", "seed", "colors", "k", "branch", "color",
                "length", "guarantee_active", "ok"),
}


def _random_coloring(g: OrientedGraph, colors: int, seed: int) -> EdgeColoring:
    rng = random.Random(seed)
    return EdgeColoring(colors,
                        {e: rng.randint(1, colors) for e in g.edges()})


def _run_one(manifest: ExperimentManifest, n: int, run_index: int) -> tuple:
    seed = derive_seed(manifest.experiment_id, n, run_index)
    g = _generate(manifest.generator, n, seed)
    params = manifest.params
    cfg = manifest.config
    if manifest.kind == "prcheck":
        mode = params.get("mode", "exact")
        if mode == "exact":
            report = pseudorandomness_exact(g, budget=cfg.subset_budget)
            cex = "" if report.counterexample is None else _cex_str(report)
            return (n, run_index, seed, report.mode,
                    report.k_star if report.k_star is not None else "",
                    int(report.vacuous), cex, report.trials, 1)
        k = int(params.get("k", max(1, math.ceil(2 * math.log2(max(2, n))))))
        trials = int(params.get("trials", 1000))
        found = refute_pseudorandomness(g, k, trials, seed)
        cex = "" if found is None else _pair_str(found)
        return (n, run_index, seed, "sampled", k, 0, cex, trials, 1)
    if manifest.kind == "adversary":
        q = int(params.get("q", 1))
        result = theorem1_adversary(g, q, cfg)
        part = result.partition
        ok = 1
        try:
            check_partition(g, result, cfg, q)
        except AssertionError:
            ok = 0
        measured: object = ""
        try:
            per_color = longest_mono_path(g, result.coloring)
            measured = max((r.value for r in per_color.values()), default=0)
            if measured > part.total_bound:
                ok = 0
        except (SizeLimitError, BudgetExceededError):
            measured = ""
        return (n, run_index, seed, q, result.coloring.num_colors,
                part.x_bound, part.residue_bound, part.covered_bound,
                part.total_bound, measured, ok)
    colors = int(params.get("colors", 2))
    k = int(params.get("k", max(1, math.ceil(2 * math.log2(max(2, n))))))
    coloring = _random_coloring(g, colors, seed ^ 0x5DEECE66D)
    if colors == 2:
        cert = two_color_path_finder(g, coloring, k, cfg)
    else:
        n_target = int(params.get("n_target", 2))
        cert = multicolor_path_finder(g, coloring, k, n_target, cfg)
    ok = 1
    try:
        cert.validate(g, coloring)
    except DipathError:
        ok = 0
    return (n, run_index, seed, colors, k, cert.branch, cert.color,
            cert.path.length, int(cert.guarantee_active), ok)


def _cex_str(report) -> str:
    a, b = report.counterexample
    return _pair_str((a, b))


def _pair_str(pair) -> str:
    a, b = pair
    return ";".join(",".join(str(v) for v in side) for side in (a, b))


def _worker(args: tuple) -> tuple:
    manifest_json, n, run_index = args
    manifest = ExperimentManifest.from_json(manifest_json)
    return _run_one(manifest, n, run_index)


def run_experiment(manifest: ExperimentManifest,
                   write_outputs: bool = True) -> ResultRecord:
    """Execute every (size, repetition) cell and persist CSV + JSON.

    Row order is sorted by (n, run index) regardless of how workers finish,
    so identical manifests always produce identical CSV bytes.
    """
    start = time.monotonic()
    tasks = [(n, r) for n in manifest.generator.sizes
             for r in range(manifest.repetitions)]
    workers = int(os.environ.get(WORKERS_ENV, "1") or "1")
    if workers > 1 and len(tasks) > 1:
        payload = manifest.to_json()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_worker,
                                 [(payload, n, r) for n, r in tasks]))
    else:
        rows = [_run_one(manifest, n, r) for n, r in tasks]
    rows.sort(key=lambda row: (row[0], row[1]))
    columns = _COLUMNS[manifest.kind]
    ok_col = columns.index("ok")
    failures = sum(1 for row in rows if not row[ok_col])
    aggregates = _aggregate(manifest.kind, columns, rows)
    record = ResultRecord(
        manifest_hash=manifest.hash(),
        kind=manifest.kind,
        columns=columns,
        rows=tuple(rows),
        failures=failures,
        aggregates=aggregates,
        wall_clock_seconds=round(time.monotonic() - start, 6),
    )
    if write_outputs:
        with open(manifest.csv_path, "w", encoding="ascii", newline="") as fh:
            fh.write(record.csv_text())
        payload = {
            "manifest": manifest.to_dict(),
            "record": record.to_dict(),
            "config": manifest.config.to_dict(),
        }
        with open(manifest.json_path, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return record


def _aggregate(kind: str, columns: tuple[str, ...], rows: list) -> dict:
    by_n: dict[int, list] = {}
    for row in rows:
        by_n.setdefault(row[0], []).append(row)
    numeric = {"prcheck": "k_star", "adversary": "total_bound",
               "builder": "length"}[kind]
    idx = columns.index(numeric)
    out = {}
    for n in sorted(by_n):
        values = [row[idx] for row in by_n[n]
                  if isinstance(row[idx], (int, float))]
        ok_idx = columns.index("ok")
        out[str(n)] = {
            "runs": len(by_n[n]),
            "failures": sum(1 for row in by_n[n] if not row[ok_idx]),
            numeric: {
                "min": min(values) if values else None,
                "max": max(values) if values else None,
                "mean": (sum(values) / len(values)) if values else None,
            },
        }
    return out

"""Text formats, manifests, and the experiment runner."""
import json
import random

import pytest

from dipath_ramsey import (
    EdgeColoring,
    ExperimentManifest,
    FormatError,
    GeneratorSpec,
    ManifestError,
    OrientedGraph,
    complete_symmetric,
    derive_seed,
    max_mono_path,
    min_max_mono_path,
    parse_coloring,
    parse_graph,
    random_digraph,
    run_experiment,
    serialize_coloring,
    serialize_graph,
    theorem1_adversary,
)


# -- graph text format -----------------------------------------------------

def test_graph_roundtrip_three_cycle():
    g = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    text = serialize_graph(g)
    h = parse_graph(text)
    assert h.n == g.n and h.edges() == g.edges()
    assert serialize_graph(h) == text


def test_graph_roundtrip_symmetric():
    g = complete_symmetric(4)
    text = serialize_graph(g)
    assert "symmetric" in text.splitlines()[0]
    h = parse_graph(text)
    assert h.edges() == g.edges()


def test_graph_roundtrip_random_bulk():
    rng = random.Random(0)
    for i in range(10_000):
        n = rng.randint(0, 8)
        m = rng.randint(0, max(0, n * (n - 1)))
        g = random_digraph(n, m, i) if n else OrientedGraph(0)
        text = serialize_graph(g)
        assert serialize_graph(parse_graph(text)) == text


def test_graph_parse_bad_header():
    with pytest.raises(FormatError) as exc:
        parse_graph("3 1\n0 1\n")
    assert exc.value.line == 1


def test_graph_parse_unknown_kind():
    with pytest.raises(FormatError):
        parse_graph("3 1 undirected\n0 1\n")


def test_graph_parse_count_mismatch():
    with pytest.raises(FormatError) as exc:
        parse_graph("3 2 oriented\n0 1\n")
    assert exc.value.line >= 1


def test_graph_parse_out_of_range_edge():
    with pytest.raises(FormatError) as exc:
        parse_graph("2 1 oriented\n0 5\n")
    assert exc.value.line == 2


def test_graph_parse_antiparallel_in_oriented():
    text = "2 2 oriented\n0 1\n1 0\n"
    with pytest.raises(FormatError):
        parse_graph(text)


# -- coloring text format --------------------------------------------------

def test_coloring_roundtrip():
    g = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    col = EdgeColoring(2, {(0, 1): 1, (1, 2): 2, (2, 0): 1})
    text = serialize_coloring(g, col)
    back = parse_coloring(text, g)
    assert back.items() == col.items()
    assert serialize_coloring(g, back) == text


def test_coloring_roundtrip_random_bulk():
    rng = random.Random(1)
    for i in range(300):
        n = rng.randint(2, 8)
        m = rng.randint(1, n * (n - 1))
        g = random_digraph(n, m, i)
        q = rng.randint(1, 4)
        col = EdgeColoring(q, {e: rng.randint(1, q) for e in g.edges()})
        text = serialize_coloring(g, col)
        back = parse_coloring(text, g, num_colors=q)
        assert back.items() == col.items()


def test_coloring_parse_non_edge():
    g = OrientedGraph(3, [(0, 1)])
    with pytest.raises(FormatError):
        parse_coloring("0 2 1\n", g)


def test_coloring_parse_duplicate():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(FormatError) as exc:
        parse_coloring("0 1 1\n0 1 2\n1 2 1\n", g)
    assert exc.value.line == 2


def test_coloring_parse_color_out_of_range():
    g = OrientedGraph(2, [(0, 1)])
    with pytest.raises(FormatError):
        parse_coloring("0 1 3\n", g, num_colors=2)
    with pytest.raises(FormatError):
        parse_coloring("0 1 0\n", g)


def test_coloring_parse_count_mismatch():
    g = OrientedGraph(3, [(0, 1), (1, 2)])
    with pytest.raises(FormatError):
        parse_coloring("0 1 1\n", g)


# -- manifests -------------------------------------------------------------

def _tiny_manifest(tmp_path, kind="prcheck", **params):
    return ExperimentManifest(
        experiment_id="tiny",
        kind=kind,
        generator=GeneratorSpec("tournament", (8, 10)),
        repetitions=2,
        params=params,
        csv_path=str(tmp_path / "out.csv"),
        json_path=str(tmp_path / "out.json"),
    )


def test_manifest_json_roundtrip(tmp_path):
    m = _tiny_manifest(tmp_path)
    again = ExperimentManifest.from_json(m.to_json())
    assert again == m
    assert again.hash() == m.hash()


def test_manifest_hash_changes_with_content(tmp_path):
    m = _tiny_manifest(tmp_path)
    other = ExperimentManifest.from_dict(
        {**m.to_dict(), "experiment_id": "tiny2"})
    assert other.hash() != m.hash()


def test_manifest_rejects_bad_model():
    with pytest.raises(ManifestError):
        GeneratorSpec("erdos", (4,))


def test_manifest_rejects_bad_kind(tmp_path):
    with pytest.raises(ManifestError):
        _tiny_manifest(tmp_path, kind="nonsense")


def test_manifest_rejects_bad_density():
    with pytest.raises(ManifestError):
        GeneratorSpec("oriented", (4,), density=1.5)


def test_manifest_rejects_garbage_json():
    with pytest.raises(ManifestError):
        ExperimentManifest.from_json("{not json")


def test_derive_seed_stable():
    assert derive_seed("tiny", 8, 0) == derive_seed("tiny", 8, 0)
    assert derive_seed("tiny", 8, 0) != derive_seed("tiny", 8, 1)
    assert derive_seed("tiny", 8, 0) != derive_seed("other", 8, 0)


# -- the runner ------------------------------------------------------------

def test_run_experiment_prcheck(tmp_path):
    m = _tiny_manifest(tmp_path, mode="exact")
    record = run_experiment(m)
    assert record.ok
    assert record.columns[:3] == ("n", "run", "seed")
    assert "k_star" in record.columns
    k_idx = record.columns.index("k_star")
    assert all(int(row[k_idx]) >= 1 for row in record.rows)
    assert len(record.rows) == 4  # 2 sizes x 2 repetitions
    assert (tmp_path / "out.csv").exists()
    assert (tmp_path / "out.json").exists()
    payload = json.loads((tmp_path / "out.json").read_text())
    assert payload["manifest"]["experiment_id"] == "tiny"
    assert payload["record"]["manifest_hash"] == m.hash()


def test_run_experiment_deterministic(tmp_path):
    m = _tiny_manifest(tmp_path, mode="exact")
    first = run_experiment(m, write_outputs=False)
    second = run_experiment(m, write_outputs=False)
    assert first.csv_text() == second.csv_text()
    assert "wall" not in first.csv_text()


def test_run_experiment_rows_sorted(tmp_path):
    m = _tiny_manifest(tmp_path, mode="exact")
    record = run_experiment(m, write_outputs=False)
    keys = [(int(r[0]), int(r[1])) for r in record.rows]
    assert keys == sorted(keys)


def test_run_experiment_empty_sizes(tmp_path):
    m = ExperimentManifest(
        experiment_id="empty", kind="prcheck",
        generator=GeneratorSpec("tournament", ()),
        csv_path=str(tmp_path / "e.csv"), json_path=str(tmp_path / "e.json"))
    record = run_experiment(m, write_outputs=False)
    assert record.ok and not record.rows


def test_run_experiment_adversary_kind(tmp_path):
    m = ExperimentManifest(
        experiment_id="adv", kind="adversary",
        generator=GeneratorSpec("oriented", (12, 20), density=0.08),
        repetitions=2, params={"q": 1},
        csv_path=str(tmp_path / "a.csv"), json_path=str(tmp_path / "a.json"))
    record = run_experiment(m)
    assert record.ok
    cols = record.columns
    for row in record.rows:
        data = dict(zip(cols, row))
        assert int(data["total_bound"]) >= 0
        if data["measured"] != "":
            assert int(data["measured"]) <= int(data["total_bound"])


def test_run_experiment_builder_kind(tmp_path):
    m = ExperimentManifest(
        experiment_id="bld", kind="builder",
        generator=GeneratorSpec("tournament", (24,)),
        repetitions=3, params={"colors": 2, "k": 2},
        csv_path=str(tmp_path / "b.csv"), json_path=str(tmp_path / "b.json"))
    record = run_experiment(m)
    assert record.ok
    branch_idx = record.columns.index("branch")
    assert all(row[branch_idx] for row in record.rows)


def test_run_experiment_parallel_matches_serial(tmp_path, monkeypatch):
    m = _tiny_manifest(tmp_path, mode="exact")
    serial = run_experiment(m, write_outputs=False)
    monkeypatch.setenv("DIPATH_RAMSEY_WORKERS", "2")
    parallel = run_experiment(m, write_outputs=False)
    assert parallel.csv_text() == serial.csv_text()


def test_aggregates_present(tmp_path):
    m = _tiny_manifest(tmp_path, mode="exact")
    record = run_experiment(m, write_outputs=False)
    assert record.aggregates
    for key, agg in record.aggregates.items():
        assert agg["runs"] == 2
        assert agg["failures"] == 0


# -- adversary vs oracle cross-check ---------------------------------------

def test_adversary_never_beats_oracle_exhaustive():
    """Every oriented graph on 4 vertices with at most 5 edges: the
    pipeline coloring is measurable and lands between the true optimum
    and its own claimed bound."""
    import itertools
    pairs = [(u, v) for u in range(4) for v in range(4) if u < v]
    failures = 0
    for orient_bits in range(3 ** 6):
        states, x = [], orient_bits
        for _ in range(6):
            states.append(x % 3)
            x //= 3
        edges = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                edges.append((u, v))
            elif s == 2:
                edges.append((v, u))
        if len(edges) > 5:
            continue
        g = OrientedGraph(4, edges)
        result = theorem1_adversary(g, 1)
        measured = max_mono_path(g, result.coloring)
        optimum = min_max_mono_path(g, 2).value
        if not (optimum <= measured <= result.partition.total_bound):
            failures += 1
    assert failures == 0

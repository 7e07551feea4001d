import json

import numpy as np
import pytest

from torustutte import WeightAssignment, gen_grid, uniform_weights
from torustutte.cli import main
from torustutte.serialize import (
    dump_json,
    load_json,
    mesh_to_json,
    weights_to_json,
)


@pytest.fixture
def workspace(tmp_path):
    """Mesh, grid placement, and uniform weights written to disk."""
    mesh, placement = gen_grid(3)
    paths = {
        "mesh": tmp_path / "mesh.json",
        "weights": tmp_path / "weights.json",
        "dir": tmp_path,
    }
    dump_json(mesh_to_json(mesh), paths["mesh"])
    dump_json(weights_to_json(mesh, uniform_weights(mesh)), paths["weights"])
    return mesh, placement, paths


def run(capsys, argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_gen_and_validate(tmp_path, capsys):
    mesh_path = tmp_path / "m.json"
    place_path = tmp_path / "p.json"
    code, out = run(capsys, [
        "gen", "--size", 4, "--out-mesh", mesh_path,
        "--out-placement", place_path,
    ])
    assert code == 0
    assert json.loads(out.out)["vertex_count"] == 16
    code, out = run(capsys, [
        "validate", "--mesh", mesh_path, "--placement", place_path,
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["valid"] is True
    assert doc["edge_count"] == 48
    assert doc["generator_lengths"] == [4, 4]
    assert doc["embedding"]["is_embedding"] is True
    assert doc["embedding"]["degree"] == 1


def test_gen_perturb_seed_determinism(tmp_path, capsys):
    a, b, c = (tmp_path / n for n in ("a.json", "b.json", "c.json"))
    for path, seed in ((a, 5), (b, 5), (c, 6)):
        code, _ = run(capsys, [
            "gen", "--size", 3, "--out-mesh", tmp_path / "m.json",
            "--out-placement", path, "--perturb", 0.1, "--seed", seed,
        ])
        assert code == 0
    assert a.read_text() == b.read_text()
    assert a.read_text() != c.read_text()


def test_embed_energy_mvc_cycle(workspace, tmp_path, capsys):
    mesh, placement, paths = workspace
    out_place = tmp_path / "placed.json"
    code, out = run(capsys, [
        "embed", "--mesh", paths["mesh"], "--weights", paths["weights"],
        "--out-placement", out_place,
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["is_embedding"] is True
    coords = np.array(load_json(out_place)["coords"])
    assert np.allclose(coords, placement.coords, atol=1e-12)

    code, out = run(capsys, [
        "energy", "--mesh", paths["mesh"], "--weights", paths["weights"],
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["admissible"] is True
    assert doc["energy"] <= 1e-20
    assert doc["tol"] == 1e-10

    out_weights = tmp_path / "mvc.json"
    code, out = run(capsys, [
        "mvc", "--mesh", paths["mesh"], "--placement", out_place,
        "--out-weights", out_weights,
    ])
    assert code == 0
    assert json.loads(out.out)["imbalance"] <= 1e-12
    assert out_weights.exists()


def test_embed_rejects_non_admissible(workspace, tmp_path, capsys):
    mesh, _, paths = workspace
    values = np.ones(54)
    values[mesh.edge_index[(0, 1)]] = 5.0
    bad = tmp_path / "bad.json"
    dump_json(weights_to_json(mesh, WeightAssignment(values)), bad)
    code, out = run(capsys, [
        "embed", "--mesh", paths["mesh"], "--weights", bad,
        "--out-placement", tmp_path / "never.json",
    ])
    assert code == 2
    assert "error:" in out.err


def test_retract_flow(workspace, tmp_path, capsys):
    mesh, _, paths = workspace
    values = np.ones(54)
    values[mesh.edge_index[(0, 1)]] = 5.0
    bad = tmp_path / "bad.json"
    dump_json(weights_to_json(mesh, WeightAssignment(values)), bad)
    trace_path = tmp_path / "trace.jsonl"
    out_weights = tmp_path / "fixed.json"
    code, out = run(capsys, [
        "retract", "--mesh", paths["mesh"], "--weights", bad,
        "--trace", trace_path, "--out-weights", out_weights,
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["status"] == "converged"
    assert doc["energy"] <= 1e-10
    records = [json.loads(l) for l in trace_path.read_text().splitlines()]
    assert len(records) == doc["steps"] + 1
    energies = [r["energy"] for r in records]
    assert all(b < a for a, b in zip(energies, energies[1:]))
    # the retracted weights embed cleanly now
    code, out = run(capsys, [
        "embed", "--mesh", paths["mesh"], "--weights", out_weights,
        "--out-placement", tmp_path / "after.json",
    ])
    assert code == 0
    assert json.loads(out.out)["is_embedding"] is True


def test_retract_budget_exit_code(workspace, tmp_path, capsys):
    mesh, _, paths = workspace
    values = np.ones(54)
    values[mesh.edge_index[(0, 1)]] = 5.0
    bad = tmp_path / "bad.json"
    dump_json(weights_to_json(mesh, WeightAssignment(values)), bad)
    code, out = run(capsys, [
        "retract", "--mesh", paths["mesh"], "--weights", bad,
        "--max-steps", 2,
    ])
    assert code == 3
    assert json.loads(out.out)["status"] == "budget_exceeded"


def test_morph_command(workspace, tmp_path, capsys):
    _, _, paths = workspace
    pa, pb = tmp_path / "pa.json", tmp_path / "pb.json"
    for path, seed in ((pa, 1), (pb, 2)):
        run(capsys, [
            "gen", "--size", 3, "--out-mesh", tmp_path / "m.json",
            "--out-placement", path, "--perturb", 0.1, "--seed", seed,
        ])
    out_dir = tmp_path / "frames"
    code, out = run(capsys, [
        "morph", "--mesh", paths["mesh"], "--from", pa, "--to", pb,
        "--steps", 5, "--out-dir", out_dir, "--svg",
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["passed"] is True
    assert doc["frames"] == 5
    frames = sorted(out_dir.glob("frame_*.json"))
    assert len(frames) == 5
    assert len(sorted(out_dir.glob("frame_*.svg"))) == 5
    first = np.array(load_json(frames[0])["coords"])
    start = np.array(load_json(pa)["coords"])
    assert np.abs(first - start).max() <= 1e-6


def test_index_command(workspace, tmp_path, capsys):
    _, _, paths = workspace
    place = tmp_path / "p.json"
    run(capsys, [
        "gen", "--size", 3, "--out-mesh", tmp_path / "m.json",
        "--out-placement", place, "--perturb", 0.1, "--seed", 4,
    ])
    code, out = run(capsys, [
        "index", "--mesh", paths["mesh"], "--placement", place,
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["nonvanishing"] is True
    assert doc["total"] == 0
    assert doc["vertex_indices"] == [0] * 9
    assert doc["face_indices"] == [0] * 18
    # explicit direction on the exact grid: vertical edges vanish
    grid_place = tmp_path / "exact.json"
    run(capsys, [
        "gen", "--size", 3, "--out-mesh", tmp_path / "m.json",
        "--out-placement", grid_place,
    ])
    code, out = run(capsys, [
        "index", "--mesh", paths["mesh"], "--placement", grid_place,
        "--direction", 0.0,
    ])
    assert code == 0
    doc = json.loads(out.out)
    assert doc["nonvanishing"] is False
    assert len(doc["degenerate_edges"]) == 9


def test_render_command(workspace, tmp_path, capsys):
    _, _, paths = workspace
    place = tmp_path / "p.json"
    run(capsys, [
        "gen", "--size", 3, "--out-mesh", tmp_path / "m.json",
        "--out-placement", place,
    ])
    svg_path = tmp_path / "torus.svg"
    code, out = run(capsys, [
        "render", "--mesh", paths["mesh"], "--placement", place,
        "--out", svg_path, "--size", 400, "--labels",
    ])
    assert code == 0
    text = svg_path.read_text()
    assert text.startswith("<svg")
    assert 'width="400"' in text


def test_validate_bad_mesh_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    dump_json({"vertex_count": 3, "faces": [[0, 1, 2]], "shifts": []}, bad)
    code, out = run(capsys, ["validate", "--mesh", bad])
    assert code == 2
    assert "error:" in out.err


def test_missing_file_exit_code(tmp_path, capsys):
    code, out = run(capsys, ["validate", "--mesh", tmp_path / "nope.json"])
    assert code == 2


def test_quiet_suppresses_output(workspace, capsys):
    _, _, paths = workspace
    code, out = run(capsys, ["validate", "--mesh", paths["mesh"], "--quiet"])
    assert code == 0
    assert out.out == ""

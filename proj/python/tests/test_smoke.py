import json
import os
import pathlib
import shutil
import subprocess
from fractions import Fraction

import pytest

import sfcplace

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def load(name):
    return sfcplace.Scenario.from_bundle((DATA / name).read_text())


def test_one_vnf_takes_cheapest_flavor():
    out = sfcplace.solve(load("one_vnf.json"))
    assert out["status"] == "Optimal"
    assert out["objective"] == Fraction(3)
    assert out["lower_bound"] == Fraction(3)
    assert out["placement"]["vnfs"][0]["flavor"] == "small"


def test_insecure_instance_is_infeasible():
    out = sfcplace.solve(load("insecure.json"))
    assert out["status"] == "Infeasible"
    assert out["placement"] is None
    assert out["objective"] is None


def test_model_tags_and_lp():
    model = sfcplace.Model(load("insecure.json"))
    counts = model.tag_counts()
    assert counts["eq33"] == model.count_tag("eq33") == 2
    assert sum(counts.values()) == model.num_constraints
    lp = model.to_lp()
    assert lp.startswith("\\") and "Subject To" in lp and lp.rstrip().endswith("End")
    assert "eq33" in sfcplace.base_tags()


def test_input_errors_are_value_errors():
    doc = json.loads((DATA / "one_vnf.json").read_text())
    doc["sfcs"][0]["vnfs"][0]["conflicts"] = ["ghost"]
    with pytest.raises(ValueError, match=r"conflicts\[0\]"):
        sfcplace.Scenario.from_bundle(json.dumps(doc))


def test_generated_instances_match_brute_force():
    for seed in range(1, 16):
        s = sfcplace.generate(seed=seed, clouds=1 + seed % 3, sfcs=1 + seed % 2, chain_min=1, chain_max=3,
                              types=2, flavors=2, conflict_prob=0.3)
        bnb = sfcplace.solve(s)
        bf = sfcplace.brute_force(s)
        assert (bnb["status"] == "Optimal") == bf["feasible"]
        if bf["feasible"]:
            assert bnb["objective"] == bf["objective"]
            assert sfcplace.validate(s, bnb["placement"]) == []


def test_validate_reports_tampering():
    s = load("one_vnf.json")
    placement = sfcplace.solve(s)["placement"]
    placement["vnfs"][0]["flavor"] = "big"
    kinds = {kind for kind, _, _ in sfcplace.validate(s, placement)}
    assert "cost-mismatch" in kinds


def test_generate_is_deterministic():
    a = sfcplace.generate(seed=3, clouds=5).to_bundle()
    b = sfcplace.generate(seed=3, clouds=5).to_bundle()
    assert a == b
    assert sfcplace.generate(seed=4, clouds=5).to_bundle() != a


def test_sweep_rows():
    rows, summary = sfcplace.sweep("sfcs", [1, 2], reps=2, seed=7, clouds=4)
    assert len(rows.strip().splitlines()) == 5
    assert len(summary.strip().splitlines()) == 3
    assert rows.splitlines()[0] == "axis_value,rep,seed,status,cost,mean_delay_ms,nodes_explored,wall_ms"
    with pytest.raises(ValueError):
        sfcplace.sweep("diagonal", [1, 2], reps=2)


def _highs_backend():
    script = os.environ.get("SFCPLACE_HIGHS_BACKEND")
    if not script:
        pytest.skip("SFCPLACE_HIGHS_BACKEND not set")
    pytest.importorskip("highspy")
    return script


def test_lp_export_matches_external_milp_solver():
    script = _highs_backend()
    for seed in range(1, 21):
        s = sfcplace.generate(seed=seed, clouds=1 + seed % 3, sfcs=1 + seed % 2, chain_min=1, chain_max=3,
                              types=2, flavors=2, conflict_prob=0.3)
        model = sfcplace.Model(s)
        ours = sfcplace.solve(model)
        theirs = sfcplace.solve(model, backend="external:" + script)
        assert ours["status"] == theirs["status"], seed
        assert ours["objective"] == theirs["objective"], seed


def test_cli_solve_json_is_one_document(tmp_path):
    cli = os.environ.get("SFC_PLACER_CLI") or shutil.which("sfc-placer")
    if not cli:
        pytest.skip("sfc-placer not available")
    out = subprocess.run([cli, "solve", "--bundle", str(DATA / "one_vnf.json"), "--json"],
                         capture_output=True, text=True, check=True)
    doc = json.loads(out.stdout)
    assert doc["status"] == "Optimal"
    assert doc["residual_capacity"]["edge"] == {"cpu": 6, "ram": 12, "storage": 80}

"""CLI behavior: subcommands, exit codes, output formats, figures."""
import csv
import json

import numpy as np
import pytest

from conftest import cycle_dataset_obj
from netrank.cli import main
from netrank.events import prob_zero
from netrank.report import fmt


def run_cli(args):
    return main([str(a) for a in args])


# ----------------------------------------------------------------------- rank

def test_rank_summary_ends_with_ordering(cycle_dataset_path, reference_weights_path,
                                         tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = run_cli(["rank", cycle_dataset_path, "--weights", reference_weights_path,
                  "--output", out])
    assert rc == 0
    stdout = capsys.readouterr().out
    assert stdout.rstrip().splitlines()[-1] == "1. D  2. B  3. C  4. A"
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["order"] == ["D", "B", "C", "A"]
    assert report["weights"]["source"] == f"file:{reference_weights_path}"


def test_rank_entropy_mode(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = run_cli(["rank", cycle_dataset_path, "--output", out])
    assert rc == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["weights"]["source"] == "entropy"
    assert sum(report["weights"]["values"]) == pytest.approx(1.0, abs=1e-12)
    # cycles are vertex transitive: densities uniform, H = log2(8) exactly
    for net in report["networks"]:
        for crit in ("success", "fail"):
            assert report["events"][net][crit]["unpredictability"] == pytest.approx(3.0, abs=1e-9)
    assert report["order"] == ["D", "B", "C", "A"]


def test_rank_config_echo_reflects_flags(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = run_cli(["rank", cycle_dataset_path, "--output", out,
                  "--gamma", "2.5", "--beta", "0.5", "--alpha", "2.0",
                  "--epsilon", "1e-7", "--cmax", "1e5"])
    assert rc == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["config"] == {
        "gamma": 2.5, "beta": 0.5, "epsilon": 1e-7,
        "alpha_renyi": 2.0, "c_max": 1e5, "weight_mode": "entropy",
    }


def test_rank_deterministic_report_body(cycle_dataset_path, tmp_path, capsys):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run_cli(["rank", cycle_dataset_path, "--output", out1]) == 0
    assert run_cli(["rank", cycle_dataset_path, "--output", out2]) == 0
    bodies = []
    for path in (out1, out2):
        obj = json.loads(path.read_text(encoding="utf-8"))
        obj.pop("meta", None)
        bodies.append(json.dumps(obj, sort_keys=True))
    assert bodies[0] == bodies[1]


def test_rank_single_network_exit_one(tmp_path, capsys):
    obj = cycle_dataset_obj()
    obj["networks"] = obj["networks"][:1]
    path = tmp_path / "one.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    rc = run_cli(["rank", path, "--output", tmp_path / "r.json"])
    assert rc == 1
    assert "ranking requires at least 2 networks" in capsys.readouterr().err


def test_rank_missing_weight_file_exit_two(cycle_dataset_path, tmp_path, capsys):
    missing = tmp_path / "nope.json"
    rc = run_cli(["rank", cycle_dataset_path, "--weights", missing,
                  "--output", tmp_path / "r.json"])
    assert rc == 2
    assert str(missing) in capsys.readouterr().err


def test_rank_invalid_dataset_exit_one(tmp_path, capsys):
    obj = cycle_dataset_obj()
    obj["networks"][0]["events"]["success"][0][0] = 1.0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    rc = run_cli(["rank", path, "--output", tmp_path / "r.json"])
    assert rc == 1
    assert "nonzero diagonal" in capsys.readouterr().err


def test_rank_bad_config_exit_one(cycle_dataset_path, tmp_path, capsys):
    rc = run_cli(["rank", cycle_dataset_path, "--alpha", "1.0",
                  "--output", tmp_path / "r.json"])
    assert rc == 1
    assert "Rényi order must differ from 1" in capsys.readouterr().err


def test_rank_dump_intermediates(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = run_cli(["rank", cycle_dataset_path, "--output", out, "--dump-intermediates"])
    assert rc == 0
    dump_dir = tmp_path / "report_intermediates"
    files = sorted(p.name for p in dump_dir.glob("*.csv"))
    assert files == [f"cdr_{net}_{crit}.csv"
                     for net in ("A", "B", "C", "D") for crit in ("fail", "success")]


def test_rank_figures(cycle_dataset_path, tmp_path, capsys):
    figdir = tmp_path / "figs"
    rc = run_cli(["rank", cycle_dataset_path, "--output", tmp_path / "r.json",
                  "--figures", figdir])
    assert rc == 0
    names = {p.name for p in figdir.glob("*.png")}
    assert names == {"closeness.png", "curves_success.png", "curves_fail.png"}
    for p in figdir.glob("*.png"):
        assert p.stat().st_size > 0


# ------------------------------------------------------------------------ cdr

def test_cdr_cycle_uniform_densities(cycle_dataset_path, capsys):
    rc = run_cli(["cdr", cycle_dataset_path, "--network", "A", "--criterion", "success"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split() == ["node", "cdr"]
    values = [float(line.split()[-1]) for line in lines[1:]]
    assert len(values) == 8
    np.testing.assert_allclose(values, 0.125, atol=1e-6)
    assert sum(values) == pytest.approx(1.0, abs=1e-5)


def test_cdr_star_hub_listed_first(tmp_path, capsys):
    n = 5
    f = np.zeros((n, n))
    for leaf in range(1, n):
        f[0, leaf] = 1.0
        f[leaf, 0] = 1.0
    obj = {
        "criteria": [{"name": "traffic", "direction": "benefit"}],
        "networks": [{"name": "star", "nodes": ["hub"] + [f"leaf{i}" for i in range(1, n)],
                      "events": {"traffic": f.tolist()}}],
    }
    path = tmp_path / "star.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    rc = run_cli(["cdr", path, "--network", "star", "--criterion", "traffic"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1].split()[0] == "hub"


def test_cdr_unknown_network(cycle_dataset_path, capsys):
    rc = run_cli(["cdr", cycle_dataset_path, "--network", "Z", "--criterion", "success"])
    assert rc == 1
    assert "unknown network 'Z'" in capsys.readouterr().err


def test_cdr_unknown_criterion(cycle_dataset_path, capsys):
    rc = run_cli(["cdr", cycle_dataset_path, "--network", "A", "--criterion", "latency"])
    assert rc == 1
    assert "unknown criterion 'latency'" in capsys.readouterr().err


def test_cdr_dump_csv(cycle_dataset_path, tmp_path, capsys):
    dump = tmp_path / "diag.csv"
    rc = run_cli(["cdr", cycle_dataset_path, "--network", "B", "--criterion", "fail",
                  "--dump", dump])
    assert rc == 0
    rows = list(csv.reader(dump.open()))
    assert rows[0][0] == "node" and rows[0][-2:] == ["sigma", "cdr"]
    assert len(rows) == 1 + 8
    delta = np.array([[float(v) for v in row[1:9]] for row in rows[1:]])
    np.testing.assert_allclose(delta, delta.T, atol=1e-12)


# --------------------------------------------------------------------- curves

def test_curves_csv_schema_and_prob_zero(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "curves.csv"
    rc = run_cli(["curves", cycle_dataset_path, "--output", out, "--samples", "50"])
    assert rc == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["network", "criterion", "x", "density"]
    assert len(rows) == 1 + 4 * 2 * 50
    by_curve = {}
    for net, crit, x, density in rows[1:]:
        by_curve.setdefault((net, crit), []).append(float(x))
        assert float(density) >= 0.0
    assert set(by_curve) == {(n, c) for n in "ABCD" for c in ("success", "fail")}
    for xs in by_curve.values():
        assert xs[0] == 0.0
        assert xs == sorted(xs)


def test_curves_x_zero_row_equals_prob_zero(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "curves.csv"
    rc = run_cli(["curves", cycle_dataset_path, "--output", out, "--samples", "3"])
    assert rc == 0
    # recompute mu, delta independently: uniform cycle densities make
    # H = log2(8) = 3 and mu the per-edge rate
    from conftest import CYCLE_RATES
    rows = list(csv.reader(out.open()))[1:]
    first_by_curve = {}
    for net, crit, x, density in rows:
        first_by_curve.setdefault((net, crit), (x, density))
    for (net, crit), (x, density) in first_by_curve.items():
        rate = CYCLE_RATES[net][0 if crit == "success" else 1]
        mu, delta = rate, rate / 3.0
        assert float(x) == 0.0
        assert float(density) == pytest.approx(prob_zero(mu, delta), rel=1e-9)


def test_curves_two_samples_hit_endpoints(cycle_dataset_path, tmp_path, capsys):
    out = tmp_path / "curves.csv"
    rc = run_cli(["curves", cycle_dataset_path, "--output", out, "--samples", "2"])
    assert rc == 0
    rows = list(csv.reader(out.open()))[1:]
    assert len(rows) == 4 * 2 * 2
    curve = [row for row in rows if row[0] == "D" and row[1] == "fail"]
    xs = [float(row[2]) for row in curve]
    mu, delta = 1.0, 1.0 / 3.0  # per-edge rate 1, H = 3
    assert xs[0] == 0.0
    assert xs[1] == pytest.approx(mu + 4 * delta, rel=1e-12)


def test_curves_figures(cycle_dataset_path, tmp_path, capsys):
    figdir = tmp_path / "figs"
    rc = run_cli(["curves", cycle_dataset_path, "--output", tmp_path / "c.csv",
                  "--figures", figdir])
    assert rc == 0
    assert {p.name for p in figdir.glob("*.png")} == {"curves_success.png", "curves_fail.png"}


def test_curves_rejects_bad_samples(cycle_dataset_path, tmp_path, capsys):
    rc = run_cli(["curves", cycle_dataset_path, "--output", tmp_path / "c.csv",
                  "--samples", "0"])
    assert rc == 1
    assert "samples" in capsys.readouterr().err

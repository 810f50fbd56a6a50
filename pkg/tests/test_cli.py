import json

import pytest

from rzlab.cli import (EXIT_DOMAIN, EXIT_OK, EXIT_USAGE,
                       EXIT_VERIFICATION, main)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeros_json_report(capsys):
    code, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "30",
                       "--deterministic")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["command"] == "zeros"
    assert report["results"]["count"] == 3
    assert report["results"]["cross_check"] == "consistent"
    assert "timestamp" not in report
    assert report["version"]


def test_zeros_empty_window(capsys):
    code, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "10",
                       "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["zeros"] == []


def test_zeros_deterministic_byte_identical(capsys):
    _, out1, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "22",
                     "--deterministic")
    _, out2, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "22",
                     "--deterministic")
    assert out1 == out2
    # the numeric results must not depend on the worker partition
    _, out3, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "22",
                     "--deterministic", "--jobs", "3")
    assert json.loads(out3)["results"] == json.loads(out1)["results"]


def test_timestamp_present_by_default(capsys):
    _, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "10")
    assert "timestamp" in json.loads(out)


def test_usage_errors(capsys):
    code, _, err = run(capsys, "zeros", "--t-min", "0")
    assert code == EXIT_USAGE
    assert "usage error" in err
    code, _, _ = run(capsys)
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "dispersion", "nonsense")
    assert code == EXIT_USAGE


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "zeros", "--t-min", "50", "--t-max", "10")
    assert code == EXIT_DOMAIN


def test_smatrix_eval_identity(capsys):
    code, out, _ = run(capsys, "smatrix", "eval", "--re", "0", "--im", "0",
                       "--deterministic")
    assert code == EXIT_OK
    v = json.loads(out)["results"]["value"]
    assert abs(v["re"] - 1.0) < 1e-12 and abs(v["im"]) < 1e-12


def test_smatrix_scan_unitarity(capsys):
    code, out, _ = run(capsys, "smatrix", "scan", "--tau-max", "10",
                       "--step", "0.5", "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["max_deviation"] < 1e-8


def test_smatrix_correspondence(capsys):
    code, out, _ = run(capsys, "smatrix", "correspondence",
                       "--num-zeros", "3", "--deterministic")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["results"]["passes"] == 3


def test_quantum_kmoment_flags_discrepancy(capsys):
    code, out, _ = run(capsys, "quantum", "kmoment", "--nu", "0.5",
                       "--deterministic")
    assert code == EXIT_OK
    results = json.loads(out)["results"]
    assert abs(results["integral"]["re"] - 0.7853981633974483) < 1e-8
    assert abs(results["fitted_coefficient"] - 0.5) < 1e-6
    assert results["printed_coefficient"] == 0.125
    assert results["coefficient_flag"] == "discrepancy"


def test_quantum_khuri_real_coupling(capsys):
    code, out, _ = run(capsys, "quantum", "khuri", "--lambda", "-5",
                       "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["residual"] == 0.0


def test_quantum_jost_verify(capsys):
    code, out, _ = run(capsys, "quantum", "jost-verify", "--lambda", "2",
                       "--k", "1", "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["max_rel_error"] < 1e-6


def test_hadamard_profile(capsys):
    code, out, _ = run(capsys, "hadamard", "--num-zeros", "20", "--at", "2",
                       "--deterministic")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["results"]["decreasing"] is True


def test_dispersion_roundtrip_unit(capsys):
    code, out, _ = run(capsys, "dispersion", "roundtrip", "--model", "unit",
                       "--nodes", "401", "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["results"]["roundtrip_residual"] < 1e-12


def test_csv_projection(capsys):
    code, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "30",
                       "--format", "csv", "--deterministic")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].split(",") == ["index", "ordinate", "residual"]
    assert len(lines) == 4


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "15",
                       "--out", str(path), "--deterministic")
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(path.read_text())["results"]["count"] == 1


def test_rzlab_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("RZLAB_JOBS", "2")
    code, out, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "15",
                       "--deterministic")
    assert code == EXIT_OK
    assert json.loads(out)["parameters"]["jobs"] == 2
    monkeypatch.setenv("RZLAB_JOBS", "junk")
    code, _, _ = run(capsys, "zeros", "--t-min", "0", "--t-max", "15")
    assert code == EXIT_USAGE

"""CLI contract tests: output formats, file parsing, exit codes."""
import json

import pytest

from shadowlab.cli import main, parse_family_file
from shadowlab.verify import TheoremReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_star_listing(capsys):
    code, out, _ = run_cli(capsys, "family", "star", "--n", "6", "--k", "3", "--t", "1")
    assert code == 0
    lines = out.strip().splitlines()
    body = [l for l in lines if not l.startswith("#")]
    assert len(body) == 10
    assert all(l.split() == sorted(l.split(), key=int) for l in body)
    assert "# size: 10" in lines


def test_family_example15_check(capsys):
    code, out, _ = run_cli(
        capsys, "family", "example15", "--n", "12", "--k", "6", "--t", "3", "--s", "0", "--check"
    )
    assert code == 0
    assert "# t-intersecting: true" in out


def test_family_layer(capsys):
    code, out, _ = run_cli(capsys, "family", "layer", "--n", "3", "--k", "2")
    assert code == 0
    assert [l for l in out.splitlines() if not l.startswith("#")] == ["1 2", "1 3", "2 3"]


def test_family_diagnostics(capsys):
    code, out, _ = run_cli(
        capsys, "family", "star", "--n", "7", "--k", "3", "--t", "1",
        "--width", "--base", "--semistar",
    )
    assert code == 0
    assert "# width: 0" in out
    assert "# t-star: true" in out
    assert "# base-levels:" in out


def test_family_usage_error(capsys):
    code, _, err = run_cli(capsys, "family", "frankl-h", "--n", "6", "--k", "3", "--t", "1")
    assert code == 1
    assert "frankl-h needs --h" in err


def test_bounds_values(capsys):
    code, out, _ = run_cli(capsys, "bounds", "thm14", "--k", "4", "--t", "2", "--j", "1")
    assert (code, out.strip()) == (0, "3/2")
    code, out, _ = run_cli(capsys, "bounds", "universal", "--n", "7", "--k", "3", "--t", "1")
    assert (code, out.strip()) == (0, "15")
    code, out, _ = run_cli(
        capsys, "bounds", "prop211", "--t", "3", "--j", "1", "--h", "0", "--w", "2", "--r", "1"
    )
    assert (code, out.strip()) == (0, "true true")
    code, out, _ = run_cli(
        capsys, "bounds", "thm14", "--k", "4", "--t", "2", "--j", "1", "--decimal"
    )
    assert out.strip() == "3/2 approx=1.5"


def test_bounds_missing_and_invalid_params(capsys):
    code, _, err = run_cli(capsys, "bounds", "thm14", "--k", "4", "--t", "2")
    assert code == 1 and "--j" in err
    code, _, err = run_cli(capsys, "bounds", "thm14", "--k", "4", "--t", "2", "--j", "3")
    assert code == 1


def test_analyze_file_roundtrip(tmp_path, capsys):
    path = tmp_path / "fam.txt"
    path.write_text("# a comment\n1 2 3\n1 2 4\n\n1 3 4\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--t", "1", "--j", "1")
    assert code == 0
    report = dict(l.split(": ", 1) for l in out.strip().splitlines())
    assert report["size"] == "3"
    assert report["shadow_size"] == "6"
    assert report["shadow_ratio"] == "2"
    assert report["t_intersecting"] == "true"


def test_analyze_named_constructor_json(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--kind", "frankl-h", "--n", "6", "--k", "3", "--t", "1",
        "--h", "1", "--j", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"] == {"version": "1"}
    (row,) = payload["results"]
    assert row["size"] == 10
    assert "/" in row["shadow_ratio"]


def test_analyze_parse_error_carries_line_number(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1 2 3\n1 2\n")
    code, _, err = run_cli(capsys, "analyze", str(path), "--t", "1")
    assert code == 1
    assert "line 2" in err
    path.write_text("1 2 3\n3 2 1\n")
    code, _, err = run_cli(capsys, "analyze", str(path), "--t", "1")
    assert code == 1 and "line 2" in err


def test_analyze_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("# nothing here\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--t", "1")
    assert code == 0
    assert out.strip() == "size: 0"


def test_parse_family_file_direct():
    fam = parse_family_file("1 2\n1 3\n")
    assert fam is not None and len(fam) == 2
    assert parse_family_file("# only comments\n") is None


def test_oracle_csv_golden(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--n", "4", "--k", "2", "--t", "1", "--j", "1", "--format", "csv"
    )
    assert code == 0
    assert out == "size,min_shadow,witness\n1,2,0x3\n2,3,0x3 0x5\n3,3,0x3 0x5 0x6\n"


def test_oracle_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--n", "4", "--k", "2", "--t", "1", "--j", "1", "--format", "json"
    )
    payload = json.loads(out)
    assert set(payload) == {"params", "results", "meta"}
    assert payload["params"] == {"n": 4, "k": 2, "t": 1, "j": 1}
    assert payload["results"][0] == {"size": 1, "min_shadow": 2, "witness": ["0x3"]}


def test_oracle_capacity_exit_code(capsys):
    code, _, err = run_cli(capsys, "oracle", "--n", "10", "--k", "5", "--t", "1", "--j", "1")
    assert code == 3
    assert "252" in err


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "verify", "thm1.3", "--n", "4", "--k", "2", "--t", "1", "--l", "1")
    assert code == 0
    assert "verdict: equality-cases-exact" in out

    import shadowlab.cli as cli_mod

    def fake_checker(theorem, **params):
        return TheoremReport(theorem=theorem, params=params, verdict="counterexample",
                             witness=None, runtime_s=0.0, details={})

    monkeypatch.setattr(cli_mod, "check_theorem", fake_checker)
    code, out, _ = run_cli(capsys, "verify", "thm1.3", "--n", "4", "--k", "2", "--t", "1", "--l", "1")
    assert code == 2
    assert "verdict: counterexample" in out


def test_verify_capacity_exit_code(capsys):
    code, _, err = run_cli(capsys, "verify", "thm1.3", "--n", "10", "--k", "5", "--t", "1", "--l", "4")
    assert code == 3


def test_scan_csv_format(capsys):
    code, out, _ = run_cli(
        capsys, "scan-example15", "--k", "8", "--t", "3", "--j", "1",
        "--s", "1", "--n-min", "21", "--n-max", "22", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("s,n,family_size")
    assert lines[1].split(",")[0:2] == ["1", "21"]


def test_identical_invocations_are_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "verify", "thm2.10", "--n", "8", "--k", "4", "--t", "2",
                         "--j", "1", "--count", "8", "--seed0", "0")
    _, out2, _ = run_cli(capsys, "verify", "thm2.10", "--n", "8", "--k", "4", "--t", "2",
                         "--j", "1", "--count", "8", "--seed0", "0")
    # runtimes differ between runs; everything else must match exactly
    strip = lambda s: [l for l in s.splitlines() if not l.startswith("runtime_s")]
    assert strip(out1) == strip(out2)


def test_usage_error_on_unknown_command(capsys):
    code, _, err = run_cli(capsys, "nonsense")
    assert code == 1

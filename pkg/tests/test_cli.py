"""CLI behavior: output shapes, exit codes, batch mode, JSON schema."""

import io
import json
import subprocess
import sys

from locfactor.cli import main


def run_cli(args, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    return main(args)


class TestFactorCommand:
    def test_json_schema_shape(self, capsys):
        assert main(["factor", "X^2-1", "--route", "fracfield", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["version"] == "1"
        assert doc["ring"] == "Z[X]"
        assert doc["route"] == "fracfield"
        assert set(doc) == {"version", "input", "ring", "route", "unit", "factors"}
        for f in doc["factors"]:
            assert set(f) == {"expr", "multiplicity", "certificate"}
            assert f["certificate"]["case"] in ("generator", "localization")

    def test_multiplicity_aggregation(self, capsys):
        assert main(["factor", "X^2(X+1)", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        by_expr = {f["expr"]: f["multiplicity"] for f in doc["factors"]}
        assert by_expr == {"X": 2, "X + 1": 1}

    def test_integer_input(self, capsys):
        assert main(["factor", "-12", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ring"] == "Z" and doc["unit"] == "-1"
        assert [f["expr"] for f in doc["factors"]] == ["2", "3"]
        assert [f["multiplicity"] for f in doc["factors"]] == [2, 1]
        assert all(f["certificate"] is None for f in doc["factors"])

    def test_laurent_json(self, capsys):
        assert main(["factor", "T^-1+T", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ring"] == "Z[T,T^-1]"
        assert doc["unit"] == "T^-1"
        assert doc["factors"][0]["certificate"]["case"] == "localization"

    def test_bivariate(self, capsys):
        assert main(["factor", "X*Y+X"]) == 0
        out = capsys.readouterr().out
        assert "route: iterated" in out and "Y + 1" in out

    def test_verbose_replay(self, capsys):
        assert main(["factor", "X^3+X^2", "--route", "laurent", "--verbose"]) == 0
        out = capsys.readouterr().out
        assert "certificate replay: ok" in out

    def test_unit_input(self, capsys):
        assert main(["factor", "1"]) == 0
        assert "(none; the input is a unit)" in capsys.readouterr().out


class TestExitCodes:
    def test_parse_error(self, capsys):
        assert main(["factor", "X^-1"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_usage_error(self, capsys):
        assert main(["factor", "T+1", "--route", "fracfield"]) == 1
        assert main(["nonsense"]) == 1

    def test_math_domain_error(self, capsys):
        assert main(["factor", "0"]) == 2
        assert main(["factor", "X-X"]) == 2

    def test_desk_scale_error(self, capsys):
        assert main(["factor", "Y^5+1"]) == 2


class TestBatchMode:
    def test_ndjson(self, capsys, monkeypatch):
        code = run_cli(["factor", "--json"], "6\nX^2-1\n\n", monkeypatch)
        assert code == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if l]
        assert len(lines) == 2
        assert json.loads(lines[0])["ring"] == "Z"
        assert json.loads(lines[1])["ring"] == "Z[X]"

    def test_batch_continues_after_error(self, capsys, monkeypatch):
        code = run_cli(["factor", "--json"], "0\n6\n", monkeypatch)
        assert code == 2
        out, err = capsys.readouterr()
        assert "cannot factor zero" in err
        assert json.loads(out.splitlines()[0])["ring"] == "Z"


class TestCompareCommand:
    def test_agreement_output(self, capsys):
        assert main(["compare", "12X"]) == 0
        out = capsys.readouterr().out
        assert "direct: unit 1; factors [2, 2, 3, X]" in out
        assert "agreement: direct ~ laurent, direct ~ fracfield, laurent ~ fracfield" in out

    def test_requires_zx(self, capsys):
        assert main(["compare", "T+1"]) == 1

    def test_verbose_has_timings(self, capsys):
        assert main(["compare", "X^2-1", "--verbose"]) == 0
        assert "elapsed direct:" in capsys.readouterr().out


class TestSelftestCommand:
    def test_minimal_run(self, capsys):
        assert main(["selftest", "--seed", "7", "--trials", "1"]) == 0
        out = capsys.readouterr().out
        assert "all suites pass" in out
        assert "rings_axioms: ok" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "locfactor.cli", "factor", "6", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ring"] == "Z"

from __future__ import annotations

import io
import json
import shutil
import subprocess
import sys

import jsonschema
import pytest

from dzpackets.cli import golden_dir, load_schema, main

GOLDEN_RUNS = [
    ["packets", "--shape", "irreducible"],
    ["packets", "--shape", "split"],
    ["packets", "--shape", "irreducible", "--emit", "json"],
    ["packets", "--shape", "split", "--emit", "json"],
    ["generators", "--case", "plus", "--m", "1"],
    ["generators", "--case", "plus", "--m", "2"],
    ["generators", "--case", "minus"],
    ["generators", "--case", "dagger"],
    ["generators", "--case", "ddagger"],
    ["centralizers"],
    ["hecke", "--case", "plus", "--m", "1"],
    ["hecke", "--case", "plus", "--m", "2"],
    ["hecke", "--case", "minus"],
    ["hecke", "--case", "dagger"],
    ["hecke", "--case", "ddagger", "--subcase", "1"],
    ["hecke", "--case", "ddagger", "--subcase", "2"],
]

JSON_RUNS = [
    ["packets", "--shape", "split"],
    ["generators", "--case", "minus"],
    ["centralizers", "--q", "5"],
    ["hecke", "--case", "dagger"],
    ["enumerate", "--q", "3", "--n", "2", "--lam-inertia", "1", "--degree", "1"],
    ["lfactor", "--q", "3", "--eta1", "2,z", "--eta2", "2,z", "--sym2", "--packets-agree"],
]


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("argv", GOLDEN_RUNS, ids=" ".join)
def test_golden_outputs(argv):
    code, text = run(argv)
    assert code == 0
    assert text


@pytest.mark.parametrize("argv", JSON_RUNS, ids=" ".join)
def test_json_envelope_validates_and_round_trips(argv):
    code, text = run(argv + ["--emit", "json", "--no-golden"])
    assert code == 0
    doc = json.loads(text)
    jsonschema.validate(doc, load_schema())
    assert doc["schema_version"] == 1 and doc["command"] == argv[0]
    assert json.loads(json.dumps(doc)) == doc


def test_mismatched_golden_exits_one(tmp_path, monkeypatch, capsys):
    shutil.copytree(golden_dir(), tmp_path / "g")
    target = tmp_path / "g" / "packets_split.md"
    target.write_text(target.read_text(encoding="utf-8").replace("GSpin_5(k)", "GSpin_7(k)"),
                      encoding="utf-8")
    monkeypatch.setenv("DZPACKETS_TESTDATA", str(tmp_path / "g"))
    assert golden_dir() == tmp_path / "g"
    code, _ = run(["packets", "--shape", "split"])
    assert code == 1
    assert "GSpin_7(k)" in capsys.readouterr().err
    assert run(["packets", "--shape", "irreducible"])[0] == 0
    assert run(["packets", "--shape", "split", "--no-golden"])[0] == 0


def test_missing_golden_is_not_an_error(tmp_path, monkeypatch):
    monkeypatch.setenv("DZPACKETS_TESTDATA", str(tmp_path))
    assert run(["packets", "--shape", "split"])[0] == 0


@pytest.mark.parametrize("argv", [
    ["packets", "--shape", "bogus"],
    ["packets"],
    ["centralizers", "--q", "6"],
    ["centralizers", "--N", "7"],
    ["centralizers", "--K", "2"],
    ["hecke", "--case", "plus", "--subcase", "1"],
    ["centralizers", "--tau", "1,2"],
    ["lfactor", "--q", "3", "--eta1", "0"],
    [],
], ids=lambda a: " ".join(a) or "empty")
def test_usage_errors_exit_two(argv):
    assert run(argv)[0] == 2


def test_guard_exits_three():
    assert run(["enumerate", "--q", "3", "--n", "9"])[0] == 3


def test_prime_power_field_sizes_are_accepted():
    assert run(["hecke", "--case", "plus", "--m", "1", "--q", "4"])[0] == 0


def test_hecke_parameters_in_output():
    _, text = run(["hecke", "--case", "minus", "--emit", "json", "--no-golden"])
    assert json.loads(text)["result"]["parameters"] == [3, 27]


def test_enumerate_and_lfactor_text():
    code, text = run(["enumerate", "--q", "3", "--n", "1"])
    assert code == 0 and "V(η[d=1, a=2, f=4])" in text
    code, text = run(["lfactor", "--q", "3", "--eta1", "2,z", "--eta2", "2,z", "--sym2",
                      "--packets-agree"])
    assert code == 0 and "1/[(1 - T^2)]" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dzpackets", "packets", "--shape", "split"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("| φ | ρ_λ |")

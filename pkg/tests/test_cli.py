import json
import subprocess
import sys

import pytest

from ccr_opposite.cli import main

HALFLINE = {"cone": {"dim": 1, "generators": [["1"]]}, "module": {"kind": "cone", "offsets": [["0"]]}}
QUADRANT = {"cone": {"dim": 2, "generators": [["1", "0"], ["0", "1"]]}}


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


def run(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture
def quad(tmp_path):
    return write(tmp_path, "quad.json", QUADRANT)


@pytest.mark.parametrize(
    "argv",
    [
        ["cone", "check"],
        ["module", "opposite"],
        ["certify", "asymmetry"],
        ["verify", "dilation", "--cases", "20"],
        ["verify", "purity", "--cases", "20"],
        ["verify", "opposite-rep", "--cases", "20"],
        ["verify", "ccr", "--cases", "10"],
    ],
)
def test_commands_pass_on_quadrant(argv, quad, capsys):
    code, report = run(argv + [quad], capsys)
    assert code == 0
    assert set(report) >= {"command", "inputs", "results", "seed", "version"}
    assert all(r["status"] == "PASS" for r in report["results"])


def test_certify_verdict(quad, capsys):
    _, report = run(["certify", "asymmetry", quad], capsys)
    assert report["verdict"] == "ASYMMETRIC"


def test_certify_rejects_dimension_one(tmp_path, capsys):
    code, report = run(["certify", "asymmetry", write(tmp_path, "h.json", HALFLINE)], capsys)
    assert code == 3 and "d >= 2" in report["error"]


def test_translate_eq_halfline(tmp_path, capsys):
    a = write(tmp_path, "a.json", HALFLINE)
    b = write(tmp_path, "b.json", {**HALFLINE, "module": {"kind": "opposite", "inner": HALFLINE["module"]}})
    code, report = run(["module", "translate-eq", a, b], capsys)
    assert code == 0
    assert report["decision"]["verdict"] == "YES" and report["decision"]["z"] == [1]


def test_translate_eq_shifted_quadrant(tmp_path, capsys):
    a = write(tmp_path, "a.json", {**QUADRANT, "module": {"kind": "cone", "offsets": [["1", "1"]]}})
    b = write(tmp_path, "b.json", QUADRANT)
    code, report = run(["module", "translate-eq", a, b], capsys)
    assert code == 0 and report["decision"]["z"] == [-1, -1]


def test_translate_eq_rejects_different_cones(tmp_path, quad, capsys):
    skew = write(tmp_path, "s.json", {"cone": {"dim": 2, "generators": [["1", "0"], ["1", "1"]]}})
    code, report = run(["module", "translate-eq", quad, skew], capsys)
    assert code == 3 and "different cones" in report["error"]


@pytest.mark.parametrize(
    "config, fragment",
    [
        ({"cone": {"dim": 2, "generators": [["1/0", "1"], ["0", "1"]]}}, ""),
        ({"cone": {"dim": 2, "generators": [["x", "1"], ["0", "1"]]}}, ""),
        ({"cone": {"dim": 2, "generators": [["1", "0", "0"], ["0", "1"]]}}, "dimension"),
        ({"cone": {"dim": 2, "generators": [["1", "0"], ["-1", "0"], ["0", "1"]]}}, ""),
        ({**QUADRANT, "module": {"kind": "cone", "offsets": [["1"]]}}, "dimension"),
        ({**QUADRANT, "module": {"kind": "cone", "offsets": [["1/2", "0"]]}}, "integer"),
        ({"nothing": 1}, "cone"),
        ("{not json", "JSON"),
    ],
)
def test_bad_input_exit_3(config, fragment, tmp_path, capsys):
    code, report = run(["cone", "check", write(tmp_path, "bad.json", config)], capsys)
    assert code == 3
    assert fragment in report["error"]


def test_missing_file(tmp_path, capsys):
    code, report = run(["cone", "check", str(tmp_path / "absent.json")], capsys)
    assert code == 3 and "cannot read" in report["error"]


def test_out_file(quad, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["cone", "check", quad, "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["command"] == "cone check"


def test_window_from_environment(quad, capsys, monkeypatch):
    monkeypatch.setenv("CCR_OPPOSITE_WINDOW", "4")
    _, report = run(["module", "opposite", quad], capsys)
    assert report["inputs"]["window"] == 4
    _, report = run(["module", "opposite", quad, "--window", "7"], capsys)
    assert report["inputs"]["window"] == 7
    monkeypatch.setenv("CCR_OPPOSITE_WINDOW", "wide")
    code, _ = run(["module", "opposite", quad], capsys)
    assert code == 3


def test_ccr_cases_count(quad, capsys):
    code, report = run(["verify", "ccr", quad, "--cases", "50"], capsys)
    ccr = [r for r in report["results"] if r["name"].startswith("ccr case")]
    assert code == 0 and len(ccr) == 50
    assert all(r["status"] == "PASS" for r in ccr)


def test_deterministic_bytes(quad, tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.json"
        subprocess.run(
            [sys.executable, "-m", "ccr_opposite", "verify", "opposite-rep", quad, "--cases", "20", "--seed", "5", "--out", str(out)],
            check=True,
        )
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_report_all_halfline(tmp_path, capsys):
    code, report = run(["report", "all", write(tmp_path, "h.json", HALFLINE), "--cases", "20"], capsys)
    assert code == 0
    assert any(r["name"].startswith("module translate-eq") for r in report["results"])

import json
from io import StringIO
from pathlib import Path

import pytest

from main import run
from utils import Logger

ROOT = Path(__file__).resolve().parents[1]

GLUT_MODEL = {"states": ["x", "y"], "atoms": {"p": {"plus": ["x"], "minus": ["x", "y"]}}}
TWIN_MODEL = {
    "states": ["s0", "s1", "s2"],
    "atoms": {"p": {"plus": ["s1", "s2"], "minus": ["s0"]}},
    "programs": {"a": [["s0", "s1"], ["s0", "s2"]]},
}


def _run(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _write(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content if isinstance(content, str) else json.dumps(content), encoding='utf-8')
    return str(path)


def test_check(tmp_path):
    model = _write(tmp_path, "glut.json", GLUT_MODEL)
    code, out, _ = _run("check", "--model", model, "--formula", "p")
    assert code == 0
    assert out == "state x: Both\nstate y: FalseOnly\nvalid: false\n"
    code, out, _ = _run("check", "-m", model, "-f", "p | !p")
    assert out.splitlines()[-1] == "valid: true"


def test_valid_with_countermodel():
    code, out, _ = _run("valid", "--formula", "p | ~p")
    assert code == 1
    assert out == 'NOT_VALID\n{\n  "atoms": {},\n  "programs": {},\n  "states": [\n    "w0"\n  ]\n}\nstate: w0\n'


def test_valid():
    assert _run("valid", "--formula", "p | !p") == (0, "VALID\n", "")
    assert _run("valid", "--formula", "[a*]p -> p")[:2] == (0, "VALID\n")


def test_sat():
    assert _run("sat", "--formula", "p & !p")[:2] == (1, "UNSAT\n")
    code, out, _ = _run("sat", "--formula", "p & ~p")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "SAT"
    assert lines[-1] == "state: w0"
    model = json.loads("\n".join(lines[1:-1]))
    assert model["atoms"] == {"p": {"minus": ["w0"], "plus": ["w0"]}}


def test_fl():
    assert _run("fl", "--formula", "[a*]p")[:2] == (0, "[a*]p\n[a][a*]p\np\n")


def test_translate():
    assert _run("translate", "--formula", "~(p -> q)")[:2] == (0, "t: p+ & q-\nf: p+ -> q+\n")


def test_formula_file(tmp_path):
    path = _write(tmp_path, "formula.txt", "<a;b>p\n")
    assert _run("fl", "--formula-file", path)[1] == "<a;b>p\n<a><b>p\n<b>p\np\n"


def test_search():
    code, out, _ = _run("search", "--formula", "p & ~p", "--max-states", "1")
    assert code == 0
    assert out == (
        'FOUND\n{\n  "atoms": {\n    "p": {\n      "minus": [\n        "s0"\n      ],\n'
        '      "plus": [\n        "s0"\n      ]\n    }\n  },\n  "programs": {},\n'
        '  "states": [\n    "s0"\n  ]\n}\nstate: s0\n'
    )
    assert _run("search", "--formula", "p & !p", "--max-states", "1")[:2] == (1, "NOT_FOUND\n")


def test_filtrate(tmp_path):
    model = _write(tmp_path, "twin.json", TWIN_MODEL)
    code, out, _ = _run("filtrate", "--model", model, "--formula", "p")
    assert code == 0
    result = json.loads(out)
    assert result["classes"] == {"s0": "c0", "s1": "c1", "s2": "c1"}
    assert result["model"] == {
        "states": ["c0", "c1"],
        "atoms": {"p": {"plus": ["c1"], "minus": ["c0"]}},
        "programs": {"a": [["c0", "c1"]]},
    }


def test_global(tmp_path):
    premises = _write(tmp_path, "premises.txt", "# marking\n[a]p\n\n")
    assert _run("global", "--premises", premises, "--formula", "[a][a]p")[:2] == (0, "VALID\n")
    code, out, _ = _run("global", "-p", premises, "-f", "[a]!~p")
    assert code == 1
    assert out.startswith("NOT_VALID\n")


def test_prove(tmp_path):
    good = str(ROOT / "corpus" / "proofs" / "box_conjunction.json")
    assert _run("prove", "--proof", good)[:2] == (0, "ACCEPTED\n")

    bad = _write(tmp_path, "bad.json", {"lines": [{"formula": "p -> (q -> q)", "rule": "axiom:CL1"}]})
    assert _run("prove", "--proof", bad)[:2] == (1, "REJECTED line 1: not an instance of CL1\n")

    code, out, _ = _run("prove", "--proof", good, bad, "--n-jobs", "1")
    assert code == 1
    assert out == f"{good}: ACCEPTED\n{bad}: REJECTED line 1: not an instance of CL1\n"


@pytest.mark.parametrize("argv", [
    ["valid", "--formula", "p & & q"],
    ["check", "--model", "missing.json", "--formula", "p"],
    ["fl"],
    ["fl", "--formula", "p", "--formula-file", "f.txt"],
    ["frobnicate"],
    ["prove", "--proof", "missing.json"],
    ["search", "--formula", "p", "--max-states", "0"],
    ["fl", "--formula", "~" * 1000 + "p"],
    ["translate", "--formula", "[a]" * 1000 + "p"],
])
def test_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = _run(*argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")
    assert err.count("\n") == 1


def test_malformed_model(tmp_path):
    model = _write(tmp_path, "bad.json", {"states": ["x"], "atoms": {"p": {"plus": ["y"]}}})
    code, _, err = _run("check", "--model", model, "--formula", "p")
    assert code == 2
    assert "atoms.p.plus" in err


def test_malformed_justification(tmp_path):
    proof = _write(tmp_path, "bad.json", {"lines": [{"formula": "p", "rule": "mp:1,1"}]})
    code, _, err = _run("prove", "--proof", proof)
    assert code == 2
    assert err.startswith("error: line 1:")


@pytest.fixture
def quiet_logging():
    yield
    Logger.initialize(log_dir=None, console_level='WARNING')


def test_log_dir_takes_effect_after_earlier_logging(tmp_path, quiet_logging):
    assert _run("fl", "--formula", "p")[0] == 0
    code, _, _ = _run("--log-dir", str(tmp_path), "fl", "--formula", "[a]p")
    assert code == 0
    run_logs = list((tmp_path / "run").glob("run_*.log"))
    debug_logs = list((tmp_path / "debug").glob("debug_*.log"))
    assert len(run_logs) == 1 and len(debug_logs) == 1
    assert f"Run {Logger.get_run_id()}: fl" in run_logs[0].read_text(encoding='utf-8')
    assert "Logging to" in debug_logs[0].read_text(encoding='utf-8')


def test_verbose_logs_to_stderr(capsys, quiet_logging):
    _run("fl", "--formula", "p")
    capsys.readouterr()
    code, out, _ = _run("--verbose", "true", "fl", "--formula", "p")
    assert (code, out) == (0, "p\n")
    assert f"Run {Logger.get_run_id()}: fl" in capsys.readouterr().err

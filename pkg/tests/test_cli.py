import json
import subprocess
import sys

import pytest

from hibitoric.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sing_2_5(capsys):
    code, out, _ = run(capsys, "sing", "--idn", "2", "5")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert [(w["i"], w["j"]) for w in doc["windows"]] == [(1, 1), (2, 1)]
    assert doc["purity"] and doc["ok"]


def test_sing_exhaustive(capsys):
    code, out, _ = run(capsys, "sing", "--idn", "2", "4", "--exhaustive")
    assert code == 0
    assert json.loads(out)["exhaustive"]["disagreements"] == 0


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample")
    doc = json.loads(out)
    assert code == 0
    assert doc["gl_criterion"] and doc["verdict"] == "singular"
    assert doc["printed_generators_present"] and doc["extra_generators"] == ["e_234"]


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-size", "12")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert set(doc["suites"]) == {"poset", "grassmann", "cone", "smoothness", "multiplicity"}


def test_mult_commands(capsys):
    assert json.loads(run(capsys, "mult", "--idn", "3", "6")[1])["hook_mult"] == 42
    assert json.loads(run(capsys, "mult", "--window", "2", "4", "1", "1")[1])["multiplicity"] == 2
    doc = json.loads(run(capsys, "mult", "--jblock", "9", "1", "1", "--union", "5,0")[1])
    assert doc["multiplicity"] == 10 and doc["factors"] == [5, 2]


def test_mult_lattice_file(capsys, tmp_path):
    path = tmp_path / "l.json"
    path.write_text(json.dumps({"type": "idn", "d": 2, "n": 6}))
    assert json.loads(run(capsys, "mult", "--lattice", str(path))[1])["fixed_point_mult"] == 14


def test_hilbert_commands(capsys, tmp_path):
    doc = json.loads(run(capsys, "hilbert", "--idn", "2", "4")[1])
    assert doc["crosscheck"]["ok"] and doc["hilbert"]["degree"] == 2
    path = tmp_path / "i.json"
    path.write_text(json.dumps({"n_vars": 4, "generators": [[1, 2]]}))
    doc = json.loads(run(capsys, "hilbert", "--lattice", str(path))[1])
    assert doc["hilbert"]["krull_dim"] == 3


def test_lattice_and_faces(capsys):
    doc = json.loads(run(capsys, "lattice", "--counterexample")[1])
    assert doc["size"] == 12 and doc["embedded_sublattices"] == 118
    doc = json.loads(run(capsys, "faces", "--idn", "2", "4")[1])
    assert doc["count"] == 40
    doc = json.loads(run(capsys, "faces", "--idn", "2", "4", "--D", "[[1,2],[3,4]]")[1])
    assert doc["face"]["verdict"] == "singular"


def test_harness(capsys):
    doc = json.loads(run(capsys, "harness", "--counterexample")[1])
    assert doc["disagreements"]


def test_usage_errors(capsys):
    assert run(capsys, "mult")[0] == 2
    assert run(capsys, "sing", "--idn", "2", "40")[0] == 2
    assert run(capsys, "faces", "--idn", "3", "6")[0] == 2
    code, _, err = run(capsys, "faces", "--idn", "2", "4", "--D", "[[1,4],[2,3]]")
    assert code == 2 and "NotEmbedded" in err
    with pytest.raises(SystemExit) as info:
        main(["nope"])
    assert info.value.code == 2


def test_markdown_and_output_file(capsys, tmp_path):
    path = tmp_path / "r.md"
    assert run(capsys, "sing", "--idn", "2", "4", "--format", "md", "--output", str(path))[0] == 0
    assert path.read_text().startswith("# sing")


def test_reports_are_byte_identical(capsys):
    first = run(capsys, "counterexample")[1]
    assert run(capsys, "counterexample")[1] == first


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "hibitoric", "mult", "--idn", "2", "6"], capture_output=True, text=True
    )
    assert res.returncode == 0 and json.loads(res.stdout)["catalan"] == 14


def test_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("HIBI_WORKERS", "2")
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-size", "8")
    assert code == 0
    monkeypatch.setenv("HIBI_WORKERS", "x")
    assert run(capsys, "verify", "--max-size", "8")[0] == 2

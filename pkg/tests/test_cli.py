from __future__ import annotations

import json
import subprocess
import sys

import pytest

from tlcrystals.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr_coeff(capsys):
    code, out, _ = call(
        capsys, "lr-coeff", "--mu", "5,5,4,3", "--nu", "3,2,2,0",
        "--tau", "[L1-L2,L3-L4,R1-R4,R2-R3]", "--lambda", "5,4,1",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficient"] == 2
    assert doc["witnesses"] == ["c5:1,1;c4:1,1,1;c5:2,2;c2:2,2,3", "c5:1,1;c4:1,1,2;c5:2,3;c2:1,2,2"]
    code, out, _ = call(
        capsys, "lr-coeff", "--mu", "5,5,4,3", "--nu", "3,2,2,0",
        "--tau", "[L1-L2,L3-L4,R1-R4,R2-R3]", "--lambda", "5,4,1", "--format", "text",
    )
    assert out.splitlines()[0] == "2"


def test_immanant_schur(capsys):
    code, out, _ = call(
        capsys, "immanant", "--mu", "4,3,3", "--nu", "3,2,1",
        "--tau", "[L1-R1,L2-L3,R2-R3]", "--route", "tableaux", "--schur",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schur"] == {"3,1": 1, "2,1,1": 1}
    assert doc["route"] == "tableaux"


def test_verify_axioms(capsys):
    code, out, _ = call(capsys, "verify-axioms", "--mu", "1", "--nu", "0", "--m", "2")
    assert code == 0
    assert json.loads(out) == {"pass": True, "violations": []}


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["immanant", "--mu", "4,x", "--tau", "[L1-R1]"])
    assert exc.value.code == 2
    assert "'4,x'" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        run(["immanant", "--mu", "1", "--tau", "[L1-R2]"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_domain_error(capsys):
    code, _, err = call(capsys, "immanant", "--mu", "3,3,3", "--tau", "[L1-R1,L2-L3,R2-R3]")
    assert code == 1
    assert "three equal parts" in err


def test_other_verbs(capsys, tmp_path):
    code, out, _ = call(capsys, "jt-matrix", "--mu", "4,3,3", "--nu", "3,2,1")
    assert json.loads(out)["matrix"] == [["h1", "h2", "h3"], ["1", "h1", "h2"], ["1", "h1", "h2"]]
    code, out, _ = call(capsys, "schur-expand", "--poly", "x1^2 + 2*x1*x2 + x2^2", "--m", "2")
    assert json.loads(out) == {"2": 1, "1,1": 1}
    code, out, _ = call(
        capsys, "schur-expand", "--mu", "4,3,3", "--nu", "3,2,1", "--tau", "[L1-R3,L2-L3,R1-R2]", "--m", "3"
    )
    assert json.loads(out) == {"2,2": 1}
    code, out, _ = call(capsys, "enumerate", "tableaux", "--mu", "1", "--m", "2", "--format", "text")
    assert out == "c1:1\nc1:2\n"
    code, out, _ = call(capsys, "enumerate", "basis", "--n", "3")
    assert len(json.loads(out)) == 5
    code, out, _ = call(capsys, "enumerate", "wirings", "--mu", "1", "--m", "3")
    assert len(json.loads(out)) == 3
    target = tmp_path / "g.dot"
    code, out, _ = call(capsys, "crystal-graph", "--mu", "4,3,3", "--nu", "3,2,1", "--m", "3",
                        "--format", "dot", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().count("digraph") == 3
    code, out, _ = call(capsys, "crystal-graph", "--mu", "1", "--m", "2")
    assert json.loads(out)["edges"] == [["c1:1", 1, "c1:2"]]


def test_verify_identities_small(capsys):
    code, out, _ = call(capsys, "verify-identities", "--max-n", "3", "--max-degree", "3",
                        "--max-m", "2", "--max-part", "3")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and doc["cases"] > 0


def test_output_is_deterministic_and_module_runs():
    argv = [sys.executable, "-m", "tlcrystals", "crystal-graph", "--mu", "3,2", "--nu", "1,0", "--m", "3"]
    first = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert first == second and first


def test_worker_env_var(monkeypatch, capsys):
    monkeypatch.setenv("TLCRYSTALS_THREADS", "2")
    code, out, _ = call(capsys, "verify-identities", "--max-n", "2", "--max-degree", "2",
                        "--max-m", "2", "--max-part", "2")
    assert code == 0 and json.loads(out)["pass"]

import io
import json
import random
import subprocess
import sys

import jsonschema
import pytest

from catconv import counting
from catconv.cli import run
from catconv.verifiers import REPORT_SCHEMA


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_table():
    code, out, _ = call("verify", "--identity", "thm2", "--range", "0..10", "--mode", "numeric", "--format", "table")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 11 and all("PASS" in r for r in rows)


def test_verify_json_and_csv():
    code, out, _ = call("verify", "--identity", "thm1", "--range", "0..3", "--mode", "both", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 4
    for row in data:
        jsonschema.validate(row, REPORT_SCHEMA)
    code, out, _ = call("verify", "--identity", "thm1", "--n", "3", "--format", "csv")
    header, row = out.strip().splitlines()
    assert header == "identity,n,mode,expected,actual,passed,elapsed_ms"
    assert row.startswith("thm1,3,numeric,320,320,true,")


def test_verify_all():
    code, out, _ = call("verify", "--identity", "all", "--range", "0..2", "--mode", "exhaustive", "--format", "json")
    assert code == 0
    assert {r["identity"] for r in json.loads(out)} >= {"lemma3", "thm9", "wrong-extensions"}


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setattr(counting, "shapiro_lhs", lambda n: 0)
    code, out, _ = call("verify", "--identity", "thm1", "--range", "0..2", "--format", "json")
    assert code == 1
    assert [r["passed"] for r in json.loads(out)] == [False, False, False]


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--identity", "bogus", "--n", "1"),
        ("verify", "--identity", "thm1"),
        ("verify", "--identity", "thm1", "--range", "3..1"),
        ("verify", "--identity", "lemma3", "--n", "1", "--mode", "numeric"),
        ("verify", "--identity", "cor10", "--n", "0"),
        ("decompose", "--map", "chi", "--input", "UXD"),
        ("decompose", "--map", "psi", "--input", "UD"),
        ("decompose", "--map", "theorem9", "--input", "UUDD", "()"),
        ("render", "--what", "decomposition"),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--identity", "thm2", "--n", "6", "--mode", "exhaustive"),
        ("verify", "--identity", "thm2", "--n", "21"),
        ("enumerate", "--family", "paths", "--n", "30"),
        ("triangle", "--rows", "60"),
    ],
)
def test_caps_exit_3(argv):
    code, out, err = call(*argv)
    assert code == 3
    assert "cap" in err


def test_enumerate():
    assert call("enumerate", "--family", "even-zeroed", "--n", "1") == (0, "UUDD\nDDUU\n", "")
    assert call("enumerate", "--family", "dyck", "--n", "3", "--limit", "2")[1] == "UUUDDD\nUUDUDD\n"
    assert call("enumerate", "--family", "paths", "--n", "2")[1].split() == ["UU", "UD", "DU", "DD"]
    assert len(call("enumerate", "--family", "balanced", "--n", "3")[1].split()) == 20


def test_decompose():
    assert call("decompose", "--map", "psi", "--input", "UUDD")[:2] == (0, "-(UD)\n")
    assert call("decompose", "--map", "chi", "--input", "UUDD", "UDDU")[1] == "+(UD)\n+() -()\n"
    assert call("decompose", "--map", "chi", "--invert", "--input", "+()", "-()")[1] == "UDDU\n"
    assert call("decompose", "--map", "psi", "--invert", "--input", "-(UD)")[1] == "UUDD\n"
    assert call("decompose", "--map", "theorem9", "--input", "UDUD", "()")[1] == "UD UD\n"
    assert call("decompose", "--map", "theorem9", "--invert", "--input", "UD", "DU")[1] == "UDDU ()\n"


def test_decompose_round_trip_fuzz():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(0, 10)
        steps = ["U"] * n + ["D"] * n
        rng.shuffle(steps)
        s = "".join(steps)
        code, seq, _ = call("decompose", "--map", "chi", "--input", s or "()")
        assert code == 0
        tokens = seq.split()
        code, back, _ = call("decompose", "--map", "chi", "--invert", "--input", *tokens) if tokens else (0, "\n", "")
        assert code == 0 and back == s + "\n"


def test_triangle_command():
    code, out, _ = call("triangle", "--rows", "1", "--format", "json")
    data = json.loads(out)
    assert data["rows"][4]["labels"]["0"] == "2"
    assert sum(int(v) for v in data["rows"][4]["labels"].values()) == 8
    code, out, _ = call("triangle", "--rows", "1")
    assert out.splitlines()[4].startswith("t=4")


def test_render_to_file_is_byte_stable(tmp_path):
    outputs = []
    for i in range(2):
        target = tmp_path / f"chi{i}.svg"
        proc = subprocess.run(
            [sys.executable, "-m", "catconv", "render", "--what", "decomposition", "--input", "UUDDDDUU", "--out", str(target)],
            capture_output=True,
        )
        assert proc.returncode == 0, proc.stderr
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1]
    code, out, _ = call("render", "--what", "triangle", "--rows", "1")
    assert code == 0 and out.startswith("<?xml")

import json
import subprocess
import sys

import pytest

from maghom.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c8_file(tmp_path, capsys):
    main(["family", "cycle", "8"])
    p = tmp_path / "c8.json"
    p.write_text(capsys.readouterr().out)
    return str(p)


def test_family_and_magnitude(capsys, monkeypatch):
    code, out, _ = run(capsys, "family", "cycle", "3")
    assert code == 0
    code, out, _ = run(capsys, "magnitude", "--lmax", "0", stdin=out, monkeypatch=monkeypatch)
    data = json.loads(out)
    assert code == 0 and data["inverse"] == [3] and data["agree"]


def test_homology_c8(capsys, c8_file):
    code, out, _ = run(capsys, "homology", "--graph", c8_file, "--lmax", "10")
    assert code == 0
    cells = json.loads(out)["cells"]
    assert {(c["k"], c["l"]): c["rank"] for c in cells if c["rank"]}[(2, 4)] == 8
    assert all(c["torsion"] == [] for c in cells)


def test_homology_text_and_out(capsys, c8_file, tmp_path):
    dest = tmp_path / "t.txt"
    code, out, _ = run(capsys, "homology", "--graph", c8_file, "--lmax", "3", "--format", "text", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("l\\k")


def test_homology_fp_mode(capsys, c8_file):
    code, out, _ = run(capsys, "homology", "--graph", c8_file, "--cells", "2,4;4,4", "--mode", "Fp", "--p", "3")
    data = json.loads(out)
    assert data["mode"] == "Fp" and data["p"] == 3 and len(data["cells"]) == 2


def test_partial_exit_code(capsys, c8_file):
    code, out, _ = run(capsys, "homology", "--graph", c8_file, "--lmax", "10", "--cell-timeout", "0.000001")
    assert code == 3
    assert json.loads(out)["skipped"]


def test_ky_pachner(capsys, tmp_path):
    code, out, _ = run(capsys, "ky", "--complex", "rp2")
    g = json.loads(out)
    assert code == 0 and g["n"] == 33 and len(g["edges"]) == 76
    code, out, _ = run(capsys, "pachner", "--builtin", "rp2", "--facet", "0")
    assert code == 0 and len(json.loads(out)["facets"]) == 12
    code, _, err = run(capsys, "pachner", "--builtin", "rp2", "--facet", "99")
    assert code == 2 and "out of range" in err


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "gu", "--m", "3", "--lmax", "5")
    assert code == 0 and json.loads(out)[0]["verdict"] == "pass"
    code, out, _ = run(capsys, "verify", "torsion-embedding", "--builtin", "sphere1", "--kmax", "3", "--format", "text")
    assert code == 0 and "PASS" in out


def test_verify_glue_spec(capsys, tmp_path):
    spec = {"pieces": [{"n": 6, "edges": [[i, (i + 1) % 6] for i in range(6)]}] * 2,
            "attachments": [{"piece": [0, 1], "target": [2, 3]}]}
    p = tmp_path / "glue.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "verify", "closed-form", "--form", "outerplanar-even-cycles", "--glue", str(p),
                       "--lmax", "5")
    assert code == 0
    code, out, _ = run(capsys, "verify", "mayer-vietoris", "--glue", str(p), "--lmax", "3")
    assert code == 0


def test_verify_hypotheses_not_met_exit(capsys, tmp_path):
    spec = {"pieces": [{"n": 5, "edges": [[i, (i + 1) % 5] for i in range(5)]}] * 2,
            "attachments": [{"piece": [0, 1], "target": [2, 3]}]}
    p = tmp_path / "glue.json"
    p.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "verify", "mayer-vietoris", "--glue", str(p), "--lmax", "3")
    assert code == 1 and json.loads(out)[0]["verdict"] == "hypotheses-not-met"


def test_malformed_json_location(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"n": 3,\n "edges": [[0, 1],\n}')
    code, _, err = run(capsys, "homology", "--graph", str(p))
    assert code == 2 and f"{p}:3:1" in err


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "homology", "--bogus")[0] == 2
    assert run(capsys, "homology", "--graph", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "homology", "--jobs", "0")[0] == 2
    assert run(capsys, "homology", "--mode", "Fp", "--p", "4", "--graph", str(tmp_path / "x"))[0] == 2
    p = tmp_path / "loop.json"
    p.write_text('{"n": 2, "edges": [[0, 0]]}')
    assert run(capsys, "homology", "--graph", str(p))[0] == 2


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "maghom", "family", "wheel", "5"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["n"] == 6


def test_deterministic_bytes_across_jobs(capsys, c8_file):
    a = run(capsys, "homology", "--graph", c8_file, "--lmax", "7", "--jobs", "1")[1]
    b = run(capsys, "homology", "--graph", c8_file, "--lmax", "7", "--jobs", "8")[1]
    assert a == b

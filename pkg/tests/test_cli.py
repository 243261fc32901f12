import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from harary_lab.cli import main

SCHEMA = json.loads(resources.files("harary_lab").joinpath("report_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return code, data


def test_poly_examples(capsys):
    assert run(capsys, "poly", "--named", "C4", "--kind", "independence")[1].strip() == "1 + 4x + 2x^2"
    assert run(capsys, "poly", "--named", "P3", "--kind", "harary:induced-free:P3")[1].strip() == "-x + x^3"
    assert run(capsys, "poly", "--graph6", "A_", "--kind", "xi")[1].strip() == "x^2 + x*y + z"
    assert run(capsys, "poly", "--named", "C4", "--kind", "independence", "--order", "desc")[1].strip() == "2x^2 + 4x + 1"


@pytest.mark.parametrize(
    "kind, expected",
    [
        ("chromatic", "-3x + 6x^2 - 4x^3 + x^4"),
        ("tutte", "x^3 + x^2 + x + y"),
        ("matching", "1 + 4x + 2x^2"),
        ("matching-defect", "2 - 4x^2 + x^4"),
        ("domination", "6x^2 + 4x^3 + x^4"),
        ("char", "-4x^2 + x^4"),
        ("laplacian", "-16x + 20x^2 - 8x^3 + x^4"),
        # clique partitions of C4: one into singletons, four using one edge, two perfect matchings
        ("adjoint", "x^2 - 2x^3 + x^4"),
    ],
)
def test_poly_kinds_on_c4(capsys, kind, expected):
    code, out, _ = run(capsys, "poly", "--named", "C4", "--kind", kind)
    assert code == 0 and out.strip() == expected


def test_adjoint_and_convex_aliases(capsys):
    a = run(capsys, "poly", "--named", "C4", "--kind", "adjoint")[1]
    b = run(capsys, "poly", "--named", "C4", "--kind", "harary:complete")[1]
    assert a == b
    c = run(capsys, "poly", "--named", "C4", "--kind", "convex")[1]
    d = run(capsys, "poly", "--named", "C4", "--kind", "harary:connected")[1]
    assert c == d


def test_poly_json_matches_text(capsys):
    code, data = run_json(capsys, "poly", "--graph6", "A_", "--kind", "xi")
    assert code == 0
    assert data["polynomial"] == "x^2 + x*y + z"
    assert data["terms"] == [[1, [2, 0, 0]], [1, [1, 1, 0]], [1, [0, 0, 1]]]


def test_poly_edge_file(tmp_path, capsys):
    f = tmp_path / "loop.txt"
    f.write_text("2 2\n0 1\n1 1\n")
    code, out, _ = run(capsys, "poly", "--edges", str(f), "--kind", "tutte")
    assert code == 0 and out.strip() == "x*y"


def test_verify_not_harary(capsys):
    code, data = run_json(capsys, "verify", "--suite", "not-harary")
    assert code == 0 and len(data) == 6 and all(r["pass"] for r in data)
    assert sum("erratum" in r["note"] for r in data) == 2
    code, out, _ = run(capsys, "verify", "--suite", "not-harary")
    assert out.strip().endswith("6/6 checks passed")


def test_verify_other_suites(capsys):
    for suite in ("xi-oracle", "matching", "published-values", "zero-patterns"):
        code, data = run_json(capsys, "verify", "--suite", suite)
        assert code == 0 and data


def test_verify_failure_exit_code(capsys, monkeypatch):
    from harary_lab import verify

    bad = verify.VerdictReport("always fails", "test", "1", "trivial", "2", False)
    monkeypatch.setitem(verify.SUITES, "matching", lambda: [bad])
    code, out, _ = run(capsys, "verify", "--suite", "matching")
    assert code == 1 and out.startswith("FAIL")


def test_rank_examples(capsys):
    code, data = run_json(capsys, "rank", "--poly", "chromatic", "--op", "join", "--family", "K", "--size", "5")
    assert code == 0 and data["rank"] == 5
    code, data = run_json(capsys, "rank", "--poly", "harary:connected", "--op", "union", "--family", "M", "--size", "4", "--growth")
    assert data["rank"] == 4 and data["ranks"] == {"1": 1, "2": 2, "3": 3, "4": 4}
    assert run(capsys, "rank", "--poly", "chromatic", "--op", "join", "--family", "K", "--size", "5")[1].strip().endswith("rank 5")


def test_classify_example(capsys):
    code, out, _ = run(capsys, "classify", "--prop", "mcc:2", "--nmax", "5")
    lines = {l.split()[0]: l.split()[1] for l in out.splitlines()[1:]}
    assert lines["hereditary"] == lines["monotone"] == lines["additive"] == "yes"
    code, data = run_json(capsys, "classify", "--prop", "induced-free:P3", "--nmax", "4")
    assert data["flags"]["monotone"] is False and data["counterexamples"]["monotone"]["operation"]


def test_zeros_and_hankel(capsys):
    code, data = run_json(capsys, "zeros", "--prop", "induced-free:K3", "--family", "K")
    assert data["thresholds"] == {"1": 3, "2": 5, "3": 7}
    code, data = run_json(capsys, "hankel", "--poly", "chromatic", "--op", "join", "--family", "K", "--size", "3", "--at", "4")
    assert data["matrix"] == [[12, 24, 24], [24, 24, 0], [24, 0, 0]]
    code, data = run_json(capsys, "hankel", "--poly", "convex", "--op", "union", "--family", "M", "--size", "2")
    assert len(data["entries"]) == 2
    code, data = run_json(capsys, "bounds")
    assert data["partition"] == 12


def test_error_exit_codes(capsys):
    assert run(capsys, "poly", "--named", "Q3", "--kind", "xi")[0] == 2
    assert run(capsys, "poly", "--named", "C4", "--kind", "nonsense")[0] == 2
    assert run(capsys, "poly", "--graph6", "~~", "--kind", "xi")[0] == 2
    code, _, err = run(capsys, "poly", "--named", "K13", "--kind", "chromatic")
    assert code == 3 and "bound" in err
    with pytest.raises(SystemExit) as exc:
        main(["poly", "--kind", "xi"])
    assert exc.value.code == 2


def test_env_bound_override(capsys, monkeypatch):
    monkeypatch.setenv("HARARY_LAB_BOUNDS", "chromatic=13")
    assert run(capsys, "poly", "--named", "P13", "--kind", "chromatic")[0] == 0
    monkeypatch.setenv("HARARY_LAB_BOUNDS", "chromatic=100")
    assert run(capsys, "poly", "--named", "P3", "--kind", "chromatic")[0] == 2


def test_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "harary_lab.cli", "verify", "--suite", "matching", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)

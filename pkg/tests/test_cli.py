import json
from pathlib import Path

import pytest

from surfcalc.cli import run

DATA = Path(__file__).resolve().parent.parent / "data"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_normalize(capsys):
    assert call(capsys, "normalize", "P(@1,P(@2,@3))") == (0, "P(P(@1,@2),@3)", "")


def test_normalize_trace_json(capsys):
    code, out, _ = call(capsys, "normalize", "P(@1,D)", "--trace", "--json")
    data = json.loads(out)
    assert code == 0 and data["normal_form"] == "O@1" and data["trace"][0]["rule"] == "UnitRight"


def test_compose(capsys):
    code, out, _ = call(capsys, "compose", "--outer", "P(@1,@2)", "--args", "D", "D")
    assert (code, out) == (0, "D")


def test_scompose_and_stensor(capsys):
    code, out, _ = call(capsys, "scompose", "[T(D); D] : 0 -> 2", "P(@1,@2)")
    assert (code, out) == (0, "[T(D)] : 0 -> 1")
    code, out, _ = call(capsys, "stensor", "T(@1)", "O@1")
    assert (code, out) == (0, "[T(@1); O@2] : 2 -> 2")


def test_pants_loop(capsys):
    code, out, _ = call(capsys, "pants-loop-check", "T(D)")
    assert code == 0 and "==" in out
    code, _, err = call(capsys, "pants-loop-check", "T(@1)")
    assert code == 2 and "closed surface" in err


def test_d_degree(capsys):
    assert call(capsys, "d-degree", "d4 f")[:2] == (0, "1")
    assert call(capsys, "d-degree", "d4 f", "-p", "4")[:2] == (0, "1")
    assert call(capsys, "d-degree", "d3 d4 f")[:2] == (0, "2")


def test_vertices(capsys):
    code, out, _ = call(capsys, "vertices", "s0 d3 d4 f")
    assert code == 0 and out.splitlines() == ["0: s0 d3 d4 f", "1: s0 d3 f d4", "2: s0 f d3 d4"]


def test_dtilde_compose(capsys):
    code, out, _ = call(capsys, "dtilde-compose", "d1", "d4 f #1")
    assert (code, out) == (0, "d1 d4 f @ (1, 0)")
    code, _, err = call(capsys, "dtilde-compose", "d1 f", "d4 f")
    assert code == 2


def test_esigma(capsys):
    code, out, _ = call(capsys, "esigma", "3", "--max-degree", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["simplices"] == [6, 36] and data["freeness"]["1"]["free"]


def test_nerve(capsys):
    code, out, _ = call(capsys, "nerve", "--category", str(DATA / "chain2.category.json"))
    assert code == 0 and "[3, 3, 1]" in out and "euler characteristic 1" in out
    assert call(capsys, "nerve")[0] == 2


def test_audit(capsys):
    assert call(capsys, "audit", "circle")[0] == 0
    code, out, _ = call(capsys, "audit", str(DATA / "twisted_triangle.json"))
    assert code == 1 and "d0d2 != d1d0 on t" in out
    assert call(capsys, "audit", "klein-bottle")[0] == 2


def test_bar_builtin(capsys):
    code, out, _ = call(capsys, "bar", "--builtin", "interval", "--object", "1", "--internal", "1", "--json")
    data = json.loads(out)
    row = data["objects"][0]
    assert code == 0 and row["counts"] == [18, 27, 36] and row["projected_counts"] == [12, 21, 30]
    assert row["homotopy_ok"] and row["d_after_i_is_identity"]


def test_bar_from_files(capsys):
    code, out, _ = call(capsys, "bar", "--category", str(DATA / "chain2.category.json"),
                        "--functor", str(DATA / "chain2.functor.json"), "--object", "2")
    assert code == 0 and "simplices [6, 10, 15]" in out


def test_check(capsys):
    code, out, _ = call(capsys, "check", "confluence", "--max-nodes", "5")
    assert code == 0 and out.startswith("confluence:") and "ok" in out
    code, out, _ = call(capsys, "check", "levels", "--count", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["reports"][0]["params"]["count"] == 5


@pytest.mark.parametrize("argv", [
    ["normalize", "P(@1"],
    ["compose", "--outer", "P(@1,@2)", "--args", "D"],
    ["check", "nope"],
    ["bogus"],
    [],
    ["d-degree", "d9 f", "-p", "2"],
])
def test_usage_errors(capsys, argv):
    assert call(capsys, *argv)[0] == 2

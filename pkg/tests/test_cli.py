import json
import subprocess
import sys

import numpy as np
import pytest

from gqlrc import formats
from gqlrc.cli import main
from gqlrc.egg import elementary_egg_from_oval, save_egg
from gqlrc.gf import field_create
from gqlrc.pgeom import conic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_te_conic(capsys, tmp_path):
    path = tmp_path / "gq.json"
    code, out, _ = run(capsys, "build", "--gq", "te-conic", "--q", "2", "--out", str(path))
    assert code == 0
    assert "15 points, 15 lines, (s,t,alpha)=(2,2,1)" in out
    doc = json.loads(path.read_text())
    assert doc["params"] == {"s": 2, "t": 2, "alpha": 1}
    assert len(doc["points"]) == len(doc["lines"]) == 15


def test_build_t2star_odd(capsys):
    code, out, err = run(capsys, "build", "--gq", "t2star", "--q", "3")
    assert code == 1 and "q odd" in err and out == ""


def test_build_p_h(capsys):
    code, out, _ = run(capsys, "build", "--gq", "h3", "--p", "2", "--h", "2")
    assert code == 0 and "45 points, 27 lines" in out


def test_build_egg_file(capsys, tmp_path):
    F4, F2 = field_create(2, 2), field_create(2)
    path = tmp_path / "egg.json"
    save_egg(elementary_egg_from_oval(conic(F4), F4, F2), path)
    code, out, _ = run(capsys, "build", "--gq", "egg-file", "--in", str(path), "--strict")
    assert code == 0 and "(s,t,alpha)=(4,4,1)" in out


def test_mindist_te_conic(capsys, tmp_path):
    path = tmp_path / "mw.json"
    code, out, _ = run(capsys, "mindist", "--gq", "te-conic", "--q", "2", "--out", str(path))
    assert code == 0 and "d 3" in out
    doc = json.loads(path.read_text())
    assert doc["d"] == 3 and doc["complete"] and doc["all_line_multiples"]
    assert len(doc["words"]) == 15


def test_mindist_h3(capsys):
    code, out, _ = run(capsys, "mindist", "--gq", "h3", "--q", "4", "--threads", "2")
    assert code == 0 and "d 5" in out and "27 minimum words" in out


def test_mindist_wmax_zero(capsys):
    code, out, _ = run(capsys, "mindist", "--gq", "w3", "--q", "2", "--wmax", "0")
    assert code == 0 and "no codeword of weight <= 0" in out


def test_mindist_space(capsys):
    code, out, _ = run(capsys, "mindist", "--space", "ag", "--dim", "3", "--t", "1", "--q", "2")
    assert code == 0 and "d 2" in out


@pytest.mark.parametrize("method", ["sweep", "exhaustive", "bz"])
def test_mindist_methods(capsys, method):
    code, out, _ = run(capsys, "mindist", "--gq", "q4", "--q", "2", "--method", method)
    assert code == 0 and "d 3" in out


def test_mindist_budget(capsys):
    code, out, _ = run(capsys, "mindist", "--gq", "te-conic", "--q", "3", "--method", "sweep", "--budget", "10")
    assert code == 2 and "budget" in out


def test_mindist_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("GQLRC_BUDGET", "10")
    code, _, _ = run(capsys, "mindist", "--gq", "te-conic", "--q", "3", "--method", "sweep")
    assert code == 2


def test_lrc_report_q43(capsys, tmp_path):
    path = tmp_path / "lrc.json"
    code, out, _ = run(capsys, "lrc-report", "--gq", "q4", "--q", "3", "--out", str(path))
    assert code == 0 and "r=3, a=8" in out and "match" in out
    doc = json.loads(path.read_text())
    assert (doc["r"], doc["a"], doc["tight_r"], doc["tight_a"]) == (3, 8, True, False)


def test_lrc_report_q52(capsys):
    code, out, _ = run(capsys, "lrc-report", "--gq", "q5", "--q", "2")
    assert code == 0 and "r=2, a=5" in out


@pytest.mark.parametrize("argv", [
    ["lrc-report", "--gq", "q4"],
    ["lrc-report", "--gq", "bogus", "--q", "2"],
    ["lrc-report", "--q", "2"],
    ["lrc-report", "--gq", "q4", "--q", "2", "--p", "3"],
    ["build", "--gq", "te-conic", "--q", "2", "--m", "2"],
    [],
])
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_export_fano_alist(capsys, tmp_path):
    path = tmp_path / "fano.alist"
    code, _, _ = run(capsys, "export", "--space", "pg", "--dim", "2", "--t", "1", "--q", "2",
                     "--format", "alist", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.splitlines()[0] == "7 7"
    assert formats.from_alist(text).shape == (7, 7)


def test_export_csv_q42(capsys, tmp_path):
    path = tmp_path / "n.csv"
    code, _, _ = run(capsys, "export", "--gq", "q4", "--q", "2", "--format", "csv", "--out", str(path))
    assert code == 0
    assert formats.from_csv(path.read_text()).shape == (15, 15)


@pytest.mark.parametrize("matrix", ["generator", "parity"])
def test_export_code_matrices(capsys, tmp_path, matrix):
    path = tmp_path / "m.json"
    code, _, _ = run(capsys, "export", "--gq", "w3", "--q", "2", "--matrix", matrix, "--out", str(path))
    assert code == 0
    M, header = formats.from_json(path.read_text())
    assert header["k"] == 10 and M.shape[1] == 15
    assert M.shape[0] == (10 if matrix == "generator" else 5)


def test_export_needs_out(capsys):
    code, _, _ = run(capsys, "export", "--gq", "w3", "--q", "2")
    assert code == 1


def test_export_empty_selection(capsys, tmp_path):
    code, _, err = run(capsys, "export", "--space", "pg", "--dim", "1", "--t", "0", "--q", "2",
                       "--matrix", "parity", "--out", str(tmp_path / "x.json"))
    assert code == 1 and "empty" in err


def test_mindist_from_matrix_file(capsys, tmp_path):
    path = tmp_path / "fano.alist"
    run(capsys, "export", "--space", "pg", "--dim", "2", "--t", "1", "--q", "2",
        "--format", "alist", "--out", str(path))
    code, out, _ = run(capsys, "mindist", "--in", str(path))
    assert code == 0 and "k 4, d 3" in out


def test_selftest_only(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "q4-2")
    assert code == 0
    assert out.count("[PASS") == 1 and "1 passed" in out


def test_selftest_unknown(capsys):
    code, _, _ = run(capsys, "selftest", "--only", "nope")
    assert code == 1


def test_selftest_budget_reported(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "q4-2,q4-3", "--budget", "10")
    assert code == 2
    assert "[BUDGET" in out and "[FAIL" not in out


def test_deterministic_outputs(tmp_path):
    paths = []
    for i in range(2):
        out = tmp_path / f"run{i}.json"
        subprocess.run([sys.executable, "-m", "gqlrc.cli", "lrc-report", "--gq", "te-conic", "--q", "2",
                        "--threads", str(i + 1), "--out", str(out)], check=True, capture_output=True)
        paths.append(out.read_bytes())
    assert paths[0] == paths[1]


def test_deterministic_export(capsys, tmp_path):
    a, b = tmp_path / "a.alist", tmp_path / "b.alist"
    for path in (a, b):
        run(capsys, "export", "--gq", "te-ovoid", "--q", "2", "--format", "alist", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()
    assert np.array_equal(formats.from_alist(a.read_text()).sum(axis=1), np.full(45, 3))

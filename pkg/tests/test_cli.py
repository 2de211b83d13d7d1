from __future__ import annotations

import json
import subprocess
import sys

import pytest

from plucking import qcalc
from plucking import tree as T
from plucking.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line.strip()]


def test_compute_tree(capsys):
    code, [rec] = run(capsys, "compute", "--tree", "(()()((())))")
    assert code == 0
    assert rec["coeffs"] == "1,2,3,4,4,3,2,1"
    assert rec["shape"]["strictly_unimodal"] is True


def test_compute_binom(capsys):
    code, [rec] = run(capsys, "compute", "--binom", "6,6")
    assert code == 0
    assert qcalc.from_csv(rec["coeffs"])[15:22] == (51, 55, 55, 58, 55, 55, 51)
    assert rec["shape"]["top_type"] == [2, 1, 2]


def test_compute_figures(capsys, tmp_path):
    code, [rec] = run(capsys, "compute", "--binoms", "2,2;2,3", "--figures", str(tmp_path))
    assert code == 0
    assert len(rec["figures"]) == 2
    for path in rec["figures"]:
        with open(path, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"


def test_classify_prediction(capsys):
    code, [rec] = run(capsys, "classify", "--binoms", "1,2;6,6")
    assert code == 0
    assert rec["prediction"]["covered"] and rec["prediction"]["matches"]
    assert rec["prediction"]["top_len"] == 2


def test_classify_non_palindromic(capsys):
    code, [rec] = run(capsys, "classify", "--coeffs", "1,3,2")
    assert code == 0
    assert rec["shape"] is None and "palindromic" in rec["shape_error"]


def test_realize_ok(capsys):
    code, [rec] = run(capsys, "realize", "--binoms", "3,6;2,2")
    assert code == 0 and rec["verified"]
    t = T.parse_tree(rec["tree"])
    assert T.pluck_product(t) == qcalc.poly_mul(qcalc.gauss(3, 6), qcalc.gauss(2, 2))


def test_realize_rejected(capsys):
    code, [rec] = run(capsys, "realize", "--binoms", "4,4;2,3")
    assert code == 4
    assert rec["status"] == "NOT-REALIZABLE" and rec["witness"] == 5
    code, [rec] = run(capsys, "realize", "--qints", "3,5,5")
    assert code == 4 and rec["witness"] == 5


def test_enumerate_and_catalog(capsys, tmp_path):
    path = tmp_path / "cat5.tsv"
    code, recs = run(capsys, "enumerate", "--edges", "5", "--catalog", str(path))
    assert code == 0
    head, groups = recs[0], recs[1:]
    assert head["trees"] == 20 and head["reduced_trees"] == 11
    assert len(groups) == 1 and groups[0]["size"] == 2
    code, again = run(capsys, "enumerate", "--from-catalog", str(path))
    assert code == 0 and again[1:] == groups


def test_enumerate_no_collisions(capsys):
    code, recs = run(capsys, "enumerate", "--edges", "2")
    assert code == 0 and recs[0]["collision_groups"] == 0 and len(recs) == 1


def test_enumerate_family_of_three(capsys):
    code, recs = run(capsys, "enumerate", "--edges", "8")
    family = qcalc.to_csv(qcalc.poly_prod(qcalc.q_int(a) for a in (4, 5, 7, 8)))
    assert [g["size"] for g in recs[1:] if g["coeffs"] == family] == [3]


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv(T.BUDGET_ENV, "4")
    assert main(["enumerate", "--edges", "5"]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--tree", "(()"],
        ["compute", "--binom", "6"],
        ["compute", "--qints", "3,x"],
        ["compute"],
        ["verify", "no-such-suite"],
        ["enumerate"],
    ],
)
def test_usage_errors(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_domain_error(capsys):
    assert main(["compute", "--binoms=-1,2"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "pak-panova", "--max", "8"],
        ["verify", "lemma31", "--max", "6"],
        ["verify", "lemma34", "--max", "6"],
        ["verify", "theorem41", "--degree", "10"],
        ["verify", "tree-invariants", "--max", "5", "--seed", "3"],
        ["verify", "realizability", "--degree", "8"],
        ["verify", "chains", "--max", "6"],
    ],
)
def test_verify_suites(argv, capsys):
    code, recs = run(capsys, *argv)
    assert code == 0
    assert recs[-1]["failed"] == 0 and recs[-1]["total"] > 0


def test_verify_figures(capsys, tmp_path):
    code, recs = run(capsys, "verify", "pak-panova", "--max", "10", "--figures", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["pak-panova-tops.png", "pak-panova.png"]


def test_pretty_output(capsys):
    assert main(["compute", "--qints", "3,5", "--pretty"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("qints") and "1,2,3,3,3,2,1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "plucking", "realize", "--binoms", "2,3;2,2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 4
    assert json.loads(proc.stdout)["witness"] == 4

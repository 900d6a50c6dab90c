import json

import pytest

from metaplectic import verify as vf
from metaplectic.cli import main
from metaplectic.errors import UnknownSuite


def test_same_seed_same_report():
    a = vf.dumps(vf.run_suite("cocycle", 5, seed=7, samples=100))
    b = vf.dumps(vf.run_suite("cocycle", 5, seed=7, samples=100))
    assert a == b
    c = vf.dumps(vf.run_suite("cocycle", 5, seed=8, samples=100))
    assert json.loads(c)["checks"] == json.loads(a)["checks"]


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        vf.run_suite("nope", 3)


def test_run_all_totals_and_p2_scope():
    agg = vf.run_all([3], seed=1, samples=20, suites=["hilbert", "weil"])
    assert [(r.suite, r.p) for r in agg.reports] == [("hilbert", 2), ("hilbert", 3), ("weil", 3)]
    assert agg.checks == sum(r.checks for r in agg.reports)
    assert agg.ok


def test_report_schema():
    data = vf.run_suite("weil", 3, samples=20).to_json()
    assert set(data) == {"suite", "p", "seed", "samples", "checks", "failures", "tally"}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_cli_scalar_verbs(capsys):
    assert run(capsys, "hilbert", "-1", "-1", "--p", "2") == (0, ("-1\n", ""))
    assert run(capsys, "hilbert", "2", "5", "--p", "5")[1].out == "-1\n"
    assert run(capsys, "hilbert", "1/2", "3", "--p", "7")[1].out == "+1\n"
    assert run(capsys, "weil", "3", "--p", "3")[1].out == "i\n"
    assert run(capsys, "weil", "3", "--p", "3", "--shift", "-1")[1].out == "-i\n"
    assert run(capsys, "weil", "-1", "--p", "2")[1].out == "-i\n"
    assert run(capsys, "squareclass", "18/5", "--p", "3")[1].out == "1\n"


def test_cli_matrix_verbs(capsys, tmp_path):
    f = tmp_path / "j.json"
    f.write_text(json.dumps([["0", "1"], ["-1", "0"]]))
    assert run(capsys, "xmap", str(f), "--p", "3")[1].out == "2\n"
    assert run(capsys, "cellrank", str(f), "--p", "3")[1].out == "1\n"
    code, out = run(capsys, "cocycle", str(f), str(f), "--p", "3")
    assert json.loads(out.out) == {"value": 1, "path": "KubotaN1"}
    code, out = run(capsys, "bruhat", '[["1","0","1","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]', "--p", "3")
    assert json.loads(out.out)["j"] == 0
    code, out = run(capsys, "inverse", str(f), "--p", "3", "--eps", "-1")
    assert json.loads(out.out)["path"] == "InversePair"


def test_cli_structure_and_deciders(capsys):
    assert run(capsys, "center-image", "--shape", "2;0", "--p", "3")[1].out == "1\n"
    code, out = run(capsys, "center-mul", "--shape", "1;0", "2;1", "3;1", "--p", "3")
    assert json.loads(out.out)["eps"] == -1
    code, out = run(capsys, "decide-gsp4", "--chi1", '{"p": 5, "e": 0, "s": "0", "theta": "1/4"}',
                    "--chi2", '{"p": 5, "e": 0, "s": "0", "theta": "1/4"}', "--p", "5")
    assert json.loads(out.out)["witness"]["tag"] == "I"
    code, out = run(capsys, "whittaker-orbits", "--shape", "1;1", "--group", "T'", "--p", "3")
    assert json.loads(out.out)["count"] == 1
    code, out = run(capsys, "counterexample", "--p", "5")
    assert code == 0 and "FAIL" not in out.out
    code, out = run(capsys, "omega-set", "--shape", "1;0", "--eta-prime", "eta:2", "--p", "3")
    assert len(json.loads(out.out)) == 4


def test_cli_exit_codes(capsys, tmp_path):
    assert run(capsys, "hilbert", "0", "3", "--p", "3")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "decide-gsp4", "--chi1", "eta:1", "--chi2", "eta:1", "--p", "2")[0] == 2
    out = tmp_path / "r.json"
    code, _ = run(capsys, "verify", "--suite", "weil", "--p", "5", "--samples", "20", "--json", str(out))
    assert code == 0 and json.loads(out.read_text())["ok"] is True
    code, res = run(capsys, "torus-rep", "verify", "--p", "3", "--samples", "5")
    assert code == 0 and "FAIL" not in res.out

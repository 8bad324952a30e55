import json
import subprocess
import sys

import pytest

from joq.cli import main
from joq.sequences import k_by_recurrence
from joq.scalars import render_rational


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_seq_k(capsys):
    code, out = run(capsys, "seq", "K", "--from", "0", "--to", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,value"
    assert [l.split(",")[1] for l in lines[1:]] == "3 1 3 10 15 31 66 127 255".split()


def test_seq_m(capsys):
    _, out = run(capsys, "seq", "M", "--from", "0", "--to", "5")
    assert [l.split(",")[1] for l in out.splitlines()[1:]] == ["2", "-1", "-1", "2", "-1", "-1"]


def test_seq_negative_k_json(capsys):
    _, out = run(capsys, "seq", "K", "--from", "-3", "--to", "-1", "--format", "json")
    values = [row["value"] for row in json.loads(out)]
    assert values == [render_rational(k_by_recurrence(n)) for n in (-3, -2, -1)]
    assert values == ["17/8", "-3/4", "-1/2"]


def test_seq_rejects_unknown_name(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["seq", "F"])
    assert exc.value.code == 2


def test_seq_rejects_empty_range():
    with pytest.raises(SystemExit) as exc:
        main(["seq", "K", "--from", "3", "--to", "1"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["--n", "0", "--abc", "1,2,3", "--what", "qk"], "3 + 1*I + 3*J + 10*K"),
        (["--n", "0", "--abc", "1,2,3", "--what", "norm"], "119"),
        (["--n", "0", "--abc", "1,2,3", "--what", "norm", "--variant", "paper"], "121"),
        (["--n", "0", "--a", "1", "--b", "2", "--c", "3", "--what", "qm"], "2 - 1*I - 1*J + 2*K"),
        (["--n", "2", "--a", "1", "--what", "gaussian"], "3 + 10*I"),
        (["--n", "-1", "--abc", "1,2,3"], "-1/2 + 3*I + 1*J + 3*K"),
    ],
)
def test_quat(capsys, argv, expected):
    code, out = run(capsys, "quat", *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("argv", [["--n", "x", "--abc", "1,2,3"], ["--n", "0", "--abc", "1,2"], ["--n", "0", "--a", "1"]])
def test_quat_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(["quat", *argv])
    assert exc.value.code == 2


def test_table(capsys):
    _, out = run(capsys, "table", "--abc", "1,2,3", "--from", "-1", "--to", "1")
    assert out.splitlines() == ["n,r,i,j,k", "-1,-1/2,3,1,3", "0,3,1,3,10", "1,1,3,10,15"]
    _, out = run(capsys, "table", "--abc", "0,0,0", "--from", "0", "--to", "0", "--format", "json", "--what", "qm")
    assert json.loads(out) == [{"n": 0, "r": "2", "i": "2", "j": "2", "k": "2"}]


@pytest.mark.parametrize("abc, depth", [("1,2,3", "16"), ("0,0,0", "8")])
def test_gf(capsys, abc, depth):
    code, out = run(capsys, "gf", "--abc", abc, "--depth", depth)
    payload = json.loads(out)
    assert code == 0 and payload["check"] is True
    assert len(payload["numerator_coeffs"]) == 3


def test_gf_numerator_text(capsys):
    _, out = run(capsys, "gf", "--abc", "1,2,3")
    assert json.loads(out)["numerator_coeffs"] == [
        "3 + 1*I + 3*J + 10*K",
        "-2 + 2*I + 7*J + 5*K",
        "-1 + 6*I + 2*J + 6*K",
    ]


def test_gf_depth_too_small():
    with pytest.raises(SystemExit) as exc:
        main(["gf", "--abc", "1,2,3", "--depth", "2"])
    assert exc.value.code == 2


def test_verify_subset(capsys):
    code, out = run(capsys, "verify", "--checks", "cassini", "--n-min", "1", "--n-max", "16")
    report = json.loads(out)
    assert code == 0
    assert report["schema"] == "joq-report/1"
    [check] = report["checks"]
    assert check["name"] == "cassini" and check["status"] == "pass"
    assert check["cases_run"] == 16 * len(report["config"]["triples"])


def test_verify_explicit_triples(capsys):
    code, out = run(capsys, "verify", "--checks", "norm-printed-variant", "--triples", "1,2,3", "--n-min", "0", "--n-max", "0")
    report = json.loads(out)
    assert code == 0
    [check] = report["checks"]
    assert check["status"] == "erratum-documented"
    assert check["counterexamples"] == [{"n": 0, "offsets": "1,2,3", "lhs": "119", "rhs": "121"}]


def test_verify_mutation_fails(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out = run(capsys, "verify", "--checks", "cassini,sums", "--mutate", "--output", str(target))
    report = json.loads(out)
    assert code == 1
    assert target.read_text() == out
    for check in report["checks"]:
        assert check["status"] == "fail"
        assert len(check["counterexamples"]) >= 1


def test_verify_counterexample_reproduces(capsys):
    _, out = run(capsys, "verify", "--checks", "qk-recurrences", "--mutate", "--triples", "1,2,3")
    ce = json.loads(out)["checks"][0]["counterexamples"][0]
    _, lhs = run(capsys, "quat", "--n", str(ce["n"] + 3), "--abc", ce["offsets"])
    assert lhs.strip() == ce["lhs"]


def test_verify_unknown_check():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--checks", "nope"])
    assert exc.value.code == 2


def test_verify_list_checks(capsys):
    code, out = run(capsys, "verify", "--list-checks")
    assert code == 0 and "cassini" in out.split()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "joq", "quat", "--n", "0", "--abc", "1,2,3", "--what", "norm"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "119"

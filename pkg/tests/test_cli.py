import json
import subprocess
import sys

import pytest

from spindaha.cli import EXIT_FAIL, EXIT_INTEGRITY, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--algebra", "thc", "--type", "A", "--n", "2", "s1*x1"], "x2 s1 - 1 - c1 c2"),
        (["--algebra", "thc", "--formal-params", "s1*x1"], "x2 s1 - u - u c1 c2"),
        (["--algebra", "tsh", "--type", "B", "--n", "2", "t2*xi2"], "-xi2 t2 + 1"),
        (["--algebra", "tsh", "--type", "B", "--n", "2", "--v", "3", "t2*xi2"], "-xi2 t2 + 3"),
        (["--algebra", "clifford", "--n", "3", "c2*c1"], "-c1 c2"),
        (["--algebra", "spinweyl", "--type", "D", "--n", "4", "tpi4^2"], "-1"),
        (["--algebra", "wang", "--n", "2", "e1^-1"], "e1^(-1)"),
        (["1"], "1"),
    ],
)
def test_normalize(capsys, argv, expected):
    code, out, _ = run(capsys, "normalize", *argv)
    assert code == EXIT_OK
    assert out == expected


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "normalize", "--algebra", "thc", "x1*y1")
    assert code == EXIT_USAGE
    assert "no generator y1 in H^c at position 3" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "presentation", "--algebra", "wang", "--type", "B"],
        ["verify", "pbw", "--algebra", "clifford"],
        ["verify", "presentation", "--type", "D", "--n", "3"],
        ["normalize", "--u", "1/x", "x1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("spindaha: error:")


def test_verify_passes_and_reports_flags(capsys):
    code, out, _ = run(capsys, "verify", "presentation", "--algebra", "spinweyl", "--type", "D", "--n", "5")
    assert code == EXIT_OK
    assert "FLAG tpi5 t1" in out
    assert out.splitlines()[-1].endswith("3 flagged")


def test_verify_type_b_thc_is_complete(capsys):
    code, out, _ = run(capsys, "verify", "presentation", "--algebra", "thc", "--type", "B", "--n", "2", "--json", "-")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["summary"]["failed"] == 0
    assert rep["summary"]["passed"] == rep["summary"]["total"]


def test_verify_iso_type_a3(capsys):
    code, out, _ = run(capsys, "verify", "iso", "--algebra", "thc", "--type", "A", "--n", "3", "--samples", "20", "--json", "-")
    assert code == EXIT_OK
    maps = {c.get("map") for c in json.loads(out)["checks"]}
    assert {"phi_fin", "psi_fin", "phi_big", "psi_big"} <= maps


def test_json_report_is_byte_identical(capsys, tmp_path):
    paths = []
    for k in range(2):
        p = tmp_path / f"r{k}.json"
        code, _, _ = run(capsys, "verify", "all", "--algebra", "tsh", "--type", "B", "--n", "2", "--seed", "5",
                         "--samples", "10", "--json", str(p))
        assert code == EXIT_OK
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]


def test_failing_check_exit_code(capsys, monkeypatch):
    from spindaha import cli
    from spindaha.report import Check

    monkeypatch.setitem(cli.RUNNERS, "presentation", lambda s: [Check("x = y", "x", "y", False)])
    code, out, _ = run(capsys, "verify", "presentation")
    assert code == EXIT_FAIL
    assert out.startswith("FAIL x = y")


def test_integrity_error_exit_code(capsys, monkeypatch):
    from spindaha import cli
    from spindaha.weyl import IntegrityError

    def boom(s):
        raise IntegrityError("normal form and faithful probe disagree")

    monkeypatch.setitem(cli.RUNNERS, "presentation", boom)
    code, _, err = run(capsys, "verify", "presentation")
    assert code == EXIT_INTEGRITY
    assert "integrity error" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "spindaha", "normalize", "x1*x2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "x1 x2"

import json

from spindaha import Check, Report
from spindaha.report import SCHEMA


def sample() -> Report:
    r = Report("presentation", "thc", "A:2", {"u": "1", "v": "1", "formal": False}, 0)
    r.extend([
        Check("s1^2 = 1", "1", "1", True, probe_agreement=True),
        Check("tpi5 t1 = t1 tpi5", "t4 tpi5", "t1 tpi5", False, flagged=True, note="known discrepancy"),
    ])
    return r


def test_flagged_checks_do_not_fail_the_report():
    r = sample()
    assert r.passed
    assert r.summary() == {"total": 2, "passed": 1, "failed": 0, "flagged": 1, "ok": True}
    r.extend([Check("x1 = x2", "x1", "x2", False)])
    assert not r.passed and len(r.failures()) == 1


def test_probe_disagreement_is_a_failure():
    assert not Check("a = b", "a", "b", True, probe_agreement=False).ok


def test_json_is_deterministic_and_complete():
    a, b = sample().to_json(), sample().to_json()
    assert a == b
    d = json.loads(a)
    assert d["schema"] == SCHEMA
    assert d["checks"][1]["flagged"] is True
    assert set(d["checks"][0]) == {"relation", "lhs", "rhs", "equal", "probe_agreement"}


def test_text_rendering():
    text = sample().to_text()
    assert text.splitlines()[0] == "ok   s1^2 = 1"
    assert "FLAG tpi5 t1 = t1 tpi5" in text
    assert text.endswith("presentation thc A:2: 1 passed, 0 failed, 1 flagged")

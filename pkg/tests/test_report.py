import csv
import io
import json

import pytest
from hypothesis import given, strategies as st

from cyclocong.report import CheckReport, CongruenceReport, divides, emit_report, sort_reports


def test_divides_convention():
    assert divides(0, 0)
    assert not divides(0, 5)
    assert divides(-6, 12)
    assert divides(4, -8)
    assert not divides(4, 6)


@given(st.integers(-100, 100), st.integers(-10**6, 10**6))
def test_verdict_matches_divides(m, a):
    r = CongruenceReport("c", {"n": 1}, a, m)
    assert r.passed == divides(m, a)
    assert r.verdict == ("pass" if divides(m, a) else "fail")


def test_json_single_record():
    r = CongruenceReport("odd_deriv.cubic", {"n": 5, "k": 1}, 60, 2)
    out = emit_report([r], "json-lines")
    lines = out.decode().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert list(rec) == ["claim_id", "params", "dividend", "modulus", "verdict", "witness"]
    assert rec == {
        "claim_id": "odd_deriv.cubic",
        "params": {"k": 1, "n": 5},
        "dividend": "60",
        "modulus": "2",
        "verdict": "pass",
        "witness": None,
    }


def test_big_integers_are_exact():
    big = 3**200
    rec = json.loads(emit_report([CongruenceReport("c", {"n": 2}, big, 3)], "json-lines"))
    assert int(rec["dividend"]) == big


def test_empty_stream():
    assert emit_report([], "json-lines") == b""
    assert emit_report([], "csv") == b""


def test_csv_record():
    reports = [CongruenceReport("c", {"n": 5, "k": 2}, 0, 0), CheckReport("d", {"p": 3}, False, "note")]
    rows = list(csv.reader(io.StringIO(emit_report(reports, "csv").decode())))
    assert rows[0] == ["claim_id", "params", "dividend", "modulus", "verdict", "witness"]
    assert rows[1] == ["c", "k=2;n=5", "0", "0", "pass", ""]
    assert rows[2] == ["d", "p=3", "", "", "fail", "note"]


def test_ordering_is_stable():
    rs = [
        CongruenceReport("b", {"n": 2, "k": 1}, 0, 1),
        CongruenceReport("a", {"n": 10, "k": 1}, 0, 1),
        CongruenceReport("a", {"n": 2, "k": 3}, 0, 1),
        CongruenceReport("a", {"n": 2, "k": 2}, 0, 1),
    ]
    ordered = [(r.claim_id, r.params["n"], r.params["k"]) for r in sort_reports(rs)]
    assert ordered == [("a", 2, 2), ("a", 2, 3), ("a", 10, 1), ("b", 2, 1)]
    assert emit_report(rs, "json-lines") == emit_report(list(reversed(rs)), "json-lines")


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report([], "xml")

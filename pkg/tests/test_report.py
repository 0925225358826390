import csv
import io
import json

import pytest
from hypothesis import given, strategies as st

from sympow.cli.report import TableReport, TableRow, build_report, emit_report, parse_json_report
from sympow.presentations import SpaceId

SPACES = [SpaceId(k, f, n) for f in ("C", "H")
          for k, n in [("SP2", None), ("SP2", 2), ("SP2", 3), ("MP", None), ("MP", 2), ("Gamma", 1),
                       ("Borel", 3), ("RK", None), ("KP", 2), ("RP", None)]]


def row(report, degree):
    return next(r for r in report.as_dict()["degrees"] if r["degree"] == degree)


def test_json_rows():
    rep = build_report(SpaceId("SP2", "C"), "Z", 0, 8)
    assert row(rep, 7) == {"degree": 7, "free": [], "torsion2": ["u[1,2]"]}
    assert row(rep, 1) == {"degree": 1, "free": [], "torsion2": []}
    repH = build_report(SpaceId("SP2", "H"), "Z", 16, 16)
    assert row(repH, 16) == {"degree": 16, "free": ["g^4", "g^2*h/2", "h^2/2"], "torsion2": []}


def test_json_key_order():
    data = json.loads(emit_report(build_report(SpaceId("SP2", "C"), "Z", 0, 2), "json"))
    assert list(data) == ["space", "field", "d", "coeff", "n", "degrees"]
    assert list(data["degrees"][0]) == ["degree", "free", "torsion2"]


@given(st.sampled_from(SPACES), st.sampled_from(["Z", "F2"]), st.integers(0, 10), st.integers(0, 12))
def test_json_round_trip(space, coeff, lo, width):
    if space.kind == "Borel" and coeff == "F2":
        return
    rep = build_report(space, coeff, lo, lo + width)
    assert parse_json_report(emit_report(rep, "json")) == rep


def test_csv_rows_and_endings():
    rep = build_report(SpaceId("SP2", "C", 2), "F2", 0, 8)
    raw = emit_report(rep, "csv")
    assert b"\r" not in raw
    rows = list(csv.reader(io.StringIO(raw.decode())))
    assert rows[0] == ["degree", "generator", "order"]
    assert rows[-1] == ["8", "a^6*t=m^3*t", "2"]
    integral = list(csv.reader(io.StringIO(emit_report(build_report(SpaceId("SP2", "C"), "Z", 7, 8), "csv").decode())))
    assert ["7", "u[1,2]", "2"] in integral and ["8", "g^4", "inf"] in integral


def test_text_is_deterministic_and_aligned():
    rep = build_report(SpaceId("SP2", "H"), "Z", 0, 24)
    a, b = emit_report(rep, "text"), emit_report(rep, "text")
    assert a == b
    lines = a.decode().splitlines()
    assert lines[0] == "SP2 field=H d=4 coeff=Z n=inf"
    assert len(lines) == 2 + 25


def test_empty_report():
    rep = TableReport("SP2", "C", 2, "Z", None, [TableRow(1)])
    assert json.loads(emit_report(rep, "json"))["degrees"] == [{"degree": 1, "free": [], "torsion2": []}]
    assert emit_report(rep, "csv") == b"degree,generator,order\n"


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_report(TableReport("SP2", "C", 2, "Z", None), "xml")

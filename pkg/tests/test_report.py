import json

import pytest

from conftest import graph
from vnumber import families
from vnumber.errors import CrossCheckError, DegenerateInputError, ResourceCapError
from vnumber.report import InvariantReport, check_report, compute_report, report_violations


def test_c7_report():
    r = compute_report(families.cycle(7), "C_7")
    assert (r.v_cover, r.reg_RmodJ, r.alpha0, r.cohen_macaulay) == (3, 4, 4, False)
    assert r.witness_cover == {"set": [1, 3, 5], "prime": [6, 7]}
    assert r.dominated_edge is None and not r.chordal and not r.complete_multipartite


def test_k222_and_k2_reports():
    r = compute_report(families.complete_multipartite([2, 2, 2]))
    assert r.v_cover == r.reg_RmodJ == 4 and not r.cohen_macaulay
    r = compute_report(families.path(1))
    assert r.v_cover == r.reg_RmodJ == 0 and r.cohen_macaulay


def test_json_round_trip():
    r = compute_report(families.glued_cycles(1), "G_1")
    back = InvariantReport.from_json(r.to_json())
    assert back == r
    assert json.loads(r.to_json())["schema"] == "vnumber.report/1"


def test_from_dict_rejects_other_schema():
    data = json.loads(compute_report(families.path(1)).to_json())
    data["schema"] = "other/9"
    with pytest.raises(ValueError):
        InvariantReport.from_dict(data)


def test_edgeless():
    with pytest.raises(DegenerateInputError):
        compute_report(graph(3))
    r = compute_report(graph(3), allow_edgeless=True)
    assert r.v_cover is None and r.reg_RmodJ is None and r.m == 0


def test_caps():
    big = families.cycle(25)
    with pytest.raises(ResourceCapError):
        compute_report(big)


def test_violations_are_detected():
    r = compute_report(families.cycle(5))
    r.v_cover = r.reg_RmodJ + 1
    assert report_violations(r)
    with pytest.raises(CrossCheckError) as info:
        check_report(r)
    assert info.value.kind == "theorem"


def test_csv_row_is_flat():
    row = compute_report(families.path(3)).row()
    assert "witness_cover" not in row and row["dominated_edge"] == "1-2"

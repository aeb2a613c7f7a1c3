import pytest

from monores import verify_paper
from monores.parser import parse_ideal
from monores.verify import CHECKS


@pytest.fixture(scope="module")
def report():
    return verify_paper()


def test_all_items_pass(report):
    assert report.ok, report.format()
    assert len(report.items) == len(CHECKS)


def test_anchors_distinct(report):
    assert len(set(report.anchors)) == len(report.anchors) >= 10
    lines = report.format().splitlines()
    assert sum(line.startswith("[PASS]") for line in lines) == len(CHECKS)


def test_negative_control_names_witness():
    bad = parse_ideal("x,y,z", "(x^3, x*y^2, y^3)")
    rep = verify_paper({"F1": bad}, only=["example witness"])
    assert not rep.ok
    (item,) = rep.failures()
    assert item.anchor == "example witness" and item.detail


def test_threads_do_not_change_report(report):
    rep = verify_paper(threads=4, only=report.anchors[:6])
    assert [(i.anchor, i.passed) for i in rep.items] == \
        [(i.anchor, i.passed) for i in report.items[:6]]

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from monores import (MonomialIdeal, check_containment, family_F, load_json, scan,
                     sharp_sum_bound)
from monores.decomposition import associated_primes
from monores.serialize import emit_json, emit_text, format_fraction, from_dict, to_dict

from conftest import ideals


def test_unit_ideal_json():
    doc = to_dict(MonomialIdeal.unit(family_F(1).ring))
    assert doc == {"schema": 1, "type": "ideal", "ring": ["x", "y", "z"],
                   "generators": [[0, 0, 0]]}
    assert to_dict(MonomialIdeal.zero(family_F(1).ring))["generators"] == []


def test_fractions():
    assert format_fraction(Fraction(10, 8)) == "5/4"
    assert format_fraction(1) == "1/1"
    assert to_dict([Fraction(4, 3), Fraction(2)]) == ["4/3", "2/1"]


def test_ideal_json_is_canonical():
    assert json.loads(emit_json(family_F(1)))["generators"] == [[3, 0, 0], [1, 2, 0], [0, 3, 1]]


@settings(max_examples=100)
@given(ideals(proper=False))
def test_ideal_round_trip(I):
    assert load_json(emit_json(I)) == I


def test_certificate_round_trip(F1):
    for m, r in [(2, 2), (2, 1)]:
        c = check_containment(F1, m, r)
        back = load_json(emit_json(c))
        assert back == c and back.recheck()
    doc = to_dict(check_containment(F1, 2, 2))
    assert doc["ratio"] == "1/1" and doc["witness"] == [3, 3, 0] and doc["verdict"] == "not-contained"


def test_scan_round_trip(F1):
    rep = scan(F1, 3, 3)
    back = load_json(emit_json(rep))
    assert back.verdicts() == rep.verdicts()
    assert back.best_ratio == rep.best_ratio and back.witnesses == rep.witnesses
    assert back.cells == rep.cells
    assert "lower bound" in to_dict(rep)["note"]


def test_bound_round_trip():
    rep = sharp_sum_bound(Fraction(3, 2), 1)
    assert to_dict(rep)["bound"] == "5/3"
    assert load_json(emit_json(rep)) == rep


def test_primes_serialize(F1):
    assert to_dict(associated_primes(F1))[0]["generators"] == [[1, 0, 0], [0, 1, 0]]


def test_bad_documents():
    with pytest.raises(ValueError):
        from_dict({"schema": 2, "type": "ideal"})
    with pytest.raises(ValueError):
        from_dict({"schema": 1, "type": "nonsense"})
    with pytest.raises(TypeError):
        to_dict(object())


def test_text_forms(F1):
    text = emit_text(scan(F1, 3, 3))
    assert "certified lower bound for the resurgence: 1/1" in text
    assert "  m=1   C N n" in text.splitlines()
    assert emit_text(check_containment(F1, 2, 2)) == \
        "I^(2) vs I^2: not-contained, witness x^3*y^3"

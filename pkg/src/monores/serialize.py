"""Deterministic JSON and text forms of ideals, certificates and reports.

Every JSON document carries ``"schema": 1`` and a ``"type"`` tag.  Rationals
are strings ``"p/q"`` in lowest terms; exponent vectors follow the ring order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import singledispatch

from .decomposition import IrreducibleComponent, PrimeSupport
from .ideal import MonomialIdeal
from .monomial import Monomial, RingContext
from .resurgence import BoundReport, Cell, ContainmentCertificate, ScanReport

SCHEMA = 1


def format_fraction(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _gens(I: MonomialIdeal) -> list[list[int]]:
    return [list(row) for row in I.exponents]


@singledispatch
def to_dict(value):
    raise TypeError(f"cannot serialize {type(value).__name__}")


@to_dict.register
def _(value: MonomialIdeal):
    return {"schema": SCHEMA, "type": "ideal", "ring": list(value.ring.variables),
            "generators": _gens(value)}


@to_dict.register
def _(value: Monomial):
    return {"schema": SCHEMA, "type": "monomial", "ring": list(value.ring.variables),
            "exponents": list(value.exponents)}


@to_dict.register
def _(value: PrimeSupport):
    return to_dict(value.ideal())


@to_dict.register
def _(value: IrreducibleComponent):
    return to_dict(value.ideal())


@to_dict.register
def _(value: Fraction):
    return format_fraction(value)


@to_dict.register(list)
@to_dict.register(tuple)
def _(value):
    return [to_dict(v) for v in value]


@to_dict.register
def _(value: ContainmentCertificate):
    ring = (value.witness.ring if value.witness is not None
            else value.ideal.ring if value.ideal is not None else None)
    return {
        "schema": SCHEMA, "type": "certificate",
        "ring": list(ring.variables) if ring else None,
        "m": value.m, "r": value.r, "ratio": format_fraction(value.ratio),
        "verdict": value.verdict,
        "witness": list(value.witness.exponents) if value.witness is not None else None,
        "ideal": _gens(value.ideal) if value.ideal is not None else None,
    }


@to_dict.register
def _(value: ScanReport):
    return {
        "schema": SCHEMA, "type": "scan",
        "ring": list(value.ideal.ring.variables) if value.ideal is not None else None,
        "ideal": _gens(value.ideal) if value.ideal is not None else None,
        "max_m": value.max_m, "max_r": value.max_r,
        "cells": [{"m": m, "r": r, "contained": c.contained, "implied": c.implied}
                  for (m, r), c in sorted(value.cells.items())],
        "best_ratio": format_fraction(value.best_ratio) if value.best_ratio is not None else None,
        "best_cells": [list(k) for k in value.best_cells],
        "witnesses": [{"m": m, "r": r, "witness": list(w.exponents)}
                      for (m, r), w in sorted(value.witnesses.items())],
        "note": ScanReport.note,
    }


@to_dict.register
def _(value: BoundReport):
    return {"schema": SCHEMA, "type": "bound", "a": format_fraction(value.a),
            "b": format_fraction(value.b), "bound": format_fraction(value.bound),
            "rule": value.rule}


def emit_json(value, *, indent=None) -> str:
    return json.dumps(to_dict(value), indent=indent, sort_keys=False)


def _ring(doc) -> RingContext | None:
    return RingContext(doc["ring"]) if doc.get("ring") else None


def from_dict(doc):
    """Inverse of :func:`to_dict` for ideals, monomials, certificates, scans, bounds."""
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    kind = doc.get("type", "ideal")
    ring = _ring(doc)
    if kind == "ideal":
        return MonomialIdeal(ring, doc["generators"])
    if kind == "monomial":
        return Monomial(ring, doc["exponents"])
    if kind == "certificate":
        witness = Monomial(ring, doc["witness"]) if doc.get("witness") is not None else None
        ideal = MonomialIdeal(ring, doc["ideal"]) if doc.get("ideal") is not None else None
        return ContainmentCertificate(doc["m"], doc["r"], doc["verdict"], witness, ideal)
    if kind == "scan":
        cells = {(c["m"], c["r"]): Cell(c["contained"], c["implied"]) for c in doc["cells"]}
        best = doc.get("best_ratio")
        return ScanReport(
            doc["max_m"], doc["max_r"], cells,
            parse_fraction(best) if best is not None else None,
            [tuple(k) for k in doc["best_cells"]],
            {(w["m"], w["r"]): Monomial(ring, w["witness"]) for w in doc["witnesses"]},
            MonomialIdeal(ring, doc["ideal"]) if doc.get("ideal") is not None else None)
    if kind == "bound":
        return BoundReport(parse_fraction(doc["a"]), parse_fraction(doc["b"]),
                           parse_fraction(doc["bound"]), doc["rule"])
    raise ValueError(f"unknown document type {kind!r}")


def load_json(text: str):
    return from_dict(json.loads(text))


@singledispatch
def emit_text(value) -> str:
    return str(value)


@emit_text.register
def _(value: Fraction) -> str:
    return format_fraction(value)


@emit_text.register(list)
@emit_text.register(tuple)
def _(value) -> str:
    return "\n".join(emit_text(v) for v in value)


@emit_text.register
def _(value: ContainmentCertificate) -> str:
    head = f"I^({value.m}) vs I^{value.r}: {value.verdict}"
    if value.witness is not None:
        head += f", witness {value.witness}"
    return head


@emit_text.register
def _(value: ScanReport) -> str:
    lines = [f"containment grid m = 1..{value.max_m} (rows), r = 1..{value.max_r} (columns)",
             "  C contained, N not contained; lowercase = implied by monotonicity"]
    for m in range(1, value.max_m + 1):
        row = []
        for r in range(1, value.max_r + 1):
            c = value.cells[m, r]
            mark = "C" if c.contained else "N"
            row.append(mark.lower() if c.implied else mark)
        lines.append(f"  m={m:<3d} " + " ".join(row))
    if value.best_ratio is None:
        lines.append("no non-containment on this grid; no lower bound above the trivial one")
    else:
        lines.append(f"certified lower bound for the resurgence: {format_fraction(value.best_ratio)}")
        for k in value.best_cells:
            lines.append(f"  at (m, r) = {k}: witness {value.witnesses[k]}")
    return "\n".join(lines)


@emit_text.register
def _(value: BoundReport) -> str:
    return (f"a = {format_fraction(value.a)}, b = {format_fraction(value.b)}: "
            f"upper bound {format_fraction(value.bound)} ({value.rule})")

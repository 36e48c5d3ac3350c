"""JSON input and output for surfaces, line lists and polynomial systems.

Polynomials are written as lists of {"exps": [...], "value": ...} terms, so
no expression parser is needed.  Field values use the field's own JSON form:
an integer string for F_p, a list of coefficient strings for F_{p^n} and
number fields, and a fraction string for Q.
"""
from __future__ import annotations

import json
import re
from collections import Counter

from .cubiclines.known import records_from_lines
from .cubiclines.lines import LineSubspace
from .cubiclines.surface import CubicSurface
from .eklindex.local import PolySystem
from .errors import InvalidField, InvalidSurface
from .exactfield.fields import Field, field_from_json, finite_field, prime_field, rationals
from .exactfield.poly import Poly

_FIELD_RE = re.compile(r"^(?:Fq:|F)(\d+)(?:\^(\d+))?$")


def parse_field(text: str) -> Field:
    """'Q', 'F7', 'Fq:7', 'Fq:3^2' or 'F3^2'."""
    text = text.strip()
    if text == "Q":
        return rationals()
    m = _FIELD_RE.match(text)
    if not m:
        raise InvalidField(f"cannot parse field {text!r}")
    p, n = int(m.group(1)), int(m.group(2) or 1)
    prime_field(p)  # validates p
    return finite_field(p, n)


def field_to_json(F: Field) -> dict:
    return F.desc_json()


def _field_of(obj, default: Field | None) -> Field:
    if "field" in obj and obj["field"] is not None:
        desc = obj["field"]
        return parse_field(desc) if isinstance(desc, str) else field_from_json(desc)
    if default is None:
        raise InvalidField("no field given")
    return default


def terms_to_json(F: Field, terms: dict):
    return [{"exps": list(e), "value": F.to_json(c)} for e, c in sorted(terms.items(), reverse=True)]


def terms_from_json(F: Field, items):
    out = {}
    for t in items:
        e = tuple(int(x) for x in t["exps"])
        out[e] = F.from_json(t["value"])
    return out


def surface_to_json(f: CubicSurface) -> dict:
    return {"field": field_to_json(f.field), "coefficients": terms_to_json(f.field, f.terms)}


def surface_from_json(obj, field: Field | None = None) -> CubicSurface:
    """A surface file; ``field`` (from the command line) overrides the file's field."""
    F = field or _field_of(obj, None)
    try:
        mapping = terms_from_json(F, obj["coefficients"])
    except (KeyError, TypeError) as exc:
        raise InvalidSurface(f"malformed surface description: {exc}") from exc
    return CubicSurface.from_mapping(F, {e: F.elem(c) for e, c in mapping.items()})


def line_to_json(S: LineSubspace, def_degree: int | None = None) -> dict:
    F = S.field
    out = {"field": field_to_json(F), "basis": [[F.to_json(x) for x in row] for row in S.basis]}
    if def_degree is not None:
        out["def_degree"] = def_degree
    return out


def lines_to_json(records) -> dict:
    return {"lines": [line_to_json(r.line, r.def_degree) for r in records]}


def lines_from_json(obj, f: CubicSurface):
    """Line records from {"lines": [{"field", "basis", "def_degree"?}, ...]}."""
    lines = []
    for item in obj["lines"]:
        F = _field_of(item, f.field)
        v3, v4 = ([F.from_json(x) for x in row] for row in item["basis"])
        lines.append(LineSubspace.from_raw(F, v3, v4))
    records = records_from_lines(f, lines)
    stated = Counter(int(item["def_degree"]) for item in obj["lines"] if "def_degree" in item)
    if stated and stated != Counter(r.def_degree for r in records):
        raise InvalidSurface("stated def_degree values do not match the residue fields of the lines")
    return records


def system_to_json(sys: PolySystem) -> dict:
    F = sys.field
    return {
        "field": field_to_json(F),
        "vars": list(sys.vars),
        "polys": [terms_to_json(F, p.terms) for p in sys.polys],
    }


def system_from_json(obj, field: Field | None = None) -> PolySystem:
    F = field or _field_of(obj, None)
    names = tuple(obj["vars"])
    polys = [Poly(F, names, terms_from_json(F, p)) for p in obj["polys"]]
    return PolySystem.of(polys)


def dumps(obj) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, indent=2, sort_keys=True)


def load(path: str):
    with open(path) as fh:
        return json.load(fh)


__all__ = [
    "dumps",
    "field_to_json",
    "lines_from_json",
    "lines_to_json",
    "load",
    "parse_field",
    "surface_from_json",
    "surface_to_json",
    "system_from_json",
    "system_to_json",
]

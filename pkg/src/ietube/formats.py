"""Canonical JSON interchange for set systems, Venn diagrams and IE-vectors.

Set labels are 1-based.  Coefficients are decimal strings so arbitrarily
large integers survive any JSON reader.  Output is UTF-8 with sorted keys and
index sets in canonical (cardinality, lex) order, so writing what was read
reproduces the same bytes.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .core import IEVector, InputError, SetSystem, VennDiagram, index_set, members, sort_key

Document = Union[SetSystem, VennDiagram, IEVector]


def dumps(doc: dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


def set_system_to_json(fs: SetSystem) -> dict[str, Any]:
    return {"type": "set_system", "n": fs.n, "points": [members(p) for p in fs.points]}


def venn_to_json(venn: VennDiagram) -> dict[str, Any]:
    return {"type": "venn", "n": venn.n, "regions": [members(r) for r in venn.regions]}


def ie_vector_to_json(x: IEVector, **extra: Any) -> dict[str, Any]:
    doc = {
        "type": "ie_vector",
        "n": x.n,
        "terms": [{"set": members(s), "coeff": str(c)} for s, c in x.terms()],
        "l1_norm": str(x.l1_norm),
        "support_size": x.support_size,
    }
    doc.update(extra)
    return doc


def to_json(obj: Document, **extra: Any) -> dict[str, Any]:
    if isinstance(obj, SetSystem):
        return set_system_to_json(obj)
    if isinstance(obj, VennDiagram):
        return venn_to_json(obj)
    if isinstance(obj, IEVector):
        return ie_vector_to_json(obj, **extra)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _labels(raw: Any, n: int, what: str) -> int:
    if not isinstance(raw, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in raw):
        raise InputError(f"{what} must be a list of integer labels")
    if any(not 1 <= i <= n for i in raw):
        raise InputError(f"{what} has a label outside 1..{n}")
    if len(set(raw)) != len(raw):
        raise InputError(f"{what} repeats a label")
    return index_set(raw)


def from_json(doc: Any) -> Document:
    """Parse any of the three document kinds, dispatching on ``"type"``."""
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object")
    kind = doc.get("type")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("'n' must be a positive integer")
    if kind == "set_system":
        points = doc.get("points")
        if not isinstance(points, list):
            raise InputError("'points' must be a list")
        return SetSystem(n, tuple(_labels(p, n, f"point {k}") for k, p in enumerate(points)))
    if kind == "venn":
        regions = doc.get("regions")
        if not isinstance(regions, list):
            raise InputError("'regions' must be a list")
        sets = [_labels(r, n, f"region {k}") for k, r in enumerate(regions)]
        if not all(sets):
            raise InputError("regions must be nonempty")
        if sorted(sets, key=sort_key) != sets:
            raise InputError("regions must be sorted by cardinality, then lexicographically")
        return VennDiagram(n, tuple(sets))
    if kind == "ie_vector":
        terms = doc.get("terms")
        if not isinstance(terms, list):
            raise InputError("'terms' must be a list")
        coeffs: dict[int, int] = {}
        for k, t in enumerate(terms):
            if not isinstance(t, dict) or "set" not in t or "coeff" not in t:
                raise InputError(f"term {k} needs 'set' and 'coeff'")
            s = _labels(t["set"], n, f"term {k}")
            if not s:
                raise InputError(f"term {k} has an empty set")
            c = t["coeff"]
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                raise InputError(f"term {k} coefficient must be a decimal string")
            try:
                c = int(c)
            except ValueError:
                raise InputError(f"term {k} coefficient {t['coeff']!r} is not an integer") from None
            if s in coeffs:
                raise InputError(f"term {k} repeats the set {members(s)}")
            coeffs[s] = c
        return IEVector(n, coeffs)
    raise InputError(f"unknown document type {kind!r}")


def loads(text: str) -> Document:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return from_json(doc)

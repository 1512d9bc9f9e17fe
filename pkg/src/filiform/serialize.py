"""JSON interchange for algebras, weights and linear maps.

An algebra document looks like::

    {"dim": 5,
     "constants": [{"i": 1, "j": 1, "k": 3, "value": "1"}, ...],
     "name": "NGF1", "params": {"n": 5}}

Values are rational strings in lowest terms (``"p"`` or ``"p/q"``, sign on
the numerator). Output is sorted and indented so identical inputs give
byte-identical files.
"""

import json
import re
from fractions import Fraction

from .core import Algebra

_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class DocumentError(ValueError):
    pass


def rational_to_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise DocumentError(f"expected a rational string like \"-3/4\", got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    m = _RATIONAL.match(s.strip())
    if not m:
        raise DocumentError(f"malformed rational {s!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise DocumentError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def _plain(value):
    """Params to JSON-friendly values; Fractions become rational strings."""
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            key = ",".join(str(t) for t in k) if isinstance(k, tuple) else str(k)
            out[key] = _plain(v)
        return out
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def to_document(A):
    doc = {
        "dim": A.dim,
        "constants": [{"i": i, "j": j, "k": k, "value": rational_to_str(v)}
                      for (i, j, k), v in sorted(A.constants.items())],
    }
    if A.name:
        doc["name"] = A.name
    if A.params:
        doc["params"] = _plain(dict(A.params))
    return doc


def from_document(doc):
    if not isinstance(doc, dict):
        raise DocumentError("algebra document must be a JSON object")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"'dim' must be a positive integer, got {dim!r}")
    entries = doc.get("constants")
    if not isinstance(entries, list):
        raise DocumentError("'constants' must be a list")
    consts = {}
    for pos, e in enumerate(entries):
        if not isinstance(e, dict) or set(e) != {"i", "j", "k", "value"}:
            raise DocumentError(f"constants[{pos}] must have exactly the keys i, j, k, value")
        key = (e["i"], e["j"], e["k"])
        if any(isinstance(t, bool) or not isinstance(t, int) or not 1 <= t <= dim for t in key):
            raise DocumentError(f"constants[{pos}] has an index outside 1..{dim}: {key}")
        if key in consts:
            raise DocumentError(f"constants[{pos}] repeats the triple {key}")
        try:
            value = parse_rational(e["value"])
        except DocumentError as exc:
            raise DocumentError(f"constants[{pos}]: {exc}") from None
        if value == 0:
            raise DocumentError(f"constants[{pos}] is zero; omit zero constants")
        consts[key] = value
    name = doc.get("name")
    params = doc.get("params") or {}
    if not isinstance(params, dict):
        raise DocumentError("'params' must be an object")
    return Algebra(dim, consts, name=name, params=params)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_algebra(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def serialize(A):
    return dumps(to_document(A))


def matrix_to_json(D):
    return [[rational_to_str(x) for x in row] for row in D.matrix]


def matrix_from_json(rows):
    from .core import LinearMap
    return LinearMap([[parse_rational(x) for x in row] for row in rows])

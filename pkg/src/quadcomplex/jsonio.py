"""JSON schemas shared by the CLI and the corpus runner.

Scalars travel as exact strings ("a/b+c/d*i"), never floats; matrices
as row-major string arrays; polynomials as grevlex-sorted
[exponent-vector, scalar-string] pairs.  Serialization is canonical:
equal objects produce identical bytes.
"""

from __future__ import annotations

import json

from .algebra.matrix import Matrix
from .algebra.mpoly import MPoly
from .algebra.scalar import format_scalar, parse_scalar
from .errors import InputError
from .pencil import Pencil, SegreSymbol
from .stability import Quartic


def matrix_to_json(M: Matrix):
    return [[format_scalar(e) for e in row] for row in M.rows]


def matrix_from_json(data) -> Matrix:
    try:
        return Matrix([[parse_scalar(e) for e in row] for row in data])
    except (TypeError, ValueError) as exc:
        raise InputError("malformed matrix: %s" % exc) from exc


def pencil_to_json(P: Pencil):
    return {"F": matrix_to_json(P.F), "G": matrix_to_json(P.G)}


def pencil_from_json(data) -> Pencil:
    if not isinstance(data, dict) or "F" not in data or "G" not in data:
        raise InputError('pencil JSON needs fields "F" and "G"')
    return Pencil(matrix_from_json(data["F"]), matrix_from_json(data["G"]))


def symbol_to_json(sym: SegreSymbol):
    return {"symbol": str(sym), "brackets": [list(b) for b in sym.brackets]}


def quartic_to_json(q: Quartic):
    return {"variables": 4, "terms": q.poly.serialize()}


def quartic_from_json(data) -> Quartic:
    if not isinstance(data, dict) or "terms" not in data:
        raise InputError('quartic JSON needs a "terms" field')
    try:
        poly = MPoly.deserialize(4, data["terms"])
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError("malformed quartic: %s" % exc) from exc
    return Quartic(poly)


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise InputError("file not found: %s" % path) from exc
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s at line %d column %d: %s"
                         % (path, exc.lineno, exc.colno, exc.msg)) from exc

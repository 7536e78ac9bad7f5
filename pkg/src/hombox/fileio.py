"""The algebra file format: UTF-8 JSON with string scalars.

Keys: name, field ("Q" or "Fp:<prime>"), dim, basis (name list), mult and
comult as sparse [i, j, k, scalar] entries, unit/counit as dense lists,
beta/antipode as dense row-major matrices, optional metadata.  Scalars
are strings like "-3/4" or "2"; unlisted sparse entries are zero.
Antipode is optional (bialgebra files); comult/counit are optional too,
giving a plain algebra file (twists and Heisenberg doubles live at that
level).  Serialization is canonical, so parse-serialize-parse is the
identity.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import BadScalar, DimensionError, ParseError
from .hom_core import (CheckReport, HomAlgebra, HomBialgebra, HomCoalgebra,
                       HomHopfAlgebra, Verdict)
from .kernel import Tensor, field_from_tag


def _sparse3(tensor: Tensor, field):
    out = []
    for (i, j, k), v in np.ndenumerate(tensor.data):
        if v:
            out.append([int(i), int(j), int(k), field.format(v)])
    return out


def _dense1(tensor, field):
    return [field.format(v) for v in tensor.data]


def _dense2(tensor, field):
    return [[field.format(v) for v in row] for row in tensor.data]


def serialize_algebra(obj, name, basis=None, metadata=None) -> str:
    """Canonical JSON text for an algebra-, bialgebra- or Hopf-level
    object."""
    field = obj.field
    doc = {
        "name": name,
        "field": field.tag,
        "dim": obj.dim,
        "basis": list(basis) if basis else [f"e{i}" for i in range(obj.dim)],
        "mult": sorted(_sparse3(obj.mult, field)),
        "unit": _dense1(obj.unit, field),
        "beta": _dense2(obj.beta, field),
    }
    if len(doc["basis"]) != obj.dim:
        raise DimensionError(f"{len(doc['basis'])} basis names for dim {obj.dim}")
    if hasattr(obj, "comult"):
        doc["comult"] = sorted(_sparse3(obj.comult, field))
        doc["counit"] = _dense1(obj.counit, field)
    if hasattr(obj, "antipode"):
        doc["antipode"] = _dense2(obj.antipode, field)
    if metadata:
        doc["metadata"] = metadata
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _require(doc, key, types):
    if key not in doc:
        raise ParseError(f"missing key {key!r}")
    if not isinstance(doc[key], types):
        raise ParseError(f"key {key!r} has wrong type {type(doc[key]).__name__}")
    return doc[key]


def _tensor3(field, dim, entries, what):
    arr = np.full((dim, dim, dim), field.zero, dtype=object)
    for item in entries:
        if not (isinstance(item, list) and len(item) == 4):
            raise ParseError(f"{what} entries must be [i, j, k, scalar]")
        i, j, k, s = item
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise DimensionError(f"{what} index {idx} outside dim {dim}")
        if not isinstance(s, str):
            raise ParseError(f"{what} scalar must be a string, got {s!r}")
        arr[i, j, k] = field.parse(s)
    return Tensor(field, arr)


def _vector(field, dim, entries, what):
    if not isinstance(entries, list) or len(entries) != dim:
        raise DimensionError(f"{what} must be a list of {dim} scalars")
    return Tensor(field, np.array([field.parse(s) for s in entries],
                                  dtype=object))


def _matrix(field, dim, rows, what):
    if not isinstance(rows, list) or len(rows) != dim or \
            any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise DimensionError(f"{what} must be a {dim}x{dim} matrix")
    flat = [field.parse(s) for row in rows for s in row]
    return Tensor(field, np.array(flat, dtype=object).reshape(dim, dim))


def parse_algebra_document(doc: dict):
    """Build the in-memory object from a decoded JSON document.

    Returns a HomHopfAlgebra, HomBialgebra or HomAlgebra depending on
    which optional keys are present.  No law suite is run here; checking
    is an explicit command.
    """
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    name = _require(doc, "name", str)
    field = field_from_tag(_require(doc, "field", str))
    dim = _require(doc, "dim", int)
    if dim < 1:
        raise DimensionError(f"dim must be positive, got {dim}")
    basis = _require(doc, "basis", list)
    if len(basis) != dim:
        raise DimensionError(f"{len(basis)} basis names for dim {dim}")
    mult = _tensor3(field, dim, _require(doc, "mult", list), "mult")
    unit = _vector(field, dim, _require(doc, "unit", list), "unit")
    beta = _matrix(field, dim, _require(doc, "beta", list), "beta")
    alg = HomAlgebra(dim, mult, unit, beta, name)
    if "comult" not in doc:
        if "antipode" in doc:
            raise ParseError("antipode requires comult/counit")
        return alg
    comult = _tensor3(field, dim, _require(doc, "comult", list), "comult")
    counit = _vector(field, dim, _require(doc, "counit", list), "counit")
    bi = HomBialgebra(alg, HomCoalgebra(dim, comult, counit, beta, name))
    if "antipode" not in doc:
        return bi
    antipode = _matrix(field, dim, doc["antipode"], "antipode")
    return HomHopfAlgebra(bi, antipode)


def parse_algebra_file(text: str):
    """Parse JSON text into a structure object."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_algebra_document(doc)


def load_document(path):
    """Read a file, returning (object, raw document) for callers that
    need the metadata and basis names too."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None
    return parse_algebra_document(doc), doc


def load_algebra(path):
    return load_document(path)[0]


def save_algebra(obj, path, name, basis=None, metadata=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_algebra(obj, name, basis, metadata))


# ----------------------------------------------------------------------
# report embedding


def report_to_json(report: CheckReport) -> dict:
    return {
        "suite": report.suite,
        "verdicts": [
            {
                "law_id": v.law_id,
                "statement": v.statement,
                "status": "pass" if v.passed else "fail",
                **({"witness": [list(v.witnesses[0][0]), v.witnesses[0][1],
                                v.witnesses[0][2]],
                    "violations": v.violations}
                   if not v.passed and v.witnesses else {}),
            }
            for v in report.verdicts
        ],
    }


def report_from_json(doc: dict) -> CheckReport:
    verdicts = []
    for v in doc.get("verdicts", []):
        passed = v.get("status") == "pass"
        wit = ()
        if "witness" in v:
            idx, lhs, rhs = v["witness"]
            wit = ((tuple(idx), lhs, rhs),)
        verdicts.append(Verdict(v.get("law_id", "?"), v.get("statement", ""),
                                passed, wit, v.get("violations", 0)))
    return CheckReport(doc.get("suite", "?"), tuple(verdicts))

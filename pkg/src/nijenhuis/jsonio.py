"""JSON document schemas (all scalar entries are exact text).

Algebra:      {"dim": 3, "field": "R"|"C",
               "brackets": [{"i": 1, "j": 2, "out": ["0", "1", "-1/2"]}]}
              brackets listed for i < j only, 1-based, omitted pairs zero.
Matrix:       {"matrix": [["1","0","0"],["0","2","0"],["0","0","3"]]}
              row major; used for operators and bases alike.
Certificate:  {"Z": [[...]], "pairs": [{"i":1,"j":2,"alpha":"1","beta":"-1"}]}
Equivalence:  {"Z": [[...]], "Zprime": [[...]], "Phi": [[...]],
               "mu": ["2","3","5"]}
Report:       {"form": [[...]], "rank": 3, "signature": [2,1] | null,
               "admits": true, "reason": "cone",
               "witness": [[...],[...],[...]] | null}

Unknown keys are ignored on input so reports that embed these documents
round-trip.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InputError
from .lie import LieAlgebra
from .linalg import Matrix
from .operators import EigenbasisCertificate
from .quadric import EigenbasisSearch, QuadraticForm3, QuadricClassification
from .scalar import Scalar, parse_scalar

__all__ = [
    "InputError",
    "load_json_file",
    "scalar_from_text",
    "algebra_to_doc",
    "algebra_from_doc",
    "matrix_to_doc",
    "matrix_from_doc",
    "vector_to_list",
    "certificate_to_doc",
    "classification_to_doc",
    "search_to_doc",
    "equivalence_certificate_from_doc",
    "dump",
]


def load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def scalar_from_text(text: Any) -> Scalar:
    if not isinstance(text, str):
        raise InputError(f"scalar entries must be strings, got {text!r}")
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def vector_to_list(vec) -> list[str]:
    return [str(x) for x in vec]


def _vector_from_list(data: Any, length: int) -> tuple[Scalar, ...]:
    if not isinstance(data, list) or len(data) != length:
        raise InputError(f"expected a list of {length} scalar strings")
    return tuple(scalar_from_text(x) for x in data)


# algebras -----------------------------------------------------------------


def algebra_to_doc(alg: LieAlgebra, **extra) -> dict:
    brackets = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            vec = alg.table[i][j]
            if any(vec):
                brackets.append(
                    {"i": i + 1, "j": j + 1, "out": vector_to_list(vec)}
                )
    doc = {"dim": alg.dim, "field": alg.field, "brackets": brackets}
    doc.update(extra)
    return doc


def algebra_from_doc(doc: Any) -> LieAlgebra:
    if not isinstance(doc, dict):
        raise InputError("algebra document must be a JSON object")
    dim = doc.get("dim")
    field = doc.get("field")
    if not isinstance(dim, int) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    if field not in ("R", "C"):
        raise InputError("'field' must be \"R\" or \"C\"")
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise InputError("'brackets' must be a list")
    brackets: dict[tuple[int, int], tuple[Scalar, ...]] = {}
    for entry in entries:
        if not isinstance(entry, dict):
            raise InputError("each bracket must be an object with i, j, out")
        i, j = entry.get("i"), entry.get("j")
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
            raise InputError(f"bracket indices must satisfy 1 <= i < j <= dim, got ({i}, {j})")
        if (i, j) in brackets:
            raise InputError(f"duplicate bracket pair ({i}, {j})")
        brackets[(i, j)] = _vector_from_list(entry.get("out"), dim)
    if field == "R":
        for (i, j), vec in brackets.items():
            if any(x.im for x in vec):
                raise InputError(f"real algebra has non-real bracket at pair ({i}, {j})")
    try:
        return LieAlgebra.from_brackets(dim, field, brackets)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# matrices -----------------------------------------------------------------


def matrix_to_doc(m: Matrix) -> dict:
    return {"matrix": [vector_to_list(row) for row in m.rows]}


def matrix_from_doc(doc: Any) -> Matrix:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise InputError("matrix document must be an object with a 'matrix' key")
    rows = doc["matrix"]
    if not isinstance(rows, list) or not rows:
        raise InputError("'matrix' must be a non-empty list of rows")
    width = None
    parsed = []
    for row in rows:
        if not isinstance(row, list) or not row:
            raise InputError("matrix rows must be non-empty lists")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError("matrix rows have inconsistent lengths")
        parsed.append([scalar_from_text(x) for x in row])
    return Matrix(parsed)


# certificates and reports ---------------------------------------------------


def certificate_to_doc(cert: EigenbasisCertificate) -> dict:
    pairs = [
        {"i": i, "j": j, "alpha": str(ab[0]), "beta": str(ab[1])}
        for (i, j), ab in sorted(cert.pair_coeffs.items())
    ]
    return {"Z": [vector_to_list(row) for row in cert.basis.rows], "pairs": pairs}


def classification_to_doc(form: QuadraticForm3, cls: QuadricClassification, witness) -> dict:
    return {
        "form": [vector_to_list(row) for row in form.matrix.rows],
        "rank": cls.rank,
        "signature": list(cls.signature) if cls.signature is not None else None,
        "admits": cls.admits,
        "reason": cls.reason,
        "witness": [vector_to_list(v) for v in witness] if witness else None,
    }


def search_to_doc(form: QuadraticForm3, search: EigenbasisSearch) -> dict:
    doc = classification_to_doc(form, search.classification, search.triple)
    doc["certificate"] = (
        certificate_to_doc(search.certificate) if search.certificate else None
    )
    doc["status"] = search.status
    doc["height"] = search.height
    return doc


def equivalence_certificate_from_doc(doc: Any) -> tuple[Matrix, Matrix, Matrix, list[Scalar]]:
    if not isinstance(doc, dict):
        raise InputError("certificate document must be a JSON object")
    try:
        z = matrix_from_doc({"matrix": doc["Z"]})
        z_prime = matrix_from_doc({"matrix": doc["Zprime"]})
        phi = matrix_from_doc({"matrix": doc["Phi"]})
        mu_raw = doc["mu"]
    except KeyError as exc:
        raise InputError(f"certificate document is missing key {exc}") from exc
    if not isinstance(mu_raw, list):
        raise InputError("'mu' must be a list of scalar strings")
    mu = [scalar_from_text(x) for x in mu_raw]
    return z, z_prime, phi, mu


def dump(doc: Any) -> str:
    """Deterministic, round-trippable rendering."""
    return json.dumps(doc, indent=2, sort_keys=False)

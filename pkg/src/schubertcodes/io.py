"""JSON code files and q-system files.

A code file::

    {
      "header": {"q": 2, "k": 3, "modulus": [1, 1, 0, 1], "n": 6, "codeDim": 3},
      "meta": {"construction": "norm1", "params": {...}},
      "reference": [[...], ...],          # optional: the subspace U
      "codewords": [[[...], ...], ...],   # basis rows, entries in 0..q-1
      "provenance": ["a=1", ...]          # optional, one label per codeword
    }

``k`` in the header is the extension degree of the field whose modulus is
recorded; ``codeDim`` is the dimension of every codeword.  A q-system file
is ``{"q", "k", "modulus"?, "r", "u", "basis"}`` with basis entries given
as element encodings.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np

from .codes import SubspaceCode
from .fields import FieldCtx, make_field
from .linalg import Subspace, rank, subspace_from_rows
from .linear_sets import QSystem


class FormatError(ValueError):
    """A code or q-system file does not match its declared structure."""


def _rows(rows) -> str:
    return "[" + ", ".join(json.dumps(r) for r in rows) + "]"


def dumps_code(code: SubspaceCode, field: FieldCtx | None = None) -> str:
    if field is None:
        field = make_field(code.q, code.k)
    header = {"q": field.q, "k": field.k, "modulus": list(field.modulus), "n": code.n, "codeDim": code.k}
    meta = {"construction": code.name, "params": code.params}
    parts = [
        f'  "header": {json.dumps(header)}',
        f'  "meta": {json.dumps(meta, sort_keys=True)}',
    ]
    if code.reference is not None:
        parts.append(f'  "reference": {_rows(code.reference.to_list())}')
    words = ",\n".join(f"    {_rows(w.to_list())}" for w in code.codewords)
    parts.append(f'  "codewords": [\n{words}\n  ]' if code.codewords else '  "codewords": []')
    if any(lab is not None for lab in code.labels):
        parts.append(f'  "provenance": {json.dumps([lab or "" for lab in code.labels])}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def write_code(path: str | Path, code: SubspaceCode, field: FieldCtx | None = None) -> None:
    Path(path).write_text(dumps_code(code, field), encoding="utf-8")


def _parse_subspace(rows, q: int, n: int, dim: int, what: str) -> Subspace:
    a = np.array(rows, dtype=np.int64)
    if a.ndim != 2 or a.shape[1] != n:
        raise FormatError(f"{what}: expected rows of length {n}")
    if ((a < 0) | (a >= q)).any():
        raise FormatError(f"{what}: entries must lie in [0, {q})")
    if a.shape[0] != dim or rank(a, q) != dim:
        raise FormatError(f"{what}: expected {dim} independent rows")
    return subspace_from_rows(a, q)


def loads_code(text: str) -> tuple[SubspaceCode, FieldCtx]:
    try:
        data = json.loads(text)
        h = data["header"]
        q, n, dim = int(h["q"]), int(h["n"]), int(h["codeDim"])
        words = data["codewords"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed code file: {exc}") from exc
    try:
        field = FieldCtx(q, int(h["k"]), h["modulus"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad field header: {exc}") from exc
    reference = None
    if data.get("reference"):
        ref_rows = data["reference"]
        reference = _parse_subspace(ref_rows, q, n, len(ref_rows), "reference")
    codewords = [_parse_subspace(w, q, n, dim, f"codeword {i}") for i, w in enumerate(words)]
    labels = data.get("provenance") or [None] * len(codewords)
    if len(labels) != len(codewords):
        raise FormatError("provenance list length differs from the number of codewords")
    meta = data.get("meta", {})
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code = SubspaceCode(
            n,
            dim,
            q,
            codewords,
            [lab or None for lab in labels],
            reference=reference,
            name=meta.get("construction", ""),
            params=meta.get("params", {}),
        )
    for w in caught:
        warnings.warn(str(w.message), stacklevel=2)
    return code, field


def read_code(path: str | Path) -> tuple[SubspaceCode, FieldCtx]:
    return loads_code(Path(path).read_text(encoding="utf-8"))


def read_subspace(path: str | Path, q: int | None = None) -> Subspace:
    """A bare subspace file: a list of rows, or ``{"q": .., "rows": [...]}``."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        q = int(data.get("q", q))
        data = data["rows"]
    if q is None:
        raise FormatError("subspace file does not record q")
    a = np.array(data, dtype=np.int64)
    if a.ndim != 2:
        raise FormatError("subspace rows must form a matrix")
    return _parse_subspace(a, q, a.shape[1], rank(a, q), str(path))


def qsystem_from_dict(data: dict) -> QSystem:
    try:
        src = data.get("field", data)
        field = FieldCtx.from_dict(src)
        system = QSystem(field, data["basis"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad q-system: {exc}") from exc
    if "r" in data and int(data["r"]) != system.r:
        raise FormatError(f"declared r={data['r']} but basis vectors have length {system.r}")
    if "u" in data and int(data["u"]) != system.u:
        raise FormatError(f"declared u={data['u']} but the basis has {system.u} vectors")
    return system


def qsystem_to_dict(system: QSystem) -> dict:
    return {**system.ctx.to_dict(), **system.to_dict()}


def read_qsystem(path: str | Path) -> QSystem:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed q-system file: {exc}") from exc
    return qsystem_from_dict(data)

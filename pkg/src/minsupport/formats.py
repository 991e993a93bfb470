"""Matrix JSON and CSV serialization.

JSON: ``{"n": int, "m": int, "entries": [[int | "p/q", ...], ...]}``.
CSV: one matrix row per line, each cell an integer or ``p/q``.

Writers emit integers as JSON numbers and proper fractions as ``"p/q"``
strings, so that output is byte-stable for a given matrix.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import DimensionError, ParseError
from .matrix import UMatrix, format_rational


def _cell_json(q):
    return q.numerator if q.denominator == 1 else format_rational(q)


def matrix_to_dict(M: UMatrix) -> dict:
    return {"n": M.n, "m": M.m, "entries": [[_cell_json(q) for q in row] for row in M.rows]}


def matrix_from_dict(obj) -> UMatrix:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ParseError('matrix JSON must be an object with an "entries" field')
    entries = obj["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ParseError('"entries" must be a list of rows')
    for row in entries:
        for x in row:
            if isinstance(x, float):
                raise ParseError(f"floating point entry {x!r} is not allowed")
    try:
        M = UMatrix(entries)
    except DimensionError as exc:
        raise ParseError(str(exc)) from exc
    for key, actual in (("n", M.n), ("m", M.m)):
        if key in obj and obj[key] != actual:
            raise ParseError(f'declared {key}={obj[key]!r} but entries give {actual}')
    return M


def dumps_json(M: UMatrix) -> str:
    d = matrix_to_dict(M)
    rows = ",\n    ".join(json.dumps(r, separators=(", ", ": ")) for r in d["entries"])
    return f'{{\n  "n": {M.n},\n  "m": {M.m},\n  "entries": [\n    {rows}\n  ]\n}}\n'


def loads_json(text: str) -> UMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_dict(obj)


def dumps_csv(M: UMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in M.rows:
        writer.writerow(format_rational(q) for q in row)
    return buf.getvalue()


def loads_csv(text: str) -> UMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty CSV matrix")
    try:
        return UMatrix(rows)
    except DimensionError as exc:
        raise ParseError(str(exc)) from exc


def detect_format(path: Path) -> str:
    return "csv" if Path(path).suffix.lower() == ".csv" else "json"


def read_matrix(path, fmt: str | None = None) -> UMatrix:
    path = Path(path)
    fmt = fmt or detect_format(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return loads_csv(text) if fmt == "csv" else loads_json(text)


def write_matrix(M: UMatrix, path, fmt: str | None = None) -> Path:
    path = Path(path)
    fmt = fmt or detect_format(path)
    path.write_text(dumps_csv(M) if fmt == "csv" else dumps_json(M))
    return path

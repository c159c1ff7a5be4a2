"""Text formats for matrices and vectors.

Three interchangeable formats, all round-tripping bit-exactly:

* ``dense`` - one line of 0/1 characters per row, whitespace between
  characters optional.
* ``cols-int`` - a ``k=K`` header followed by space-separated column
  integers; a column vector (x_1, ..., x_k) encodes as
  ``sum(x_i * 2**(i-1))``, so (1,0,1,1) is 13.
* ``json`` - an object with ``rows``, ``cols`` and ``data`` (a list of
  row bit-strings as in the dense format).
"""

from __future__ import annotations

import json
import re

from .errors import ParseError
from .gf2 import BinMatrix, BinVector

__all__ = [
    "FORMATS",
    "parse_matrix",
    "render_matrix",
    "parse_vector",
    "int_to_vector",
    "vector_to_int",
]

FORMATS = ("dense", "cols-int", "json")

_HEADER_RE = re.compile(r"^k\s*=\s*(\d+)$")


def int_to_vector(value: int, k: int) -> BinVector:
    if not 0 <= value < (1 << k):
        raise ParseError(f"integer {value} does not encode a vector in GF(2)^{k}")
    return BinVector(k, value)


def vector_to_int(v: BinVector) -> int:
    return v.bits


def parse_vector(text: str) -> BinVector:
    """A single dense bit-string such as ``1011`` (whitespace ignored)."""
    bits = 0
    n = 0
    for col, ch in enumerate(text.strip(), start=1):
        if ch.isspace():
            continue
        if ch not in "01":
            raise ParseError(f"invalid character {ch!r} in vector", line=1, column=col)
        bits |= (ch == "1") << n
        n += 1
    if n == 0:
        raise ParseError("empty vector", line=1, column=1)
    return BinVector(n, bits)


def _parse_dense(text: str) -> BinMatrix:
    rows: list[int] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        bits = 0
        n = 0
        for col, ch in enumerate(line, start=1):
            if ch.isspace():
                continue
            if ch not in "01":
                raise ParseError(f"invalid character {ch!r}", line=lineno, column=col)
            bits |= (ch == "1") << n
            n += 1
        if width is None:
            width = n
        elif n != width:
            raise ParseError(
                f"row has {n} entries, expected {width}", line=lineno, column=1
            )
        rows.append(bits)
    if not rows or not width:
        raise ParseError("no matrix rows found", line=1, column=1)
    return BinMatrix(width, tuple(rows))


def _parse_cols_int(text: str) -> BinMatrix:
    lines = text.splitlines()
    k = None
    header_line = 0
    values: list[int] = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if k is None:
            m = _HEADER_RE.match(stripped)
            if not m:
                raise ParseError("expected header of the form k=K", line=lineno, column=1)
            k = int(m.group(1))
            header_line = lineno
            if k < 1:
                raise ParseError(f"k must be positive, got {k}", line=lineno, column=1)
            continue
        col = 1
        for token in line.split():
            col = line.index(token, col - 1) + 1
            if not token.isdigit():
                raise ParseError(f"invalid integer {token!r}", line=lineno, column=col)
            value = int(token)
            if value >= (1 << k):
                raise ParseError(
                    f"integer {value} needs more than k={k} bits", line=lineno, column=col
                )
            values.append(value)
    if k is None:
        raise ParseError("expected header of the form k=K", line=1, column=1)
    if not values:
        raise ParseError("no column integers found", line=header_line, column=1)
    return BinMatrix.from_cols([BinVector(k, v) for v in values])


def _parse_json(text: str) -> BinMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object with rows, cols, data")
    try:
        rows = doc["rows"]
        cols = doc["cols"]
        data = doc["data"]
    except KeyError as e:
        raise ParseError(f"missing field {e.args[0]!r}") from e
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise ParseError("rows and cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"data must list exactly {rows} row strings")
    packed = []
    for i, rowstr in enumerate(data):
        if not isinstance(rowstr, str) or len(rowstr) != cols or set(rowstr) - {"0", "1"}:
            raise ParseError(f"row {i} must be a string of {cols} 0/1 characters")
        bits = 0
        for j, ch in enumerate(rowstr):
            bits |= (ch == "1") << j
        packed.append(bits)
    return BinMatrix(cols, tuple(packed))


def parse_matrix(text: str, fmt: str = "dense") -> BinMatrix:
    if fmt == "dense":
        return _parse_dense(text)
    if fmt == "cols-int":
        return _parse_cols_int(text)
    if fmt == "json":
        return _parse_json(text)
    raise ParseError(f"unknown format {fmt!r}")


def render_matrix(m: BinMatrix, fmt: str = "dense") -> str:
    if fmt == "dense":
        return "\n".join(m.to_bitstring_rows()) + "\n"
    if fmt == "cols-int":
        ints = " ".join(str(c.bits) for c in m.col_vectors())
        return f"k={m.rows}\n{ints}\n"
    if fmt == "json":
        doc = {"rows": m.rows, "cols": m.cols, "data": m.to_bitstring_rows()}
        return json.dumps(doc) + "\n"
    raise ParseError(f"unknown format {fmt!r}")

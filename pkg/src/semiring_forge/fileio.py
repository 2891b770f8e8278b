"""Plain-text semiring files and JSON reports.

A .sr file holds the carrier size on the first line, the addition
table as that many space-separated rows, a lone "#" separator line,
and the multiplication table in the same shape.  ASCII, LF line ends,
one trailing newline.  Parsing returns raw tables without checking the
semiring axioms; callers decide what a violation means.
"""

from __future__ import annotations

import json

from .errors import ParseError


def _parse_block(lines, start, n, what):
    rows = []
    for i in range(n):
        if start + i >= len(lines):
            raise ParseError(f"{what} table ends after {i} of {n} rows")
        parts = lines[start + i].split()
        try:
            row = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"{what} row {i} is not made of integers: {lines[start + i]!r}")
        if len(row) != n:
            raise ParseError(f"{what} row {i} has {len(row)} entries, expected {n}")
        if any(v < 0 or v >= n for v in row):
            raise ParseError(f"{what} row {i} leaves the carrier 0..{n - 1}")
        rows.append(row)
    return tuple(rows), start + n


def loads_semiring_tables(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the carrier size, got {lines[0]!r}")
    if n < 1:
        raise ParseError(f"carrier size must be positive, got {n}")
    add, pos = _parse_block(lines, 1, n, "addition")
    if pos >= len(lines) or lines[pos].strip() != "#":
        raise ParseError("expected a lone '#' between the tables")
    mul, pos = _parse_block(lines, pos + 1, n, "multiplication")
    if pos != len(lines):
        raise ParseError(f"trailing content after the tables: {lines[pos]!r}")
    return add, mul


def dumps_semiring_tables(add, mul) -> str:
    out = [str(len(add))]
    out += [" ".join(str(v) for v in row) for row in add]
    out.append("#")
    out += [" ".join(str(v) for v in row) for row in mul]
    return "\n".join(out) + "\n"


def read_semiring_tables(path):
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}")
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not ASCII")
    return loads_semiring_tables(text)


def write_semiring_tables(path, add, mul) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_semiring_tables(add, mul))


def report_json(mapping) -> str:
    """Serialize a report dict with keys in insertion order."""
    return json.dumps(mapping, indent=2, sort_keys=False) + "\n"

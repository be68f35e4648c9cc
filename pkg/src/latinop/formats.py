"""Text formats: .lhc operation tables, .lhcs streams, and .tsv
transversal files.

.lhc: a header line "n d" followed by n^d whitespace-separated base-10
symbols, row-major with the last argument varying fastest.  Newlines
beyond the header are cosmetic.  .lhcs concatenates .lhc records
separated by a blank line.  .tsv holds n lines, each a (d+1)-tuple.
"""
from __future__ import annotations

import re

from .core import RawOp, ValidationError
from .transversal import Transversal

_TOKEN = re.compile(r"\S+")


class FormatError(ValidationError):
    """Malformed input text, with a line/column position."""


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        for m in _TOKEN.finditer(line):
            yield m.group(), lineno, m.start() + 1


def _int_token(tok):
    text, line, col = tok
    try:
        return int(text)
    except ValueError:
        raise FormatError(
            f"line {line}, column {col}: expected an integer, got {text!r}"
        ) from None


def parse_lhc(text: str) -> RawOp:
    """Parse one .lhc record into a RawOp (Latin property not required)."""
    toks = list(_tokens(text))
    if len(toks) < 2:
        raise FormatError("line 1, column 1: missing 'n d' header")
    n = _int_token(toks[0])
    d = _int_token(toks[1])
    if n < 1 or d < 1:
        line, col = toks[0][1], toks[0][2]
        raise FormatError(f"line {line}, column {col}: n and d must be >= 1")
    expected = n ** d
    body = toks[2:]
    if len(body) != expected:
        if len(body) < expected:
            raise FormatError(
                f"unexpected end of input: got {len(body)} symbols, expected {expected}"
            )
        text_, line, col = body[expected]
        raise FormatError(
            f"line {line}, column {col}: trailing token {text_!r} "
            f"(expected exactly {expected} symbols)"
        )
    table = []
    for tok in body:
        v = _int_token(tok)
        if not 0 <= v < n:
            _, line, col = tok
            raise FormatError(
                f"line {line}, column {col}: symbol {v} out of range [0, {n})"
            )
        table.append(v)
    return RawOp(n, d, tuple(table))


def emit_lhc(op: RawOp) -> str:
    """Serialize an operation; one line of n symbols per innermost row."""
    lines = [f"{op.n} {op.d}"]
    for base in range(0, len(op.table), op.n):
        lines.append(" ".join(map(str, op.table[base:base + op.n])))
    return "\n".join(lines) + "\n"


def parse_lhcs(text: str) -> list:
    """Parse a .lhcs stream: blank-line separated .lhc records."""
    records = [r for r in re.split(r"\n\s*\n", text) if r.strip()]
    return [parse_lhc(r) for r in records]


def emit_lhcs(ops) -> str:
    return "\n".join(emit_lhc(op) for op in ops)


def parse_tsv(text: str, n: int, d: int) -> Transversal:
    """Parse a transversal file: n lines, each a (d+1)-tuple."""
    cells = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        toks = [(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(line)]
        if len(toks) != d + 1:
            raise FormatError(
                f"line {lineno}: expected {d + 1} entries, got {len(toks)}"
            )
        cell = []
        for tok in toks:
            v = _int_token(tok)
            if not 0 <= v < n:
                _, line_, col = tok
                raise FormatError(
                    f"line {line_}, column {col}: symbol {v} out of range [0, {n})"
                )
            cell.append(v)
        cells.append(tuple(cell))
    return Transversal(n, d, tuple(cells))


def emit_tsv(t: Transversal) -> str:
    return "\n".join(" ".join(map(str, cell)) for cell in t.cells) + "\n"

"""Shared text formats: scalars, matrices, series and tropical matrices.

Scalar grammar::

    element  := "-inf" | rational "~" layer
    rational := ["-"] digits ["/" digits]
    layer    := rational | rational sign rational "i" | rational "i"

Matrix files carry a header naming the shape and the layer ring
(``elt-matrix 3 3 Q``); rows follow one per line, entries whitespace
separated.  Series use ``coeff t^ exponent`` terms joined by `` + `` with
``0`` for the zero series; series matrices separate entries by commas.
Tropical matrices hold plain rationals and ``-inf``.  Parsing and printing
round-trip bit-exactly on canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .layers import LayerRing, parse_rational, ring_by_name
from .matrices import ELTMatrix
from .puiseux import PuiseuxMatrix, PuiseuxPoly
from .scalars import ELTValue, NEG_INF
from .tropical import TropicalMatrix


def format_scalar(x: ELTValue, ring: LayerRing) -> str:
    if x.tangible is None:
        return "-inf"
    return f"{x.tangible}~{ring.format(x.layer)}"


def parse_scalar(text: str, ring: LayerRing) -> ELTValue:
    text = text.strip()
    if text == "-inf":
        return NEG_INF
    head, sep, tail = text.partition("~")
    if not sep:
        raise ParseError(f"scalar {text!r} lacks the '~' separator")
    return ELTValue(parse_rational(head), ring.parse(tail))


def format_vector(v, ring: LayerRing) -> str:
    return " ".join(format_scalar(x, ring) for x in v)


def parse_vector(text: str, ring: LayerRing):
    parts = text.split()
    if not parts:
        raise ParseError("empty vector")
    return tuple(parse_scalar(p, ring) for p in parts)


def _split_header(line: str, tag: str, expected_fields: int):
    parts = line.split()
    if not parts or parts[0] != tag:
        raise ParseError(f"expected a {tag!r} header, got {line!r}", line=1)
    if len(parts) != expected_fields + 1:
        raise ParseError(f"{tag} header needs {expected_fields} fields", line=1)
    return parts[1:]


def _shape(fields):
    try:
        rows, cols = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError("matrix shape must be two integers", line=1) from None
    if rows < 1 or cols < 1:
        raise ParseError("matrix shape must be positive", line=1)
    return rows, cols


def _body_lines(text: str):
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input")
    body = [(idx + 1, line) for idx, line in enumerate(lines[1:], start=1) if line.strip()]
    return lines[0], body


def format_matrix(M: ELTMatrix) -> str:
    head = f"elt-matrix {M.nrows} {M.ncols} {M.ring.name}"
    rows = "\n".join(format_vector(row, M.ring) for row in M.entries)
    return f"{head}\n{rows}\n"


def parse_matrix(text: str, ring_override: LayerRing | None = None) -> ELTMatrix:
    header, body = _body_lines(text)
    fields = _split_header(header, "elt-matrix", 3)
    rows, cols = _shape(fields)
    ring = ring_override if ring_override is not None else ring_by_name(fields[2])
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    out = []
    for lineno, line in body:
        try:
            vec = parse_vector(line, ring)
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno + 1) from None
        if len(vec) != cols:
            raise ParseError(f"expected {cols} entries, found {len(vec)}", line=lineno + 1)
        out.append(vec)
    return ELTMatrix(out, ring)


def format_series(p: PuiseuxPoly, ring: LayerRing) -> str:
    if p.is_zero:
        return "0"
    return " + ".join(f"{ring.format(c)}t^{e}" for e, c in p.terms)


def parse_series(text: str, ring: LayerRing) -> PuiseuxPoly:
    text = text.strip()
    if text == "0":
        return PuiseuxPoly()
    terms = []
    for chunk in text.split(" + "):
        head, sep, tail = chunk.partition("t^")
        if not sep:
            raise ParseError(f"series term {chunk!r} lacks 't^'")
        terms.append((parse_rational(tail), ring.parse(head.strip())))
    return PuiseuxPoly(terms)


def format_series_matrix(M: PuiseuxMatrix) -> str:
    head = f"puiseux-matrix {M.nrows} {M.ncols} {M.ring.name}"
    rows = "\n".join(
        " , ".join(format_series(x, M.ring) for x in row) for row in M.entries
    )
    return f"{head}\n{rows}\n"


def parse_series_matrix(text: str, ring_override: LayerRing | None = None) -> PuiseuxMatrix:
    header, body = _body_lines(text)
    fields = _split_header(header, "puiseux-matrix", 3)
    rows, cols = _shape(fields)
    ring = ring_override if ring_override is not None else ring_by_name(fields[2])
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    out = []
    for lineno, line in body:
        cells = [c.strip() for c in line.split(",")]
        if len(cells) != cols:
            raise ParseError(f"expected {cols} entries, found {len(cells)}", line=lineno + 1)
        try:
            out.append(tuple(parse_series(c, ring) for c in cells))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno + 1) from None
    return PuiseuxMatrix(out, ring)


def format_tropical_matrix(T: TropicalMatrix) -> str:
    head = f"trop-matrix {T.nrows} {T.ncols}"
    rows = "\n".join(
        " ".join("-inf" if x is None else str(x) for x in row) for row in T.entries
    )
    return f"{head}\n{rows}\n"


def parse_tropical_matrix(text: str) -> TropicalMatrix:
    header, body = _body_lines(text)
    fields = _split_header(header, "trop-matrix", 2)
    rows, cols = _shape(fields)
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    out = []
    for lineno, line in body:
        cells = line.split()
        if len(cells) != cols:
            raise ParseError(f"expected {cols} entries, found {len(cells)}", line=lineno + 1)
        row = []
        for cell in cells:
            if cell == "-inf":
                row.append(None)
            else:
                try:
                    row.append(parse_rational(cell))
                except ParseError:
                    raise ParseError(f"bad tropical entry {cell!r}", line=lineno + 1) from None
        out.append(row)
    return TropicalMatrix(out)

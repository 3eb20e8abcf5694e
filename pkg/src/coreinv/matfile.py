"""Plain-text matrix files.

Format (UTF-8)::

    field Q            # or: field Qi | field Fp <p>
    2                  # dimension n
    1 -2               # n rows of n whitespace-separated scalars
    1 -2

Output of :func:`format_matrix` parses back to an identical matrix.
"""

from __future__ import annotations

from pathlib import Path

from .errors import MatrixFormatError
from .matrix import StarMatrix
from .scalars import FieldSpec

INLINE_SEP = " | "


def _parse_header(line: str, lineno: int) -> FieldSpec:
    parts = line.split()
    if not parts or parts[0] != "field":
        raise MatrixFormatError(f"expected 'field <Q|Qi|Fp p>', got {line.strip()!r}", line=lineno)
    if len(parts) == 2 and parts[1] in ("Q", "Qi"):
        return FieldSpec(parts[1])
    if len(parts) == 3 and parts[1] == "Fp":
        try:
            p = int(parts[2])
        except ValueError:
            raise MatrixFormatError(f"bad modulus {parts[2]!r}", line=lineno, token=parts[2]) from None
        try:
            return FieldSpec("Fp", p)
        except ValueError:
            raise MatrixFormatError(f"modulus {p} is not a prime below 65536", line=lineno, token=parts[2]) from None
    raise MatrixFormatError(f"unknown field declaration {line.strip()!r}", line=lineno)


def parse_matrix(text: str, max_dim: int | None = None) -> StarMatrix:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty matrix file", line=1)
    field = _parse_header(lines[0], 1)
    if len(lines) < 2:
        raise MatrixFormatError("missing dimension line", line=2)
    dim_tok = lines[1].strip()
    try:
        n = int(dim_tok)
    except ValueError:
        raise MatrixFormatError(f"bad dimension {dim_tok!r}", line=2, token=dim_tok) from None
    if n < 1:
        raise MatrixFormatError(f"dimension must be >= 1, got {n}", line=2, token=dim_tok)
    if max_dim is not None and n > max_dim:
        raise MatrixFormatError(f"dimension {n} exceeds the limit {max_dim}", line=2, token=dim_tok)
    body = lines[2:]
    if len(body) != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(body)}", line=2 + min(len(body), n) + 1)
    rows = []
    for i, line in enumerate(body):
        lineno = i + 3
        toks = line.split()
        if len(toks) != n:
            raise MatrixFormatError(f"expected {n} entries, found {len(toks)}", line=lineno)
        row = []
        for tok in toks:
            try:
                row.append(field.parse(tok))
            except MatrixFormatError as exc:
                raise MatrixFormatError(str(exc), line=lineno, token=tok) from None
        rows.append(row)
    return StarMatrix(field, rows)


def format_matrix(m: StarMatrix) -> str:
    fmt = m.field.format
    out = [m.field.header(), str(m.n)]
    out.extend(" ".join(fmt(x) for x in row) for row in m.rows)
    return "\n".join(out) + "\n"


def format_inline(m: StarMatrix) -> str:
    """Single-line form: the file's lines joined with ``' | '``."""
    return INLINE_SEP.join(format_matrix(m).rstrip("\n").split("\n"))


def parse_inline(text: str) -> StarMatrix:
    return parse_matrix("\n".join(part.strip() for part in text.split("|")))


def read_matrix(path, max_dim: int | None = None) -> StarMatrix:
    return parse_matrix(Path(path).read_text(encoding="utf-8"), max_dim=max_dim)


def write_matrix(path, m: StarMatrix) -> None:
    Path(path).write_text(format_matrix(m), encoding="utf-8")

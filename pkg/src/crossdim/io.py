"""Plain-text matrix files.

Format: optional ``#`` comment lines, a header ``ROWS COLS`` (or ``N`` for a
vector), then row-major whitespace-separated decimals.  Values are written
with 17 significant digits so a write/read round trip is bit exact.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np


class MatrixFileError(ValueError):
    pass


def parse_matrix(text: str, source: str = "<string>") -> np.ndarray:
    """Parse matrix-file text; a one-number header gives a 1-D vector."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MatrixFileError(f"{source}: empty matrix file")
    head = lines[0].split()
    try:
        dims = [int(v) for v in head]
    except ValueError:
        raise MatrixFileError(f"{source}: header must be 'ROWS COLS' or 'N', got {lines[0]!r}") from None
    if len(dims) not in (1, 2) or min(dims) < 1:
        raise MatrixFileError(f"{source}: bad header {lines[0]!r}")
    try:
        values = np.array([float(v) for ln in lines[1:] for v in ln.split()])
    except ValueError as exc:
        raise MatrixFileError(f"{source}: {exc}") from None
    count = int(np.prod(dims))
    if values.size != count:
        raise MatrixFileError(f"{source}: header promises {count} entries, found {values.size}")
    if len(dims) == 1:
        return values
    rows, cols = dims
    if cols > 1:
        data_rows = lines[1:]
        if len(data_rows) != rows or any(len(ln.split()) != cols for ln in data_rows):
            raise MatrixFileError(f"{source}: data rows do not match shape {rows}x{cols}")
    return values.reshape(rows, cols)


def read_matrix(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise MatrixFileError(f"{path}: {exc.strerror}") from None
    return parse_matrix(text, str(path))


def format_matrix(a, comment: str | None = None) -> str:
    a = np.asarray(a, dtype=float)
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim == 1:
        out.append(str(a.size))
        out.extend(f"{v:.17g}" for v in a)
    else:
        out.append(f"{a.shape[0]} {a.shape[1]}")
        out.extend(" ".join(f"{v:.17g}" for v in row) for row in a)
    return "\n".join(out) + "\n"


def write_matrix(path, a, comment: str | None = None) -> None:
    Path(path).write_text(format_matrix(a, comment))

"""Row (right) and column (left) insertion into super tableaux."""
from __future__ import annotations

from functools import reduce
from typing import Iterable

from .alphabet import Letter, Word
from .shapes import SkewShape, conjugate
from .tableau import EMPTY, SkewTableau, col_ok, read_row, row_ok


def _straight(rows) -> SkewTableau:
    rows = tuple(tuple(r) for r in rows)
    return SkewTableau(SkewShape(tuple(len(r) for r in rows), ()), rows)


def _columns(t: SkewTableau) -> list[list[Letter]]:
    return [[t.rows[i][j] for i in range(h)] for j, h in enumerate(conjugate(t.outer))]


def _from_columns(cols) -> SkewTableau:
    height = len(cols[0]) if cols else 0
    rows = [[c[i] for c in cols if len(c) > i] for i in range(height)]
    return _straight(rows)


def _bump(line: list[Letter], x: Letter, fits) -> Letter | None:
    """Put ``x`` into ``line``; return the bumped letter or None if appended."""
    for k, y in enumerate(line):
        if not fits(y, x):
            line[k] = x
            return y
    line.append(x)
    return None


def insert_right(t: SkewTableau, x: Letter) -> SkewTableau:
    """Row insertion ``t <- x``.

    ``x`` bumps the first entry of the row that may not precede it in a row,
    so an even letter bumps the least entry strictly greater than it and an
    odd letter the least entry greater or equal.
    """
    if not t.is_straight:
        raise ValueError("row insertion needs a straight tableau")
    rows = [list(r) for r in t.rows]
    carry: Letter | None = x
    for row in rows:
        carry = _bump(row, carry, row_ok)
        if carry is None:
            break
    if carry is not None:
        rows.append([carry])
    return _straight(rows)


def insert_left(x: Letter, t: SkewTableau) -> SkewTableau:
    """Column insertion ``x -> t``, the column-wise dual of row insertion."""
    if not t.is_straight:
        raise ValueError("column insertion needs a straight tableau")
    cols = _columns(t)
    carry: Letter | None = x
    for col in cols:
        carry = _bump(col, carry, col_ok)
        if carry is None:
            break
    if carry is not None:
        cols.append([carry])
    return _from_columns(cols)


def insert_word(t: SkewTableau, word: Iterable[Letter]) -> SkewTableau:
    return reduce(insert_right, word, t)


def tableau_of_word(word: Word) -> SkewTableau:
    """The insertion tableau C(w): right-insert the letters from left to right."""
    return insert_word(EMPTY, word)


def tableau_of_word_left(word: Word) -> SkewTableau:
    """C(w) computed by left-inserting the letters from right to left."""
    t = EMPTY
    for x in reversed(word):
        t = insert_left(x, t)
    return t


def product(t: SkewTableau, u: SkewTableau) -> SkewTableau:
    """Insertion product: row-insert the row reading of ``u`` into ``t``."""
    return insert_word(t, read_row(u))


def skew_product(s: SkewTableau, u: SkewTableau) -> SkewTableau:
    return tableau_of_word(read_row(s) + read_row(u))

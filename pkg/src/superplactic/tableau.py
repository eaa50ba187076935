"""Super (skew) tableaux over a signed alphabet.

A filling is stored row by row; row ``i`` holds the entries of columns
``mu_i + 1 .. lam_i``.  The two adjacency predicates :func:`row_ok` and
:func:`col_ok` are the single source of the signed strictness rules and are
reused by insertion, sliding and the Greene search.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .alphabet import Letter, SignedAlphabet, Word
from .errors import ParseError, TableauError
from .shapes import Cell, Partition, SkewShape, diff_cell, part, partition


def row_ok(a: Letter, b: Letter) -> bool:
    """``a`` may stand immediately left of ``b`` in a row."""
    return a < b or (a == b and a.parity == 0)


def col_ok(a: Letter, b: Letter) -> bool:
    """``a`` may stand immediately above ``b`` in a column."""
    return a < b or (a == b and a.parity == 1)


@dataclass(frozen=True)
class SkewTableau:
    shape: SkewShape
    rows: tuple  # tuple[tuple[Letter, ...], ...]

    @property
    def outer(self) -> Partition:
        return self.shape.outer

    @property
    def inner(self) -> Partition:
        return self.shape.inner

    @property
    def is_straight(self) -> bool:
        return not self.shape.inner

    def __len__(self):
        return self.shape.size

    def __getitem__(self, cell: Cell) -> Letter:
        i, j = cell
        if cell not in self.shape:
            raise KeyError(cell)
        return self.rows[i - 1][j - part(self.shape.inner, i) - 1]

    def get(self, cell: Cell, default=None):
        return self[cell] if cell in self.shape else default

    def items(self) -> Iterator[tuple[Cell, Letter]]:
        for i, row in enumerate(self.rows, start=1):
            offset = part(self.shape.inner, i)
            for k, x in enumerate(row):
                yield (i, offset + k + 1), x

    def letters(self) -> list[Letter]:
        return [x for row in self.rows for x in row]

    def to_lists(self) -> list[list[str]]:
        """Symbols row by row; convenient in tests."""
        return [[x.symbol for x in row] for row in self.rows]

    def __str__(self):
        return format_tableau(self)


EMPTY = SkewTableau(SkewShape((), ()), ())


def _check(shape: SkewShape, rows) -> None:
    for i, row in enumerate(rows, start=1):
        offset = part(shape.inner, i)
        for k in range(len(row) - 1):
            if not row_ok(row[k], row[k + 1]):
                j = offset + k + 2
                raise TableauError(
                    f"row condition fails at cell ({i},{j}): "
                    f"{row[k + 1].symbol} right of {row[k].symbol}",
                    cell=(i, j),
                    rule="row",
                )
        if i == 1:
            continue
        above = rows[i - 2]
        above_offset = part(shape.inner, i - 1)
        for k, x in enumerate(row):
            j = offset + k + 1
            if j <= above_offset:
                continue
            y = above[j - above_offset - 1]
            if not col_ok(y, x):
                raise TableauError(
                    f"column condition fails at cell ({i},{j}): "
                    f"{x.symbol} below {y.symbol}",
                    cell=(i, j),
                    rule="column",
                )


def validate(shape: SkewShape, rows: Sequence[Sequence[Letter]], alphabet: SignedAlphabet | None = None) -> SkewTableau:
    """Build a skew tableau, raising :class:`TableauError` on any violation."""
    lam, mu = shape.outer, shape.inner
    rows = [tuple(r) for r in rows]
    while len(rows) < len(lam):
        rows.append(())
    if len(rows) > len(lam):
        raise TableauError(f"{len(rows)} rows given for a shape with {len(lam)} rows", rule="length")
    for i, row in enumerate(rows, start=1):
        want = part(lam, i) - part(mu, i)
        if len(row) != want:
            raise TableauError(
                f"row {i} has {len(row)} entries, shape needs {want}", cell=(i, 0), rule="length"
            )
        if alphabet is not None:
            for x in row:
                if x not in alphabet:
                    raise TableauError(f"letter {x.symbol!r} is not in the alphabet", rule="letter")
    rows = tuple(rows)
    _check(shape, rows)
    return SkewTableau(SkewShape(lam, mu), rows)


def tableau(rows: Sequence[Sequence[Letter]], inner: Sequence[int] = ()) -> SkewTableau:
    """Convenience constructor: shape inferred from row lengths and ``inner``."""
    mu = partition(inner)
    lam = partition([part(mu, i) + len(r) for i, r in enumerate(rows, start=1)])
    return validate(SkewShape(lam, mu), rows)


def from_symbols(rows: Sequence[Sequence[str] | str], alphabet: SignedAlphabet, inner=()) -> SkewTableau:
    """Build a tableau from symbol tokens; string rows are split on whitespace."""
    out = []
    for r in rows:
        toks = r.split() if isinstance(r, str) else r
        out.append([alphabet[t] for t in toks])
    return tableau(out, inner)


def read_row(s: SkewTableau) -> Word:
    """Rows from bottom to top, each left to right."""
    return tuple(x for row in reversed(s.rows) for x in row)


def read_col(s: SkewTableau) -> Word:
    """Columns from left to right, each bottom to top."""
    ncols = s.outer[0] if s.outer else 0
    word = []
    for j in range(1, ncols + 1):
        for i in range(len(s.outer), 0, -1):
            if (i, j) in s.shape:
                word.append(s[(i, j)])
    return tuple(word)


def enumerate_tableaux(shape: SkewShape, alphabet: SignedAlphabet) -> Iterator[SkewTableau]:
    """All super tableaux of ``shape``, lexicographic in row-major filling.

    Backtracking fills cells row by row and rejects a letter as soon as it
    conflicts with its left or upper neighbour.
    """
    cells = shape.cells()
    letters = alphabet.letters
    filled: dict[Cell, Letter] = {}
    lam, mu = shape.outer, shape.inner

    def rows_out():
        return tuple(
            tuple(filled[(i, j)] for j in range(part(mu, i) + 1, part(lam, i) + 1))
            for i in range(1, len(lam) + 1)
        )

    def rec(k):
        if k == len(cells):
            yield SkewTableau(shape, rows_out())
            return
        i, j = cells[k]
        left = filled.get((i, j - 1))
        up = filled.get((i - 1, j))
        for x in letters:
            if left is not None and not row_ok(left, x):
                continue
            if up is not None and not col_ok(up, x):
                continue
            filled[(i, j)] = x
            yield from rec(k + 1)
        filled.pop((i, j), None)

    yield from rec(0)


def standard_order(s: SkewTableau) -> list[Cell]:
    """Cells in the order a jeu-de-taquin-compatible standardization adds them.

    Smaller letters come first.  Equal letters of parity 0 lie in distinct
    columns and are taken left to right; equal letters of parity 1 lie in
    distinct rows and are taken top to bottom.
    """

    def key(item):
        (i, j), x = item
        return (x.rank, j if x.parity == 0 else i)

    return [cell for cell, _ in sorted(s.items(), key=key)]


def standardization_chain(s: SkewTableau) -> list[Partition]:
    """Chain of partitions from the inner to the outer shape, one box per step."""
    current = list(s.inner)
    chain = [tuple(current)]
    for i, j in standard_order(s):
        while len(current) < i:
            current.append(0)
        assert current[i - 1] == j - 1, f"cell {(i, j)} added out of order"
        current[i - 1] = j
        assert i == 1 or current[i - 2] >= j, f"prefix is not a partition at {(i, j)}"
        chain.append(tuple(current))
    return chain


def standardize(s: SkewTableau) -> SkewTableau:
    """Replace letters by labels ``1..n`` following :func:`standard_order`."""
    order = standard_order(s)
    labels = SignedAlphabet.standard(len(order))
    rank = {cell: k for k, cell in enumerate(order)}
    rows = tuple(
        tuple(labels.letters[rank[(i, part(s.inner, i) + k + 1)]] for k in range(len(row)))
        for i, row in enumerate(s.rows, start=1)
    )
    return SkewTableau(s.shape, rows)


def from_chain(chain: Sequence[Partition], letters: Sequence[Letter]) -> SkewTableau:
    """Inverse of the standardization chain: the k-th added box gets ``letters[k]``."""
    if len(letters) != len(chain) - 1:
        raise ValueError("need one letter per chain step")
    filled = {}
    for k in range(1, len(chain)):
        filled[diff_cell(chain[k - 1], chain[k])] = letters[k - 1]
    shape = SkewShape(tuple(chain[-1]), tuple(chain[0]))
    rows = [
        [filled[(i, j)] for j in range(part(shape.inner, i) + 1, part(shape.outer, i) + 1)]
        for i in range(1, len(shape.outer) + 1)
    ]
    return validate(shape, rows)


def standard_tableaux(shape: SkewShape) -> Iterator[SkewTableau]:
    """All standard fillings of ``shape`` by ``1..n`` (as chains of added boxes)."""
    n = shape.size
    labels = SignedAlphabet.standard(n).letters
    target = shape.outer

    def rec(current, chain):
        if len(chain) == n + 1:
            yield from_chain(chain, labels)
            return
        for i in range(1, len(target) + 1):
            v = part(current, i)
            if v < part(target, i) and (i == 1 or v < part(current, i - 1)):
                nxt = list(current) + [0] * (i - len(current))
                nxt[i - 1] += 1
                nxt = tuple(nxt)
                yield from rec(nxt, chain + [nxt])

    yield from rec(shape.inner, [shape.inner])


def format_tableau(s: SkewTableau) -> str:
    """TBL text: one line per row, ``.`` marks inner cells."""
    lines = []
    for i, row in enumerate(s.rows, start=1):
        toks = ["."] * part(s.inner, i) + [x.symbol for x in row]
        lines.append(" ".join(toks))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_tableau(text: str, alphabet: SignedAlphabet, source: str | None = None) -> SkewTableau:
    """Parse TBL text against ``alphabet``; validity is checked."""
    lam, mu, rows, linenos = [], [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        row = []
        for tok in toks[dots:]:
            if tok == ".":
                raise ParseError("'.' may only appear at the start of a row", lineno, source)
            if tok not in alphabet:
                raise ParseError(f"unknown symbol {tok!r}", lineno, source)
            row.append(alphabet[tok])
        lam.append(len(toks))
        mu.append(dots)
        rows.append(row)
        linenos.append(lineno)
    try:
        shape = SkewShape.of(lam, mu)
    except ValueError as exc:
        raise ParseError(f"bad tableau frame: {exc}", None, source) from None
    try:
        return validate(shape, rows)
    except TableauError as exc:
        line = linenos[exc.cell[0] - 1] if exc.cell and exc.cell[0] >= 1 else None
        raise ParseError(str(exc), line, source) from None

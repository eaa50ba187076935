"""Growth diagrams for the super jeu de taquin.

Layout follows the usual picture: the top row is the chain of the skew
tableau being rectified, the left column read bottom-up is the chain of the
recording tableau ``R`` (which inner corners are slid, largest first), the
bottom row is the chain of the rectification and the right column read
bottom-up is the chain of ``R'`` (which outer cells were vacated).

Recording tableaux may carry arbitrary letters.  Letters simply ride along
with the boxes of their chain: the cell vacated by the slide started at a cell
of ``R`` inherits that cell's letter.
"""
from __future__ import annotations

from typing import Sequence

from .errors import BudgetExceeded
from .shapes import Partition, SkewShape, contains, part, partition, size
from .tableau import (
    SkewTableau,
    from_chain,
    standard_order,
    standard_tableaux,
    standardization_chain,
)
from .taquin import forward_slide, rectify, reverse_slide

DUAL_EQUIVALENCE_MAX_INNER = 6

GrowthDiagram = list  # list[list[Partition]], indexed [row][col] from the top-left


def _between(nu: Partition, rho: Partition) -> list[Partition]:
    """Partitions of size |nu|+1 lying between ``nu`` and ``rho``."""
    out = []
    for i in range(1, len(rho) + 1):
        v = part(nu, i)
        if v < part(rho, i) and (i == 1 or v < part(nu, i - 1)):
            q = list(nu) + [0] * (i - len(nu))
            q[i - 1] += 1
            out.append(tuple(q))
    return out


def local_rule(nu: Partition, mu: Partition, rho: Partition) -> Partition:
    """Complete a square: given nu below mu below rho, return the fourth corner.

    If ``mu`` is the only partition one box above ``nu`` inside ``rho`` the
    answer is ``mu``, otherwise it is the other such partition.
    """
    nu, mu, rho = tuple(nu), tuple(mu), tuple(rho)
    if not (size(mu) == size(nu) + 1 and size(rho) == size(nu) + 2):
        raise ValueError(f"local rule needs sizes n, n+1, n+2: {nu}, {mu}, {rho}")
    if not (contains(nu, mu) and contains(mu, rho)):
        raise ValueError(f"local rule needs {nu} within {mu} within {rho}")
    candidates = _between(nu, rho)
    if candidates == [mu]:
        return mu
    others = [c for c in candidates if c != mu]
    assert len(others) == 1 and len(candidates) == 2, candidates
    return others[0]


def _check_chain(chain: Sequence[Partition]) -> list[Partition]:
    chain = [partition(p) for p in chain]
    for a, b in zip(chain, chain[1:]):
        if size(b) != size(a) + 1 or not contains(a, b):
            raise ValueError(f"chain step {a} -> {b} does not add one box")
    return chain


def build_diagram(top: Sequence[Partition], left: Sequence[Partition]) -> GrowthDiagram:
    """Fill a growth diagram from its top row and its left column.

    ``top`` runs from mu to lambda; ``left`` runs from the empty partition up
    to mu (the recording chain).  Row ``r`` of the result is the chain after
    ``r`` slides.
    """
    top, left = _check_chain(top), _check_chain(left)
    if not left or left[0] != () or left[-1] != top[0]:
        raise ValueError("left chain must run from the empty partition to the start of the top chain")
    column = list(reversed(left))  # mu at the top, empty at the bottom
    grid = [list(top)]
    for r in range(1, len(column)):
        row = [column[r]]
        above = grid[r - 1]
        for c in range(1, len(top)):
            row.append(local_rule(row[c - 1], above[c - 1], above[c]))
        grid.append(row)
    return grid


def diagram_from_bottom_right(bottom: Sequence[Partition], right: Sequence[Partition]) -> GrowthDiagram:
    """Rebuild a diagram from its bottom row and its right column (read bottom-up)."""
    bottom, right = _check_chain(bottom), _check_chain(right)
    if bottom[-1] != right[0]:
        raise ValueError("bottom row and right column must share their corner")
    rows, cols = len(right), len(bottom)
    grid = [[None] * cols for _ in range(rows)]
    grid[-1] = list(bottom)
    for r in range(rows):
        grid[rows - 1 - r][cols - 1] = right[r]
    for r in range(rows - 2, -1, -1):
        for c in range(cols - 2, -1, -1):
            grid[r][c] = local_rule(grid[r + 1][c], grid[r + 1][c + 1], grid[r][c + 1])
    return grid


def left_column(grid: GrowthDiagram) -> list[Partition]:
    return [row[0] for row in reversed(grid)]


def right_column(grid: GrowthDiagram) -> list[Partition]:
    return [row[-1] for row in reversed(grid)]


def format_diagram(grid: GrowthDiagram) -> str:
    from .shapes import format_partition

    return "".join(" | ".join(format_partition(p) for p in row) + "\n" for row in grid)


def diagram_of(record: SkewTableau, s: SkewTableau) -> GrowthDiagram:
    """Growth diagram of ``s`` with slide order given by ``record``."""
    return build_diagram(standardization_chain(s), standardization_chain(record))


def _check_record(record: SkewTableau, s: SkewTableau) -> None:
    if not record.is_straight:
        raise ValueError("the recording tableau must have straight shape")
    if record.outer != s.inner:
        raise ValueError(f"recording tableau has shape {record.outer}, inner shape is {s.inner}")


def grw(record: SkewTableau, s: SkewTableau, trace: list | None = None):
    """Rectify ``s`` sliding inner corners in decreasing order of ``record``.

    Returns ``(Rec(s), R')`` where ``R'`` puts the letter of each cell of
    ``record`` on the outer cell vacated by the slide started there.
    """
    _check_record(record, s)
    order = standard_order(record)
    lam = s.outer
    vacated_letters = {}
    for cell in reversed(order):
        s, vacated = forward_slide(s, cell)
        vacated_letters[vacated] = record[cell]
        if trace is not None:
            trace.append(s)
    shape = SkewShape(lam, s.outer)
    rows = tuple(
        tuple(vacated_letters[(i, j)] for j in range(part(shape.inner, i) + 1, part(lam, i) + 1))
        for i in range(1, len(lam) + 1)
    )
    return s, SkewTableau(shape, rows)


def grw_inverse(t: SkewTableau, recording: SkewTableau):
    """Undo :func:`grw` by reverse slides from the cells of ``recording``.

    Cells are processed in increasing standard order; each reverse slide
    creates an inner cell which receives the letter of the cell it started
    from.  Returns ``(R, S)``.
    """
    if not t.is_straight or recording.inner != t.outer:
        raise ValueError("recording tableau must have inner shape equal to the shape of t")
    created = {}
    s = t
    for cell in standard_order(recording):
        s, inner_cell = reverse_slide(s, cell)
        created[inner_cell] = recording[cell]
    mu = s.inner
    rows = tuple(
        tuple(created[(i, j)] for j in range(1, part(mu, i) + 1)) for i in range(1, len(mu) + 1)
    )
    return SkewTableau(SkewShape(mu, ()), rows), s


def grw_by_diagram(record: SkewTableau, s: SkewTableau):
    """Same output as :func:`grw`, computed by local rules instead of slides."""
    _check_record(record, s)
    grid = diagram_of(record, s)
    rect = from_chain(grid[-1], [s[c] for c in standard_order(s)])
    rprime = from_chain(right_column(grid), [record[c] for c in standard_order(record)])
    return rect, rprime


def dual_equivalent(s: SkewTableau, u: SkewTableau, max_inner: int = DUAL_EQUIVALENCE_MAX_INNER) -> bool:
    """Same shape evolution under every slide order (all standard records)."""
    if s.shape != u.shape:
        raise ValueError(f"shapes differ: {s.shape} vs {u.shape}")
    if size(s.inner) > max_inner:
        raise BudgetExceeded(f"inner shape larger than {max_inner} boxes")
    return all(
        grw(record, s)[1] == grw(record, u)[1]
        for record in standard_tableaux(SkewShape(s.inner))
    )


def psi(s: SkewTableau, target: SkewTableau, record: SkewTableau | None = None) -> SkewTableau:
    """The skew tableau dual equivalent to ``s`` whose rectification is ``target``.

    ``record`` is the auxiliary tableau of the inner shape; any choice gives
    the same answer, a standard one is used by default.
    """
    rect = rectify(s)
    if rect.outer != target.outer or not target.is_straight:
        raise ValueError(f"target shape {target.shape} differs from the rectified shape {rect.outer}")
    if record is None:
        record = next(standard_tableaux(SkewShape(s.inner)))
    _, s_prime = grw(record, s)
    back, result = grw(target, s_prime)
    assert back == record
    return result

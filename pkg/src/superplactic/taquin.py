"""Super jeu de taquin: slides, rectification and skew concatenation.

Slides work on a mutable grid over the outer frame.  Inner cells hold
``None``; the moving hole is tracked as an explicit cell, never as a letter.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .shapes import Cell, SkewShape, inner_corners, part, partition
from .tableau import SkewTableau, row_ok

# A corner-choice policy: a callable picking one of the available inner
# corners, or an explicit sequence of corners consumed in order.
Strategy = Union[Callable[[list, SkewTableau], Cell], Sequence[Cell], None]


def _grid(s: SkewTableau) -> list[list]:
    grid = []
    for i, row in enumerate(s.rows, start=1):
        grid.append([None] * part(s.inner, i) + list(row))
    return grid


def _pack(grid, inner: list[int]) -> SkewTableau:
    """Rebuild a tableau from a grid whose cells beyond ``inner`` are all filled."""
    outer = partition([len(r) for r in grid])
    inner_p = partition(inner)
    rows = tuple(tuple(grid[i][inner[i] if i < len(inner) else 0 :]) for i in range(len(outer)))
    return SkewTableau(SkewShape(outer, inner_p), rows)


def _filled(grid, i: int, j: int):
    """Entry at 0-based (i, j) or None when outside the frame or an inner cell."""
    if 0 <= i < len(grid) and 0 <= j < len(grid[i]):
        return grid[i][j]
    return None


def slide_step(grid, hole: Cell):
    """Move one letter into ``hole`` (1-based); return the new hole or None.

    With an east neighbour ``e`` and a south neighbour ``s``, ``s`` moves up
    when ``s`` may stand left of ``e`` in a row; otherwise ``e`` moves left.
    ``None`` means the hole has reached an outer corner.
    """
    i, j = hole[0] - 1, hole[1] - 1
    east = _filled(grid, i, j + 1)
    south = _filled(grid, i + 1, j)
    if east is None and south is None:
        return None
    if east is None or (south is not None and row_ok(south, east)):
        grid[i][j], grid[i + 1][j] = south, None
        return (hole[0] + 1, hole[1])
    grid[i][j], grid[i][j + 1] = east, None
    return (hole[0], hole[1] + 1)


def reverse_step(grid, hole: Cell):
    """Move one letter out of the north or west neighbour into ``hole``.

    ``None`` means the hole has reached an inner corner.
    """
    i, j = hole[0] - 1, hole[1] - 1
    north = _filled(grid, i - 1, j) if i > 0 else None
    west = _filled(grid, i, j - 1) if j > 0 else None
    if north is None and west is None:
        return None
    if west is None or (north is not None and row_ok(west, north)):
        grid[i][j], grid[i - 1][j] = north, None
        return (hole[0] - 1, hole[1])
    grid[i][j], grid[i][j - 1] = west, None
    return (hole[0], hole[1] - 1)


@dataclass
class SlideRecord:
    corner: Cell
    path: list = field(default_factory=list)
    vacated: Cell | None = None

    def to_json(self) -> str:
        return json.dumps(
            {"corner": list(self.corner), "path": [list(c) for c in self.path], "vacated": list(self.vacated)}
        )


def forward_slide(s: SkewTableau, corner: Cell, record: SlideRecord | None = None):
    """Slide the hole at inner corner ``corner`` out; return ``(tableau, vacated)``."""
    if corner not in inner_corners(s.shape):
        raise ValueError(f"{corner} is not an inner corner of {s.shape}")
    grid = _grid(s)
    inner = list(s.inner)
    inner[corner[0] - 1] -= 1
    hole = corner
    path = [hole]
    while True:
        nxt = slide_step(grid, hole)
        if nxt is None:
            break
        hole = nxt
        path.append(hole)
    i, j = hole
    del grid[i - 1][j - 1]  # the hole is the last cell of its row
    while grid and not grid[-1]:
        grid.pop()
    if record is not None:
        record.path = path
        record.vacated = hole
    return _pack(grid, inner), hole


def reverse_slide(s: SkewTableau, outer: Cell):
    """Inverse of :func:`forward_slide` started from an addable outer cell.

    Returns ``(tableau, created_inner)``.
    """
    i, j = outer
    if j != part(s.outer, i) + 1 or (i > 1 and part(s.outer, i - 1) < j):
        raise ValueError(f"{outer} cannot be added to the frame {s.outer}")
    grid = _grid(s)
    if i > len(grid):
        grid.append([])
    grid[i - 1].append(None)
    hole = outer
    while True:
        nxt = reverse_step(grid, hole)
        if nxt is None:
            break
        hole = nxt
    inner = list(s.inner) + [0] * (len(grid) - len(s.inner))
    if inner[hole[0] - 1] != hole[1] - 1:
        raise ValueError(f"reverse slide from {outer} does not end at an inner corner")
    inner[hole[0] - 1] += 1
    return _pack(grid, inner), hole


def bottom_right(corners: list, s: SkewTableau) -> Cell:
    """Default policy: bottom-most (hence right-most) inner corner."""
    return max(corners)


def random_strategy(rng: random.Random):
    return lambda corners, s: rng.choice(corners)


def rectify(s: SkewTableau, strategy: Strategy = None, trace: list | None = None) -> SkewTableau:
    """Slide until no inner corner remains.

    ``trace``, when given, receives one :class:`SlideRecord` per slide.
    """
    if strategy is None:
        strategy = bottom_right
    order = None if callable(strategy) else list(strategy)
    step = 0
    while s.inner:
        corners = inner_corners(s.shape)
        if order is None:
            corner = strategy(corners, s)
        else:
            if step >= len(order):
                raise ValueError("corner order ended before the rectification")
            corner = tuple(order[step])
        rec = SlideRecord(corner) if trace is not None else None
        s, _ = forward_slide(s, corner, rec)
        if rec is not None:
            trace.append(rec)
        step += 1
    return s


def concat(s: SkewTableau, u: SkewTableau) -> SkewTableau:
    """``[S, U]``: ``U`` shifted right past the first row of ``S`` and put above it."""
    shift = s.outer[0] if s.outer else 0
    lam, lam_in = s.outer, s.inner
    mu, mu_in = u.outer, u.inner
    outer = [m + shift for m in mu] + list(lam)
    inner = [part(mu_in, i) + shift for i in range(1, len(mu) + 1)] + list(lam_in)
    rows = tuple(u.rows) + tuple(s.rows)
    return SkewTableau(SkewShape(partition(outer), partition(inner)), rows)


def format_trace(trace: Iterable[SlideRecord]) -> str:
    return "".join(rec.to_json() + "\n" for rec in trace)

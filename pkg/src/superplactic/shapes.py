"""Partitions, skew shapes and their corners.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  Cells are 1-based ``(row, col)``
pairs with row 1 on top.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import ParseError

Partition = tuple  # tuple[int, ...]
Cell = tuple  # tuple[int, int]


def partition(parts: Sequence[int]) -> Partition:
    """Normalize ``parts`` (strip trailing zeros) and check it is a partition."""
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    for i, v in enumerate(p):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"partition parts must be positive integers: {tuple(parts)}")
        if i and v > p[i - 1]:
            raise ValueError(f"not weakly decreasing: {tuple(parts)}")
    return tuple(p)


def is_partition(parts: Sequence[int]) -> bool:
    return all(v >= 1 for v in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def size(p: Partition) -> int:
    return sum(p)


def part(p: Partition, i: int) -> int:
    """``p_i`` for a 1-based row index, zero beyond the last part."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for v in p if v > j) for j in range(p[0]))


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff the diagram of ``mu`` lies inside the diagram of ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def add_box(p: Partition, row: int) -> Partition:
    q = list(p) + [0]
    if not 1 <= row <= len(q):
        raise ValueError(f"cannot add a box in row {row} of {p}")
    q[row - 1] += 1
    if row > 1 and q[row - 1] > q[row - 2]:
        raise ValueError(f"adding a box in row {row} of {p} breaks monotonicity")
    return partition(q)


def remove_box(p: Partition, row: int) -> Partition:
    if not 1 <= row <= len(p):
        raise ValueError(f"cannot remove a box from row {row} of {p}")
    q = list(p)
    q[row - 1] -= 1
    if row < len(q) and q[row - 1] < q[row]:
        raise ValueError(f"removing a box from row {row} of {p} breaks monotonicity")
    return partition(q)


def addable_rows(p: Partition) -> list[int]:
    return [i for i in range(1, len(p) + 2) if i == 1 or part(p, i) < part(p, i - 1)]


def removable_rows(p: Partition) -> list[int]:
    return [i for i in range(1, len(p) + 1) if part(p, i) > part(p, i + 1)]


def diagram(p: Partition) -> list[Cell]:
    return [(i, j) for i, v in enumerate(p, start=1) for j in range(1, v + 1)]


def diff_cell(small: Partition, big: Partition) -> Cell:
    """The unique cell of ``big`` not in ``small`` (sizes differ by one)."""
    for i in range(1, len(big) + 1):
        if part(big, i) != part(small, i):
            return (i, part(big, i))
    raise ValueError(f"{big} does not cover {small}")


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All ``mu`` contained in ``lam``."""

    def rec(i, bound):
        if i == len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i]), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rec(i + 1, v):
                    yield (v,) + rest

    yield from rec(0, lam[0] if lam else 0)


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition = ()

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape":
        lam, mu = partition(outer), partition(inner)
        if not contains(mu, lam):
            raise ValueError(f"{mu} is not contained in {lam}")
        return cls(lam, mu)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_bounds(self, i: int) -> tuple[int, int]:
        """``(mu_i, lam_i)`` for a 1-based row."""
        return part(self.inner, i), part(self.outer, i)

    def cells(self) -> list[Cell]:
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(part(self.inner, i) + 1, part(self.outer, i) + 1)
        ]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return part(self.inner, i) < j <= part(self.outer, i)

    def __str__(self):
        return format_skew(self)


def inner_corners(s: SkewShape) -> list[Cell]:
    """Cells of the inner diagram with no inner cell below or to the right."""
    mu = s.inner
    return [(i, mu[i - 1]) for i in removable_rows(mu)]


def outer_corners(s: SkewShape) -> list[Cell]:
    """Cells of the outer diagram with no cell of the frame below or to the right.

    These are the positions where a forward slide can end; an inner corner
    whose row and column are otherwise empty is both kinds of corner.
    """
    lam = s.outer
    return [(i, lam[i - 1]) for i in removable_rows(lam)]


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return partition([int(t) for t in text.split(",")])
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None


def format_skew(s: SkewShape) -> str:
    if not s.inner:
        return format_partition(s.outer)
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"


def parse_skew(text: str) -> SkewShape:
    outer, _, inner = text.strip().partition("/")
    lam, mu = parse_partition(outer), parse_partition(inner)
    if not contains(mu, lam):
        raise ParseError(f"inner shape {format_partition(mu)} is not inside {format_partition(lam)}")
    return SkewShape(lam, mu)

"""The super plactic congruence.

Two independent decision procedures live here: a breadth-first closure under
the signed Knuth relations, and comparison of insertion tableaux.  Their
agreement on all short words is the cross-section property.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

from .alphabet import Letter, Word
from .errors import BudgetExceeded
from .insertion import tableau_of_word
from .shapes import Partition, partition
from .tableau import col_ok, row_ok

DEFAULT_MAX_CLASS = 100_000
GREENE_MAX_LENGTH = 10


def _first_family(x: Letter, y: Letter, z: Letter) -> bool:
    # xzy ~ zxy
    return x <= y <= z and (x != y or y.parity == 0) and (y != z or y.parity == 1)


def _second_family(x: Letter, y: Letter, z: Letter) -> bool:
    # yxz ~ yzx
    return x <= y <= z and (x != y or y.parity == 1) and (y != z or y.parity == 0)


class RelationInstance(NamedTuple):
    position: int  # index of the first of the three letters
    kind: int  # 1 for xzy ~ zxy, 2 for yxz ~ yzx
    forward: bool  # True when rewriting the left-hand side into the right


def rewrites(word: Word):
    """Yield ``(RelationInstance, new_word)`` for every single relation step."""
    for p in range(len(word) - 2):
        a, b, c = word[p : p + 3]
        head, tail = word[:p], word[p + 3 :]
        if _first_family(a, c, b):  # a b c = x z y
            yield RelationInstance(p, 1, True), head + (b, a, c) + tail
        if _first_family(b, c, a):  # a b c = z x y
            yield RelationInstance(p, 1, False), head + (b, a, c) + tail
        if _second_family(b, a, c):  # a b c = y x z
            yield RelationInstance(p, 2, True), head + (a, c, b) + tail
        if _second_family(c, a, b):  # a b c = y z x
            yield RelationInstance(p, 2, False), head + (a, c, b) + tail


def knuth_neighbors(word: Word) -> set[Word]:
    return {w for _, w in rewrites(tuple(word))}


def congruence_class(word: Word, max_class_size: int = DEFAULT_MAX_CLASS) -> set[Word]:
    """All words reachable from ``word`` by the relations (BFS closure)."""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        for v in knuth_neighbors(queue.popleft()):
            if v not in seen:
                seen.add(v)
                if len(seen) > max_class_size:
                    raise BudgetExceeded(
                        f"congruence class exceeds {max_class_size} words"
                    )
                queue.append(v)
    return seen


def equivalent_bfs(w: Word, v: Word, max_class_size: int = DEFAULT_MAX_CLASS) -> bool:
    w, v = tuple(w), tuple(v)
    if len(w) != len(v) or sorted(w) != sorted(v):
        return False
    if w == v:
        return True
    seen = {w}
    queue = deque([w])
    while queue:
        for u in knuth_neighbors(queue.popleft()):
            if u == v:
                return True
            if u not in seen:
                seen.add(u)
                if len(seen) > max_class_size:
                    raise BudgetExceeded(f"congruence class exceeds {max_class_size} words")
                queue.append(u)
    return False


def equivalent(w: Word, v: Word) -> bool:
    """Decide the congruence by comparing insertion tableaux."""
    return tableau_of_word(tuple(w)) == tableau_of_word(tuple(v))


def _greene(word: Word, k: int, fits) -> int:
    if len(word) > GREENE_MAX_LENGTH:
        raise BudgetExceeded(
            f"Greene invariants are brute-forced only up to length {GREENE_MAX_LENGTH}"
        )
    if k <= 0 or not word:
        return 0
    k = min(k, len(word))
    n = len(word)

    @lru_cache(maxsize=None)
    def best(i: int, lasts: tuple) -> int:
        # lasts: sorted tuple of the current last letters of the k sequences,
        # None for a sequence that is still empty
        if i == n:
            return 0
        x = word[i]
        result = best(i + 1, lasts)  # leave x out
        tried = set()
        for s, last in enumerate(lasts):
            if last in tried:
                continue
            tried.add(last)
            if last is None or fits(last, x):
                nxt = lasts[:s] + (x,) + lasts[s + 1 :]
                nxt = tuple(sorted(nxt, key=lambda a: (a is None, a)))
                result = max(result, 1 + best(i + 1, nxt))
        return result

    return best(0, (None,) * k)


def greene_row(word: Word, k: int) -> int:
    """Largest total length of ``k`` disjoint row subsequences of ``word``."""
    return _greene(tuple(word), k, row_ok)


def greene_col(word: Word, k: int) -> int:
    """Largest total length of ``k`` disjoint column subsequences of ``word``."""
    return _greene(tuple(word), k, lambda prev, nxt: col_ok(nxt, prev))


def shape_from_greene(word: Word) -> Partition:
    word = tuple(word)
    parts = []
    prev = 0
    for k in range(1, len(word) + 1):
        cur = greene_row(word, k)
        if cur == prev:
            break
        parts.append(cur - prev)
        prev = cur
    return partition(parts)

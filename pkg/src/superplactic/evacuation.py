"""Super evacuation t -> t^op and its congruence-defined twin."""
from __future__ import annotations

from typing import Sequence

from .alphabet import Letter, SignedAlphabet, star_word
from .insertion import insert_left, insert_right, tableau_of_word
from .shapes import SkewShape, part
from .tableau import SkewTableau, read_row
from .taquin import forward_slide


def evacuate(t: SkewTableau, alphabet: SignedAlphabet) -> SkewTableau:
    """Evacuation over ``alphabet``; the result lives over ``alphabet.opposite()``.

    Repeatedly removes the top-left letter ``x``, slides the hole out and
    writes ``x*`` into the output frame at the cell that left the frame.
    """
    if not t.is_straight:
        raise ValueError("evacuation is defined on straight tableaux")
    out: dict = {}
    current = t
    while current.outer:
        x = current[(1, 1)]
        rows = (current.rows[0][1:],) + current.rows[1:]
        holed = SkewTableau(SkewShape(current.outer, (1,)), rows)
        current, vacated = forward_slide(holed, (1, 1))
        out[vacated] = alphabet.star(x)
    shape = t.shape
    rows = tuple(
        tuple(out[(i, j)] for j in range(1, part(shape.outer, i) + 1))
        for i in range(1, len(shape.outer) + 1)
    )
    return SkewTableau(shape, rows)


def opposite_via_congruence(t: SkewTableau, alphabet: SignedAlphabet) -> SkewTableau:
    """The tableau over the opposite alphabet whose reading is congruent to R_row(t)*."""
    return tableau_of_word(star_word(read_row(t), alphabet))


def duality_sides(t: SkewTableau, xs: Sequence[Letter], alphabet: SignedAlphabet):
    """Both sides of the left-insertion / evacuation duality for ``t`` and ``xs``."""
    left = t
    for x in xs:
        left = insert_left(x, left)
    opposite = alphabet.opposite()
    right = evacuate(t, alphabet)
    for x in xs:
        right = insert_right(right, alphabet.star(x))
    return left, evacuate(right, opposite)


def duality_check(t: SkewTableau, xs: Sequence[Letter], alphabet: SignedAlphabet) -> bool:
    left, right = duality_sides(t, xs, alphabet)
    return left == right

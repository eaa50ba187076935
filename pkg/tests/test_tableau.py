import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_parity_alphabets, skew_tableaux
from oracles import naive_fillings
from superplactic.alphabet import SignedAlphabet, format_word
from superplactic.errors import ParseError, TableauError
from superplactic.shapes import SkewShape, partitions_up_to, subpartitions
from superplactic.tableau import (
    enumerate_tableaux,
    format_tableau,
    from_chain,
    from_symbols,
    parse_tableau,
    read_col,
    read_row,
    standard_order,
    standard_tableaux,
    standardization_chain,
    standardize,
    validate,
)


def test_running_example_readings(sigma5):
    t = from_symbols(["1 1 2", "3 4 4", "5", "5"], sigma5)
    assert t.outer == (3, 3, 1, 1)
    assert format_word(read_row(t)) == "5 5 3 4 4 1 1 2"
    assert format_word(read_col(t)) == "5 5 3 1 4 1 4 2"


@pytest.mark.parametrize(
    "rows, cell, rule",
    [
        (["3 3"], (1, 2), "row"),  # 3 is odd: no repeat in a row
        (["1", "1"], (2, 1), "column"),  # 1 is even: no repeat in a column
        (["2 1"], (1, 2), "row"),
        (["2", "1"], (2, 1), "column"),
    ],
)
def test_validate_names_cell_and_rule(sigma5, rows, cell, rule):
    with pytest.raises(TableauError) as info:
        from_symbols(rows, sigma5)
    assert info.value.cell == cell
    assert info.value.rule == rule


def test_parity_rules(sigma5):
    from_symbols(["1 1 4 4"], sigma5)
    from_symbols(["3", "3", "5", "5"], sigma5)


def test_validate_length_mismatch(sigma5):
    with pytest.raises(TableauError) as info:
        validate(SkewShape.of((2,)), [[sigma5["1"]]])
    assert info.value.rule == "length"


def test_validate_foreign_letter(sigma5):
    other = SignedAlphabet.from_parities([0, 1, 1, 0, 1, 0])
    with pytest.raises(TableauError) as info:
        validate(SkewShape.of((1,)), [[other["6"]]], sigma5)
    assert info.value.rule == "letter"


def test_tbl_round_trip_skew(naturals):
    s = from_symbols(["2 2", "3", "3", "1 2", "5"], naturals, inner=(2, 2, 2))
    text = format_tableau(s)
    assert text == ". . 2 2\n. . 3\n. . 3\n1 2\n5\n"
    assert parse_tableau(text, naturals) == s


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2\n. . 3\n", None),  # inner shape larger than the frame
        ("1 2\n1 2\n", 2),  # 1 even, repeated in a column
        ("1 9\n", 1),
        ("1 . 2\n", 1),
        ("# header\n\n3 3\n", 3),
    ],
)
def test_parse_errors(sigma5, text, line):
    with pytest.raises(ParseError) as info:
        parse_tableau(text, sigma5, source="t.tbl")
    if line is not None:
        assert info.value.line == line


def test_enumeration_matches_naive_filter():
    for bits in itertools.product((0, 1), repeat=3):
        sigma = SignedAlphabet.from_parities(bits)
        for lam in partitions_up_to(4):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                ours = [tuple(x.rank for _, x in t.items()) for t in enumerate_tableaux(shape, sigma)]
                assert ours == sorted(ours)
                assert ours == naive_fillings(lam, mu, list(bits))


def test_enumeration_is_valid_and_distinct(sigma5):
    shape = SkewShape.of((3, 2), (1,))
    ts = list(enumerate_tableaux(shape, sigma5))
    assert len(set(ts)) == len(ts)
    for t in ts:
        assert validate(t.shape, t.rows, sigma5) == t


def test_standard_tableaux_count():
    # hook length formula: f^(3,2) = 5, f^(3,2,1) = 16
    assert len(list(standard_tableaux(SkewShape.of((3, 2))))) == 5
    assert len(list(standard_tableaux(SkewShape.of((3, 2, 1))))) == 16


def test_standardization_chain_of_example(naturals):
    s = from_symbols(["2 2", "3", "3", "1 2", "5"], naturals, inner=(2, 2, 2))
    chain = standardization_chain(s)
    assert chain[0] == s.inner and chain[-1] == s.outer
    assert all(sum(b) - sum(a) == 1 for a, b in zip(chain, chain[1:]))


def test_chain_ties(naturals):
    # even letters tie-break by column, odd letters by row
    s = from_symbols(["2 2"], naturals)
    assert standard_order(s) == [(1, 1), (1, 2)]
    t = from_symbols(["3", "3"], naturals)
    assert standard_order(t) == [(1, 1), (2, 1)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(all_parity_alphabets(3)), st.integers(0, 4), st.data())
def test_chain_round_trip(sigma, n, data):
    ts = list(skew_tableaux(sigma, n, max_frame=n + 2, min_cells=n))
    t = data.draw(st.sampled_from(ts))
    chain = standardization_chain(t)
    assert from_chain(chain, [t[c] for c in standard_order(t)]) == t
    std = standardize(t)
    assert sorted(x.rank for x in std.letters()) == list(range(len(t)))

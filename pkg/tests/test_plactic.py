import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_parity_alphabets, words
from oracles import greene_bruteforce
from superplactic.alphabet import SignedAlphabet
from superplactic.errors import BudgetExceeded
from superplactic.insertion import tableau_of_word
from superplactic.plactic import (
    congruence_class,
    equivalent,
    equivalent_bfs,
    greene_col,
    greene_row,
    knuth_neighbors,
    rewrites,
    shape_from_greene,
)
from superplactic.shapes import conjugate, part

alphabets = st.sampled_from(all_parity_alphabets(3))


def word_of(sigma, min_len=0, max_len=7):
    return st.lists(st.sampled_from(sigma.letters), min_size=min_len, max_size=max_len).map(tuple)


def test_relations_on_three_letters():
    # 1 even, 2 odd: 1 1 2 ~ ? and the x = y, y = z edge cases
    sigma = SignedAlphabet.from_parities([0, 1])
    one, two = sigma.letters
    # first family with x = y = 1 (even): x z y = 1 2 1 <-> z x y = 2 1 1
    assert (two, one, one) in knuth_neighbors((one, two, one))
    # second family with y = z = 2 would need 2 even; it is odd so 2 1 2 is not linked to 2 2 1
    assert (two, two, one) not in knuth_neighbors((two, one, two))
    # first family with y = z = 2 (odd): x z y = 1 2 2 <-> z x y = 2 1 2
    assert (two, one, two) in knuth_neighbors((one, two, two))


def test_rewrites_are_symmetric():
    for sigma in all_parity_alphabets(3):
        for w in words(sigma, 3):
            for inst, v in rewrites(w):
                assert w in knuth_neighbors(v)
                assert v != w


def test_relations_preserve_insertion():
    for sigma in all_parity_alphabets(3):
        for n in range(3, 6):
            for w in words(sigma, n):
                t = tableau_of_word(w)
                for v in knuth_neighbors(w):
                    assert tableau_of_word(v) == t


def test_running_example_equivalence(sigma5):
    w = sigma5.word("5 5 3 4 4 1 1 2")
    v = sigma5.word("5 5 3 1 4 1 4 2")
    assert equivalent(w, v)
    assert equivalent_bfs(w, v)


def test_bfs_rejects_different_content(sigma5):
    assert not equivalent_bfs(sigma5.word("1 2"), sigma5.word("1 3"))
    assert not equivalent_bfs(sigma5.word("1 2"), sigma5.word("1 2 3"))


def test_class_size_budget(sigma5):
    w = sigma5.word("5 4 3 2 1 5 4 3 2 1")
    with pytest.raises(BudgetExceeded):
        congruence_class(w, max_class_size=10)


def test_class_is_fibre_of_insertion():
    sigma = SignedAlphabet.from_parities([0, 1, 1])
    for w in words(sigma, 4):
        t = tableau_of_word(w)
        cls = congruence_class(w)
        assert all(tableau_of_word(v) == t for v in cls)
        fibre = {v for v in words(sigma, 4) if tableau_of_word(v) == t}
        assert cls == fibre


@settings(max_examples=120, deadline=None)
@given(alphabets.flatmap(lambda s: st.tuples(st.just(s), word_of(s, 0, 6), st.integers(1, 3))))
def test_greene_matches_bruteforce(case):
    sigma, w, k = case
    ranks = [x.rank for x in w]
    parity = [a.parity for a in sigma]
    assert greene_row(w, k) == greene_bruteforce(ranks, k, parity, "row")
    assert greene_col(w, k) == greene_bruteforce(ranks, k, parity, "col")


@settings(max_examples=300, deadline=None)
@given(alphabets.flatmap(lambda s: word_of(s, 0, 9)))
def test_greene_recovers_shape(w):
    lam = tableau_of_word(w).outer
    assert shape_from_greene(w) == lam
    lam_t = conjugate(lam)
    for k in range(1, 4):
        assert greene_row(w, k) == sum(part(lam, i) for i in range(1, k + 1))
        assert greene_col(w, k) == sum(part(lam_t, i) for i in range(1, k + 1))


def test_greene_running_example(sigma5):
    w = sigma5.word("5 5 3 4 4 1 1 2")
    assert [greene_row(w, k) for k in range(1, 5)] == [3, 6, 7, 8]
    assert [greene_col(w, k) for k in range(1, 4)] == [4, 6, 8]


def test_greene_budget(sigma5):
    with pytest.raises(BudgetExceeded):
        greene_row(sigma5.word("1 " * 11), 1)

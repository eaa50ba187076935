import itertools
import random

import pytest

from superplactic.alphabet import SignedAlphabet
from superplactic.shapes import SkewShape, partitions_up_to, subpartitions
from superplactic.tableau import enumerate_tableaux


def evens_even(n=9):
    """1 < 2 < ... < n with the even numbers of parity 0."""
    return SignedAlphabet.from_parities([(i + 1) % 2 for i in range(n)])


def all_parity_alphabets(n):
    return [SignedAlphabet.from_parities(bits) for bits in itertools.product((0, 1), repeat=n)]


def words(alphabet, length):
    return itertools.product(alphabet.letters, repeat=length)


def straight_tableaux(alphabet, max_size):
    for lam in partitions_up_to(max_size):
        yield from enumerate_tableaux(SkewShape(lam), alphabet)


def skew_tableaux(alphabet, max_cells, max_frame=None, min_cells=0):
    max_frame = max_cells if max_frame is None else max_frame
    for lam in partitions_up_to(max_frame):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu)
            if min_cells <= shape.size <= max_cells:
                yield from enumerate_tableaux(shape, alphabet)


@pytest.fixture
def sigma5():
    # the running example: 1<2<3<4<5 with 1, 2, 4 even
    return SignedAlphabet.from_parities([0, 0, 1, 0, 1])


@pytest.fixture
def naturals():
    return evens_even()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])

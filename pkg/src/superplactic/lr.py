"""Littlewood-Richardson coefficients from rectification fibres.

Everything is computed by enumerating skew tableaux and rectifying them, so
the sizes involved are bounded explicitly.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .alphabet import Letter, SignedAlphabet
from .errors import BudgetExceeded, InvariantViolation
from .insertion import product
from .shapes import Partition, SkewShape, contains, format_partition, partitions_of
from .tableau import EMPTY, SkewTableau, enumerate_tableaux
from .taquin import rectify

MAX_FRAME = 8
MAX_ALPHABET = 5

Monomial = tuple  # sorted tuple of (Letter, exponent)


def _check_budget(shape: SkewShape, alphabet: SignedAlphabet, max_frame=MAX_FRAME, max_alphabet=MAX_ALPHABET):
    if sum(shape.outer) > max_frame:
        raise BudgetExceeded(f"outer shape has more than {max_frame} boxes")
    if len(alphabet) > max_alphabet:
        raise BudgetExceeded(f"alphabet has more than {max_alphabet} letters")


class TableauSum:
    """Integer combination of super tableaux, multiplied through the insertion product."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[SkewTableau, int] = {}
        for t, c in dict(terms or {}).items():
            if c:
                self.terms[t] = c

    @classmethod
    def unit(cls):
        return cls({EMPTY: 1})

    @classmethod
    def of(cls, tableaux):
        return cls(Counter(tableaux))

    def __add__(self, other: "TableauSum") -> "TableauSum":
        out = Counter(self.terms)
        out.update(other.terms)
        return TableauSum(out)

    def __sub__(self, other: "TableauSum") -> "TableauSum":
        out = Counter(self.terms)
        out.subtract(other.terms)
        return TableauSum(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return TableauSum({t: c * other for t, c in self.terms.items()})
        out: Counter = Counter()
        for t, a in self.terms.items():
            for u, b in other.terms.items():
                out[product(t, u)] += a * b
        return TableauSum(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TableauSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def total(self) -> int:
        return sum(self.terms.values())

    def __repr__(self):
        return f"TableauSum({len(self.terms)} terms, total {self.total()})"


def rectification_fibers(shape: SkewShape, alphabet: SignedAlphabet) -> Counter:
    """For each rectified tableau, how many skew tableaux of ``shape`` rectify to it."""
    _check_budget(shape, alphabet)
    return Counter(rectify(s) for s in enumerate_tableaux(shape, alphabet))


def _coefficient(fibers: Counter, nu: Partition, alphabet: SignedAlphabet) -> int:
    counts = {fibers.get(t, 0) for t in enumerate_tableaux(SkewShape(nu), alphabet)}
    if len(counts) > 1:
        raise InvariantViolation(f"fibre sizes over shape {format_partition(nu)} vary: {sorted(counts)}")
    return counts.pop() if counts else 0


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, alphabet: SignedAlphabet) -> int:
    """Number of skew tableaux of shape lam/mu rectifying to any fixed tableau of shape nu."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    if sum(nu) != sum(lam) - sum(mu):
        return 0
    return _coefficient(rectification_fibers(SkewShape(lam, mu), alphabet), nu, alphabet)


def schur_sum(shape: SkewShape, alphabet: SignedAlphabet) -> TableauSum:
    """Sum of all tableaux of ``shape``; skew terms are replaced by their rectifications."""
    _check_budget(shape, alphabet)
    if shape.is_straight:
        return TableauSum.of(enumerate_tableaux(shape, alphabet))
    return TableauSum(rectification_fibers(shape, alphabet))


@dataclass
class LRReport:
    outer: Partition
    inner: Partition
    alphabet: SignedAlphabet
    coefficients: dict = field(default_factory=dict)  # nu -> c
    skew_count: int = 0
    shape_counts: dict = field(default_factory=dict)  # nu -> #T(alphabet, nu)

    def lines(self) -> list[str]:
        return [
            f"{format_partition(nu)} {c}"
            for nu, c in sorted(self.coefficients.items())
            if c
        ]

    def to_text(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def to_json(self) -> str:
        return json.dumps(
            {
                "lambda": list(self.outer),
                "mu": list(self.inner),
                "alphabet": [[a.symbol, a.parity] for a in self.alphabet],
                "skew_count": self.skew_count,
                "coefficients": [
                    {"nu": list(nu), "c": c, "tableaux": self.shape_counts[nu]}
                    for nu, c in sorted(self.coefficients.items())
                    if c
                ],
            }
        )


def verify_lr_identity(lam: Partition, mu: Partition, alphabet: SignedAlphabet) -> LRReport:
    """Check fibre constancy and the expansion of the skew sum into straight sums.

    Raises :class:`InvariantViolation` if any check fails.
    """
    shape = SkewShape(tuple(lam), tuple(mu))
    if not contains(shape.inner, shape.outer):
        raise ValueError(f"{mu} is not contained in {lam}")
    fibers = rectification_fibers(shape, alphabet)
    report = LRReport(shape.outer, shape.inner, alphabet, skew_count=sum(fibers.values()))
    expected: Counter = Counter()
    for nu in partitions_of(shape.size):
        straight = list(enumerate_tableaux(SkewShape(nu), alphabet))
        report.shape_counts[nu] = len(straight)
        c = _coefficient(fibers, nu, alphabet)
        report.coefficients[nu] = c
        for t in straight:
            expected[t] += c
    total = sum(c * report.shape_counts[nu] for nu, c in report.coefficients.items())
    if total != report.skew_count:
        raise InvariantViolation(f"{report.skew_count} skew tableaux but the expansion counts {total}")
    if TableauSum(fibers) != TableauSum(expected):
        raise InvariantViolation("skew sum differs from the expansion into straight sums")
    return report


def monomial(t: SkewTableau) -> Monomial:
    """Content of ``t`` as a sorted tuple of (letter, exponent)."""
    return tuple(sorted(Counter(t.letters()).items()))


def sum_to_polynomial(s: TableauSum) -> dict:
    out: Counter = Counter()
    for t, c in s.terms.items():
        out[monomial(t)] += c
    return {m: c for m, c in out.items() if c}


def polynomial_product(p: dict, q: dict) -> dict:
    """Product of two polynomials in the monomial-dict form used above."""
    out: Counter = Counter()
    for m, a in p.items():
        for n, b in q.items():
            merged = Counter(dict(m))
            merged.update(dict(n))
            out[tuple(sorted(merged.items()))] += a * b
    return {m: c for m, c in out.items() if c}


def format_monomial(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(a.symbol if e == 1 else f"{a.symbol}^{e}" for a, e in m)

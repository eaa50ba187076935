"""Finite signed alphabets, letters and words.

A letter carries its 0-based rank in the total order, a display symbol and a
parity in {0, 1}.  Letters compare by rank first, so within one alphabet the
tuple order is the alphabet order.  Words are plain tuples of letters.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError

STAR = "*"


class Letter(NamedTuple):
    rank: int
    symbol: str
    parity: int

    def __repr__(self):
        return self.symbol


Word = tuple  # tuple[Letter, ...]


def _starred(symbol: str) -> str:
    # (Σ^op)^op is identified with Σ by cancelling the star
    if symbol.endswith(STAR):
        return symbol[: -len(STAR)]
    return symbol + STAR


class SignedAlphabet:
    """A finite totally ordered alphabet with a parity for every letter."""

    __slots__ = ("letters", "_by_symbol")

    def __init__(self, letters: Iterable[tuple[str, int]]):
        built = []
        seen = {}
        for rank, (symbol, parity) in enumerate(letters):
            if not symbol or any(c.isspace() for c in symbol):
                raise ValueError(f"invalid symbol {symbol!r}")
            if parity not in (0, 1):
                raise ValueError(f"parity of {symbol!r} must be 0 or 1, got {parity!r}")
            if symbol in seen:
                raise ValueError(f"duplicate symbol {symbol!r}")
            letter = Letter(rank, symbol, parity)
            seen[symbol] = letter
            built.append(letter)
        self.letters: tuple[Letter, ...] = tuple(built)
        self._by_symbol = seen

    @classmethod
    def from_parities(cls, parities: Sequence[int], symbols: Sequence[str] | None = None):
        """Alphabet ``1 < 2 < ... < n`` (or the given symbols) with these parities."""
        if symbols is None:
            symbols = [str(i + 1) for i in range(len(parities))]
        return cls(zip(symbols, parities))

    @classmethod
    def standard(cls, n: int):
        """Labels ``1..n``, all of parity 0; used for recording tableaux."""
        return cls.from_parities([0] * n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, symbol: str) -> Letter:
        return self._by_symbol[symbol]

    def __contains__(self, item):
        if isinstance(item, Letter):
            return 0 <= item.rank < len(self.letters) and self.letters[item.rank] == item
        return item in self._by_symbol

    def __eq__(self, other):
        return isinstance(other, SignedAlphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        body = " < ".join(f"{a.symbol}:{a.parity}" for a in self.letters)
        return f"SignedAlphabet({body})"

    @property
    def even(self) -> tuple[Letter, ...]:
        return tuple(a for a in self.letters if a.parity == 0)

    @property
    def odd(self) -> tuple[Letter, ...]:
        return tuple(a for a in self.letters if a.parity == 1)

    def word(self, text: str | Iterable[str]) -> Word:
        """Parse whitespace-separated symbol tokens into a word."""
        tokens = text.split() if isinstance(text, str) else list(text)
        try:
            return tuple(self._by_symbol[tok] for tok in tokens)
        except KeyError as exc:
            raise ParseError(f"unknown symbol {exc.args[0]!r}") from None

    def star(self, letter: Letter) -> Letter:
        """The letter of the opposite alphabet corresponding to ``letter``."""
        n = len(self.letters)
        return Letter(n - 1 - letter.rank, _starred(letter.symbol), letter.parity)

    def opposite(self) -> "SignedAlphabet":
        """Same letters in reversed order, each starred, parities kept."""
        return SignedAlphabet((_starred(a.symbol), a.parity) for a in reversed(self.letters))


def star_word(word: Word, alphabet: SignedAlphabet) -> Word:
    """``x_1...x_k`` over the alphabet to ``x_k*...x_1*`` over its opposite."""
    return tuple(alphabet.star(x) for x in reversed(word))


def degree(word: Iterable[Letter]) -> int:
    """Z2-degree: sum of letter parities mod 2."""
    return sum(x.parity for x in word) % 2


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(x.symbol for x in word)


def parse_alphabet(text: str, source: str | None = None) -> SignedAlphabet:
    """Parse the SIGMA format: one ``<symbol> <0|1>`` per line, in order.

    Lines starting with ``#`` are comments and blank lines are skipped.
    """
    entries = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected '<symbol> <0|1>', got {line!r}", lineno, source)
        symbol, parity = fields
        if parity not in ("0", "1"):
            raise ParseError(f"parity must be 0 or 1, got {parity!r}", lineno, source)
        if symbol in seen:
            raise ParseError(
                f"duplicate symbol {symbol!r} (first on line {seen[symbol]})", lineno, source
            )
        seen[symbol] = lineno
        entries.append((symbol, int(parity)))
    if not entries:
        raise ParseError("alphabet is empty", None, source)
    return SignedAlphabet(entries)


def format_alphabet(alphabet: SignedAlphabet) -> str:
    return "".join(f"{a.symbol} {a.parity}\n" for a in alphabet)

"""Words over integer letters: correlations and forbidden-factor lists.

A composition is treated as a word whose letters are its parts.  The
correlation of one word on another records, for every right-aligned left
shift, whether the overlapping blocks agree; correlation polynomials turn
those bits into series and are the combinatorial core of factor-avoidance
counting.

Letters are allowed to be zero here so that correlations of arbitrary
integer words can be computed; forbidden lists and all counting operations
require strictly positive letters, since composition parts are >= 1.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidWordError, ReducednessError
from .series import Series

__all__ = [
    "Word",
    "CorrelationVector",
    "ForbiddenList",
    "correlation_vector",
    "correlation_polynomial",
    "is_factor",
    "is_reduced",
    "make_forbidden_list",
    "parse_word_list",
]


@dataclass(frozen=True, order=True)
class Word:
    """A nonempty sequence of integer letters.

    ``weight`` is the sum of the letters and ``length`` their number; for a
    composition these are the integer being composed and its number of
    parts.
    """

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        if not letters:
            raise InvalidWordError("a word must have at least one letter")
        for a in letters:
            if not isinstance(a, int) or a < 0:
                raise InvalidWordError(f"letters must be nonnegative integers, got {a!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse a space-separated word such as "1 1 2"."""
        try:
            return cls(tuple(int(piece) for piece in text.split()))
        except ValueError as exc:
            raise InvalidWordError(f"cannot parse word {text!r}: {exc}") from exc

    @property
    def weight(self) -> int:
        return sum(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


@dataclass(frozen=True)
class CorrelationVector:
    """Bit j says whether the words agree when the second is shifted j places left."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if not bits or any(b not in (0, 1) for b in bits):
            raise ValueError(f"correlation bits must be a nonempty 0/1 sequence, got {bits!r}")
        object.__setattr__(self, "bits", bits)

    def is_zero(self) -> bool:
        return not any(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def correlation_vector(x: Word, y: Word) -> CorrelationVector:
    """Correlation of ``x`` on ``y``; the vector has one bit per letter of ``x``.

    Align the words at their right ends and slide ``y`` left by j places.
    With t = len(x) - j letters of x remaining above y: if t <= len(y) the
    bit compares the length-t prefix of x against the length-t suffix of y;
    otherwise y sits strictly inside x and must match the block of x it
    covers.
    """
    xl, yl = x.letters, y.letters
    m, my = len(xl), len(yl)
    bits = []
    for j in range(m):
        t = m - j
        if t <= my:
            bits.append(1 if xl[:t] == yl[my - t:] else 0)
        else:
            bits.append(1 if yl == xl[t - my:t] else 0)
    return CorrelationVector(tuple(bits))


def correlation_polynomial(x: Word, y: Word, max_weight: int) -> Series:
    """Series with a term x^(weight of the last j letters of x) * q^j per set bit j."""
    bits = correlation_vector(x, y).bits
    terms: dict[tuple[int, int], int] = {}
    suffix_weight = 0
    for j, bit in enumerate(bits):
        if bit:
            terms[suffix_weight, j] = 1
        suffix_weight += x.letters[len(x.letters) - 1 - j]
    return Series(max_weight, terms)


def is_factor(u: Word, v: Word) -> bool:
    """True when the letters of ``u`` occur contiguously inside ``v``."""
    ul, vl = u.letters, v.letters
    m = len(ul)
    return any(vl[i:i + m] == ul for i in range(len(vl) - m + 1))


def is_reduced(words: Sequence[Word]) -> bool:
    """No word of the list occurs as a factor of a different entry.

    A word is a factor of itself, so a duplicated entry makes the list
    non-reduced.
    """
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if i != j and is_factor(u, v):
                return False
    return True


@dataclass(frozen=True)
class ForbiddenList:
    """A validated reduced list of forbidden factors.

    ``easy_case`` is true when every pair of distinct entries has an
    all-zero correlation vector, which makes the avoidance system sparse
    enough for the explicit closed form.  Build instances through
    :func:`make_forbidden_list`, which establishes both invariants.
    """

    words: tuple[Word, ...]
    easy_case: bool

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __str__(self) -> str:
        return ";".join(str(w) for w in self.words)


def make_forbidden_list(words: Iterable[Word]) -> ForbiddenList:
    """Validate reducedness and positivity, then classify the list."""
    ws = tuple(words)
    if not ws:
        raise InvalidWordError("a forbidden list must contain at least one word")
    for w in ws:
        if any(a < 1 for a in w.letters):
            raise InvalidWordError(f"forbidden word '{w}' must use letters >= 1")
    for i, u in enumerate(ws):
        for j, v in enumerate(ws):
            if i != j and is_factor(u, v):
                raise ReducednessError(f"list is not reduced: '{u}' is a factor of '{v}'")
    easy = all(correlation_vector(u, v).is_zero()
               for i, u in enumerate(ws) for j, v in enumerate(ws) if i != j)
    return ForbiddenList(ws, easy)


def parse_word_list(text: str) -> list[Word]:
    """Parse a ";"-separated list of words such as "1 1;2 2;3 3"."""
    pieces = text.split(";")
    if not any(piece.strip() for piece in pieces):
        raise InvalidWordError(f"cannot parse word list {text!r}: no words found")
    return [Word.parse(piece) for piece in pieces]

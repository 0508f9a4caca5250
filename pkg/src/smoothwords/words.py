"""Core value types: alphabets, finite words, run factorizations, parity counts.

Words live over a two-letter alphabet {a, b} of positive integers with a < b.
Letters are stored as raw byte values, which keeps equality, ordering, slicing
and letter counting at C speed; everything layered on top stays immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Iterable, NamedTuple, Union


class Parity(enum.Enum):
    """Parity class of an alphabet: both letters even, both odd, or mixed."""

    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


@dataclass(frozen=True)
class Alphabet:
    """Ordered two-letter integer alphabet {a, b} with 1 <= a < b."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise ValueError("alphabet letters must be integers")
        if not 1 <= self.a < self.b <= 255:
            raise ValueError(f"need 1 <= a < b <= 255, got a={self.a}, b={self.b}")

    @property
    def parity(self) -> Parity:
        if self.a % 2 == 0 and self.b % 2 == 0:
            return Parity.EVEN
        if self.a % 2 == 1 and self.b % 2 == 1:
            return Parity.ODD
        return Parity.MIXED

    def other(self, letter: int) -> int:
        """The complementary letter."""
        if letter == self.a:
            return self.b
        if letter == self.b:
            return self.a
        raise ValueError(f"letter {letter} not in alphabet {self}")

    @cached_property
    def _swap_table(self) -> bytes:
        return bytes.maketrans(bytes([self.a, self.b]), bytes([self.b, self.a]))

    def word(self, letters: Union[str, bytes, Iterable[int]] = b"") -> "Word":
        """Build a word; accepts rendered text, bytes, or an iterable of letters."""
        if isinstance(letters, str):
            return Word(self, _parse_text(self, letters))
        if isinstance(letters, Word):
            letters = letters.letters
        return Word(self, bytes(letters))

    def empty(self) -> "Word":
        return Word(self, b"")

    def render_letter(self, letter: int) -> str:
        return str(letter)

    def __str__(self) -> str:
        return f"{{{self.a},{self.b}}}"


def _parse_text(alphabet: Alphabet, text: str) -> bytes:
    text = text.strip()
    if not text:
        return b""
    if "," in text:
        parts = text.split(",")
    elif alphabet.b < 10:
        parts = list(text)
    else:
        # Single token without commas: a lone letter like "12" is ambiguous
        # unless it parses as one letter of the alphabet.
        parts = [text]
    return bytes(int(p) for p in parts)


class Run(NamedTuple):
    """One maximal block: `exponent` copies of `letter`."""

    letter: int
    exponent: int

    def render(self) -> str:
        return f"{self.letter}^{self.exponent}"


@dataclass(frozen=True)
class RunFactorization:
    """Canonical factorization of a word into maximal single-letter runs.

    Adjacent runs carry distinct letters and every exponent is positive;
    the factorized length is the number of runs.
    """

    runs: tuple[Run, ...]

    def __len__(self) -> int:
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __getitem__(self, i):
        return self.runs[i]

    def exponents(self) -> tuple[int, ...]:
        return tuple(r.exponent for r in self.runs)

    def letters(self) -> tuple[int, ...]:
        return tuple(r.letter for r in self.runs)

    def reconstruct(self, alphabet: Alphabet) -> "Word":
        return Word(alphabet, _runs_to_bytes(self.runs))

    def render(self) -> str:
        return "·".join(r.render() for r in self.runs)


def _runs_to_bytes(runs: Iterable[Run]) -> bytes:
    return b"".join(bytes([letter]) * exp for letter, exp in runs)


def _bytes_runs(letters: bytes) -> list[tuple[int, int]]:
    """Run-length encode a byte string into (letter, exponent) pairs."""
    return [(letter, len(list(grp))) for letter, grp in groupby(letters)]


class ParityCountVector(NamedTuple):
    """Letter counts split by 1-based position parity.

    `a_odd` counts the smaller letter at positions 1, 3, 5, ... and `a_even`
    at positions 2, 4, 6, ...; same for the larger letter.  Matrix recurrences
    use the fixed component order (a_even, a_odd, b_even, b_odd).
    """

    a_even: int
    a_odd: int
    b_even: int
    b_odd: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)


@dataclass(frozen=True)
class Word:
    """An immutable finite word over a two-letter integer alphabet."""

    alphabet: Alphabet
    letters: bytes

    def __post_init__(self):
        ok = {self.alphabet.a, self.alphabet.b}
        if any(x not in ok for x in self.letters):
            bad = next(x for x in self.letters if x not in ok)
            raise ValueError(f"letter {bad} not in alphabet {self.alphabet}")

    # -- basic sequence behaviour ------------------------------------

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item) -> "Word | int":
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.letters < other.letters

    def __le__(self, other: "Word") -> bool:
        return self.letters <= other.letters

    def extended(self, letter: int) -> "Word":
        return Word(self.alphabet, self.letters + bytes([letter]))

    def count(self, letter: int) -> int:
        return self.letters.count(letter)

    def is_prefix_of(self, other: "Word") -> bool:
        return other.letters.startswith(self.letters)

    # -- structure ----------------------------------------------------

    @cached_property
    def runs(self) -> RunFactorization:
        """Canonical run factorization, computed once per word."""
        return RunFactorization(tuple(Run(l, e) for l, e in _bytes_runs(self.letters)))

    @property
    def factorized_length(self) -> int:
        return len(self.runs)

    def complement(self) -> "Word":
        """Swap the two letters everywhere."""
        return Word(self.alphabet, self.letters.translate(self.alphabet._swap_table))

    def reversal(self) -> "Word":
        return Word(self.alphabet, self.letters[::-1])

    def parity_counts(self) -> ParityCountVector:
        """Letter counts split by 1-based position parity."""
        odd = self.letters[0::2]
        even = self.letters[1::2]
        return ParityCountVector(
            a_even=even.count(self.alphabet.a),
            a_odd=odd.count(self.alphabet.a),
            b_even=even.count(self.alphabet.b),
            b_odd=odd.count(self.alphabet.b),
        )

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        """Canonical text form: digit string when both letters are below 10,
        comma-separated otherwise."""
        if not self.letters:
            return ""
        if self.alphabet.b < 10:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)

    def render_runs(self) -> str:
        return self.runs.render()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.alphabet}, '{self.render()}')"

"""Self-reading generators for infinite smooth words.

The generalized Kolakoski word over {a, b} starting with a chosen letter is
its own run-length encoding: a read cursor walks the emitted letters and each
value read becomes the exponent of the next run, with run letters
alternating.  When the read cursor catches up with the write position the
exponent is the letter about to be written, which is the unique
self-consistent choice; this is what lets fixed points starting with the
smaller letter bootstrap.

Coupled pairs generalize this: two words x and y where the run exponents of
x spell out y and vice versa.  Over {1, b} with b odd and seeds x starting
with 1, y starting with b, the two streams determine each other; the
generator keeps x far enough ahead that y never starves (checked, not
assumed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import ConstructionError, SmoothWordsError
from .smoothness import _is_r_smooth_bytes, is_r_smooth
from .words import Alphabet, Word, _bytes_runs


def _kappa_letters(alphabet: Alphabet, start: int) -> Iterator[int]:
    """Endless letters of the self-reading fixed point starting with `start`."""
    seq = bytearray()
    letter = start
    read = 0
    while True:
        exp = seq[read] if read < len(seq) else letter
        read += 1
        for _ in range(exp):
            seq.append(letter)
            yield letter
        letter = alphabet.other(letter)


def kappa_prefix(alphabet: Alphabet, length: int, start: Optional[int] = None) -> Word:
    """Length-n prefix of the self-reading fixed point.

    `start` defaults to the larger letter, the classical convention.
    """
    if start is None:
        start = alphabet.b
    if start not in (alphabet.a, alphabet.b):
        raise ValueError(f"start letter {start} not in {alphabet}")
    gen = _kappa_letters(alphabet, start)
    return Word(alphabet, bytes(next(gen) for _ in range(length)))


class _CoupledState:
    """Shared buffers for a coupled pair of self-reading words.

    x starts with 1 and reads its exponents off y; y starts with b and reads
    off x.  Runs are primed from the seeds: x opens with 1^b because y's
    first letter is b, and y opens with b^1 because x's first letter is 1.
    """

    def __init__(self, alphabet: Alphabet):
        if alphabet.a != 1 or alphabet.b % 2 == 0 or alphabet.b < 3:
            raise ValueError(
                f"coupled pair needs alphabet {{1, b}} with odd b >= 3, got {alphabet}"
            )
        self.alphabet = alphabet
        b = alphabet.b
        self.x = bytearray([1] * b)
        self.y = bytearray([b])
        self.x_runs = 1  # runs emitted so far, also the next read index
        self.y_runs = 1

    def _emit_y_run(self) -> None:
        j = self.y_runs
        if j >= len(self.x):
            # The seeds keep x ahead of y's read cursor; reaching this line
            # means the invariant broke.
            raise ConstructionError("coupled generator starved: y needs unseen x letters")
        exp = self.x[j]
        letter = self.alphabet.b if j % 2 == 0 else 1
        self.y += bytes([letter]) * exp
        self.y_runs += 1

    def _emit_x_run(self) -> None:
        i = self.x_runs
        while len(self.y) <= i:
            self._emit_y_run()
        exp = self.y[i]
        letter = self.alphabet.b if i % 2 == 1 else 1
        self.x += bytes([letter]) * exp
        self.x_runs += 1

    def ensure(self, n: int) -> None:
        while len(self.x) < n:
            self._emit_x_run()
        while len(self.y) < n:
            self._emit_y_run()


def coupled_pair_prefix(alphabet: Alphabet, length: int) -> tuple[Word, Word]:
    """Length-n prefixes of the coupled pair (x, y) seeded by (1, b)."""
    state = _CoupledState(alphabet)
    state.ensure(length)
    return (
        Word(alphabet, bytes(state.x[:length])),
        Word(alphabet, bytes(state.y[:length])),
    )


def build_smooth_from_r(seed: Word, length: int) -> Word:
    """Extend an r-smooth seed to the requested length, one letter at a time.

    Each step appends the lexicographically smallest letter keeping the word
    r-smooth; extendability of the language guarantees one always exists.
    """
    ab = seed.alphabet
    if not is_r_smooth(seed):
        raise ValueError(f"seed {seed.render()!r} is not r-smooth")
    cur = seed.letters
    while len(cur) < length:
        for c in (ab.a, ab.b):
            cand = cur + bytes([c])
            if _is_r_smooth_bytes(cand, ab.a, ab.b):
                cur = cand
                break
        else:
            raise ConstructionError(
                f"no r-smooth extension of {cur!r}; extendability violated"
            )
    return Word(ab, cur)


def check_smooth_depth(prefix: Word, depth: int) -> bool:
    """Can `prefix` survive `depth` derivation steps as an infinite-word prefix?

    At each step the final run is incomplete evidence: it is dropped unless
    its visible exponent already exceeds b, which is disqualifying on its
    own.  Every completed run must carry an exponent in {a, b}.  Running out
    of letters before `depth` steps counts as failure: the prefix is too
    short to certify that depth.
    """
    ab = prefix.alphabet
    a, b = ab.a, ab.b
    cur = prefix.letters
    for _ in range(depth):
        runs = _bytes_runs(cur)
        if not runs:
            return False
        last_exp = runs[-1][1]
        if last_exp > b:
            return False
        body = runs[:-1]
        if any(e != a and e != b for _, e in body):
            return False
        cur = bytes(e for _, e in body)
    return True


@dataclass
class SmoothStream:
    """Stateful letter stream over an alphabet, materialized lazily.

    Kinds: 'kappa' (self-reading fixed point, params: start letter),
    'coupled_x' / 'coupled_y' (one side of the coupled pair), and
    'greedy_r' (lexicographically smallest r-smooth extension of a seed).
    """

    alphabet: Alphabet
    kind: str
    start: Optional[int] = None
    seed: Optional[Word] = None
    _buffer: bytearray = field(default_factory=bytearray, repr=False)
    _source: Optional[Iterator[int]] = field(default=None, repr=False)
    _coupled: Optional[_CoupledState] = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind == "kappa":
            start = self.start if self.start is not None else self.alphabet.b
            self._source = _kappa_letters(self.alphabet, start)
        elif self.kind in ("coupled_x", "coupled_y"):
            self._coupled = _CoupledState(self.alphabet)
        elif self.kind == "greedy_r":
            if self.seed is None:
                self.seed = self.alphabet.empty()
            if not is_r_smooth(self.seed):
                raise ValueError("greedy stream seed must be r-smooth")
            self._buffer = bytearray(self.seed.letters)
        else:
            raise SmoothWordsError(f"unknown stream kind {self.kind!r}")

    def _extend_to(self, n: int) -> None:
        if self.kind == "kappa":
            while len(self._buffer) < n:
                self._buffer.append(next(self._source))
        elif self._coupled is not None:
            self._coupled.ensure(n)
            side = self._coupled.x if self.kind == "coupled_x" else self._coupled.y
            self._buffer = bytearray(side[:max(n, len(self._buffer))])
        else:
            if len(self._buffer) < n:
                w = build_smooth_from_r(
                    Word(self.alphabet, bytes(self._buffer)), n
                )
                self._buffer = bytearray(w.letters)

    def prefix(self, n: int) -> Word:
        """The first n letters as a word."""
        self._extend_to(n)
        return Word(self.alphabet, bytes(self._buffer[:n]))

    def prefix_is_r_smooth(self, n: int) -> bool:
        """On-demand check that the first n letters form an r-smooth word."""
        return _is_r_smooth_bytes(
            self.prefix(n).letters, self.alphabet.a, self.alphabet.b
        )

"""Bispecial words of the f-smooth language, their trees, and complexity.

A word u is bispecial when both letters extend it on each side inside the
language.  Its multiplicity is the number of two-sided extensions x u y in
the language minus three, and lies in {-1, 0, +1} (weak, neutral, strong).

Long bispecial words derive to bispecial words of the same multiplicity, so
every one reduces to a short root.  The strong roots are the empty word and,
when a < b - 1, a^a and b^a; the weak roots (a < b - 1 only) are a^(b-1) and
b^(b-1).  Growing each root with the two primitive constructors yields five
complete binary trees whose level populations drive the factor complexity of
the whole language through second differences.

Level statistics are computed two ways: materializing the words, or walking
exact parity-count states (possible when both letters share a parity, since
the child counts are then a linear function of the parent state).  The two
routes are cross-checked in the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InvalidFamilyError, ResourceCapError
from .smoothness import (
    _is_f_smooth_bytes,
    enumerate_f_smooth,
    left_extensions,
    right_extensions,
)
from .words import Alphabet, Parity, Word

FAMILIES = ("T", "T1", "T2", "T3", "T4")
DEFAULT_GENERATION_CAP = 20
MATERIALIZE_LETTER_LIMIT = 80_000_000


# -- primitives -----------------------------------------------------------


def _primitive_bytes(letters: bytes, first: int, boundary: int, second: int) -> bytes:
    """Runs alternating first, second, first, ... with exponents
    boundary, letters..., boundary."""
    out = bytearray(bytes([first]) * boundary)
    letter = second
    for e in letters:
        out += bytes([letter]) * e
        letter = first if letter == second else second
    out += bytes([letter]) * boundary
    return bytes(out)


def primitive(word: Word, first_letter: int) -> Word:
    """Shortest word starting with `first_letter` whose derivative is `word`.

    Runs alternate from the chosen letter and carry exponents a, then the
    letters of `word`, then a.  The two-sided derivative inverts it exactly.
    """
    ab = word.alphabet
    if first_letter not in (ab.a, ab.b):
        raise ValueError(f"letter {first_letter} not in {ab}")
    return Word(
        ab,
        _primitive_bytes(word.letters, first_letter, ab.a, ab.other(first_letter)),
    )


# -- bispecial probes -----------------------------------------------------


def is_bispecial(word: Word) -> bool:
    """Both letters extend the word on each side within the language."""
    return len(left_extensions(word)) == 2 and len(right_extensions(word)) == 2


def multiplicity(word: Word) -> int:
    """Two-sided extension count minus three; defined for bispecial words."""
    if not is_bispecial(word):
        raise ValueError(f"{word.render()!r} is not bispecial")
    ab = word.alphabet
    count = 0
    for x in (ab.a, ab.b):
        for y in (ab.a, ab.b):
            probe = bytes([x]) + word.letters + bytes([y])
            if _is_f_smooth_bytes(probe, ab.a, ab.b):
                count += 1
    return count - 3


def classify_short_bispecials(alphabet: Alphabet) -> list[tuple[Word, str]]:
    """Probe every short word c^n, 0 <= n <= b, and label it.

    Labels are 'strong', 'neutral', 'weak', or 'not-bispecial'.  The empty
    word appears once.
    """
    labels = {1: "strong", 0: "neutral", -1: "weak"}
    out: list[tuple[Word, str]] = []
    for n in range(alphabet.b + 1):
        letters = [alphabet.a] if n == 0 else [alphabet.a, alphabet.b]
        for c in letters:
            w = Word(alphabet, bytes([c]) * n)
            if not is_bispecial(w):
                out.append((w, "not-bispecial"))
            else:
                out.append((w, labels[multiplicity(w)]))
    return out


def bispecial_multiplicity_sum(alphabet: Alphabet, n: int, *, cap: int = 64) -> int:
    """Sum of multiplicities over all bispecial words of length n."""
    total = 0
    for w in enumerate_f_smooth(alphabet, n, cap=cap):
        if is_bispecial(w):
            total += multiplicity(w)
    return total


# -- tree families --------------------------------------------------------


@dataclass(frozen=True)
class BispecialNode:
    """A vertex of a bispecial tree family."""

    word: Word
    family: str
    generation: int
    multiplicity: int


def family_root(alphabet: Alphabet, family: str) -> Word:
    if family not in FAMILIES:
        raise InvalidFamilyError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family != "T" and alphabet.a == alphabet.b - 1:
        raise InvalidFamilyError(
            f"family {family} does not exist over {alphabet}: "
            "only the empty-rooted tree when the letters are consecutive"
        )
    a, b = alphabet.a, alphabet.b
    roots = {
        "T": b"",
        "T1": bytes([a]) * a,
        "T2": bytes([b]) * a,
        "T3": bytes([a]) * (b - 1),
        "T4": bytes([b]) * (b - 1),
    }
    return Word(alphabet, roots[family])


def family_multiplicity(family: str) -> int:
    return -1 if family in ("T3", "T4") else 1


def _estimated_letters(alphabet: Alphabet, root_len: int, generation: int) -> float:
    a, b = alphabet.a, alphabet.b
    scale = root_len + 4 * a / (a + b - 2)
    return (2 ** generation) * scale * ((a + b) / 2) ** generation


def _generation_levels(alphabet: Alphabet, family: str, generation: int,
                       generation_cap: int):
    """Yield materialized levels 0..generation, each a list of byte strings."""
    if generation > generation_cap:
        raise ResourceCapError(
            f"generation {generation} above cap {generation_cap}; "
            "pass a larger cap explicitly"
        )
    if _estimated_letters(alphabet, len(family_root(alphabet, family)), generation) \
            > MATERIALIZE_LETTER_LIMIT:
        raise ResourceCapError(
            f"materializing generation {generation} of {family} over {alphabet} "
            "would exceed the letter budget; use the state-based statistics"
        )
    a, b = alphabet.a, alphabet.b
    level = [family_root(alphabet, family).letters]
    yield level
    for _ in range(generation):
        nxt = []
        for w in level:
            nxt.append(_primitive_bytes(w, a, a, b))
            nxt.append(_primitive_bytes(w, b, a, a))
        level = nxt
        yield level


def tree_generation(alphabet: Alphabet, family: str, generation: int, *,
                    generation_cap: int = DEFAULT_GENERATION_CAP,
                    verify: bool = False) -> list[BispecialNode]:
    """All vertices at the given depth, sorted, as BispecialNode values.

    With verify=True every node is re-probed for bispecial-ness and its
    multiplicity checked against the family's; meant for tests, off by
    default because the probes dwarf the tree construction.
    """
    for level in _generation_levels(alphabet, family, generation, generation_cap):
        pass
    mult = family_multiplicity(family)
    nodes = [
        BispecialNode(Word(alphabet, w), family, generation, mult)
        for w in sorted(level)
    ]
    if verify:
        for node in nodes:
            if not is_bispecial(node.word) or multiplicity(node.word) != mult:
                raise AssertionError(
                    f"tree vertex {node.word.render()!r} is not a multiplicity "
                    f"{mult} bispecial word"
                )
    return nodes


# -- level statistics -----------------------------------------------------


@dataclass(frozen=True)
class GenerationStats:
    """Length statistics of one tree level."""

    family: str
    generation: int
    count: int
    min_len: int
    max_len: int
    total_len: int
    histogram: dict[int, int]


def _child_letter_counts(state: tuple[int, int, int, int], a: int, b: int
                         ) -> tuple[int, int]:
    """Letter counts of the a-rooted child from the parent's parity counts."""
    a_even, a_odd, b_even, b_odd = state
    parity = (a_even + a_odd + b_even + b_odd) & 1
    interior_odd = a * a_odd + b * b_odd
    interior_even = a * a_even + b * b_even
    count_b = interior_odd + (a if parity == 0 else 0)
    count_a = a + interior_even + (a if parity == 1 else 0)
    return count_a, count_b


def _state_child_a(state: tuple[int, int, int, int], a: int, b: int,
                   parity_class: Parity) -> tuple[int, int, int, int]:
    """Parity counts of the a-rooted child, exact for single-parity alphabets.

    Odd letters: every run of the child starts at a position of known parity,
    which gives an affine recurrence on the four counts (the constant depends
    on the parent's length parity).  Even letters: all runs of the child have
    even length, so each parity class receives exactly half of each letter.
    """
    ae, ao, be, bo = state
    if parity_class is Parity.ODD:
        dam, dap = (a - 1) // 2, (a + 1) // 2
        dbm, dbp = (b - 1) // 2, (b + 1) // 2
        if (ae + ao + be + bo) % 2 == 0:
            return (
                dam * ae + dbm * be + dam,
                dap * ae + dbp * be + dap,
                dap * ao + dbp * bo + dap,
                dam * ao + dbm * bo + dam,
            )
        return (
            dam * ae + dbm * be + (a - 1),
            dap * ae + dbp * be + (a + 1),
            dap * ao + dbp * bo,
            dam * ao + dbm * bo,
        )
    if parity_class is Parity.EVEN:
        ca, cb = _child_letter_counts(state, a, b)
        return (ca // 2, ca // 2, cb // 2, cb // 2)
    raise ValueError("state recurrence needs both letters of one parity")


def _stats_by_state(alphabet: Alphabet, family: str, generation: int) -> Counter:
    """Length histogram of a level via parity-count states, no words built."""
    parity_class = alphabet.parity
    root = family_root(alphabet, family)
    states = Counter({root.parity_counts().as_tuple(): 1})
    a, b = alphabet.a, alphabet.b
    for _ in range(generation):
        nxt: Counter = Counter()
        for state, mult in states.items():
            ca = _state_child_a(state, a, b, parity_class)
            nxt[ca] += mult
            nxt[(ca[2], ca[3], ca[0], ca[1])] += mult  # complemented sibling
        states = nxt
    hist: Counter = Counter()
    for state, mult in states.items():
        hist[sum(state)] += mult
    return hist


def _stats_by_words(alphabet: Alphabet, family: str, generation: int,
                    generation_cap: int) -> Counter:
    for level in _generation_levels(alphabet, family, generation, generation_cap):
        pass
    return Counter(len(w) for w in level)


def generation_stats(alphabet: Alphabet, family: str, generation: int, *,
                     method: str = "auto",
                     generation_cap: int = DEFAULT_GENERATION_CAP) -> GenerationStats:
    """Level statistics, via 'words', 'state', or 'auto' dispatch.

    'auto' walks exact parity-count states when both letters share a parity
    and materializes words otherwise (mixed parity breaks the recurrence).
    """
    if generation > generation_cap:
        raise ResourceCapError(
            f"generation {generation} above cap {generation_cap}; "
            "pass a larger cap explicitly"
        )
    if method == "auto":
        method = "words" if alphabet.parity is Parity.MIXED else "state"
    if method == "state":
        if alphabet.parity is Parity.MIXED:
            raise ValueError(
                "state-based statistics need both letters of one parity; "
                "use method='words'"
            )
        hist = _stats_by_state(alphabet, family, generation)
    elif method == "words":
        hist = _stats_by_words(alphabet, family, generation, generation_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    total = sum(length * mult for length, mult in hist.items())
    return GenerationStats(
        family=family,
        generation=generation,
        count=sum(hist.values()),
        min_len=min(hist),
        max_len=max(hist),
        total_len=total,
        histogram=dict(sorted(hist.items())),
    )


# -- reduction to roots ---------------------------------------------------


def root_of(word: Word) -> tuple[Word, str, int]:
    """Reduce a bispecial word to its family root: (root, family, steps)."""
    from .derivation import derive_f

    if not is_bispecial(word):
        raise ValueError(f"{word.render()!r} is not bispecial")
    ab = word.alphabet
    steps = 0
    cur = word
    while cur.factorized_length >= 2:
        cur = derive_f(cur)
        steps += 1
    for family in FAMILIES:
        if family != "T" and ab.a == ab.b - 1:
            continue
        if cur == family_root(ab, family):
            return cur, family, steps
    raise ValueError(
        f"{word.render()!r} reduces to {cur.render()!r}, which is not a "
        "strong or weak root; the input was a neutral bispecial word"
    )


def generation_swap(word: Word) -> Word:
    """The length-coupled partner vertex: complement the derivative, then
    rebuild with the complementary first letter."""
    from .derivation import derive_f

    ab = word.alphabet
    if not word:
        raise ValueError("the empty word has no partner vertex")
    return primitive(derive_f(word).complement(), ab.other(word.letters[0]))


# -- complexity -----------------------------------------------------------


@dataclass(frozen=True)
class GenerationComplexity:
    """Per-level count arrays: b[n] vertices of length n, with its first and
    second partial sums s and p."""

    generation: int
    b: tuple[int, ...]
    s: tuple[int, ...]
    p: tuple[int, ...]


@dataclass(frozen=True)
class TreeComplexity:
    """Per-generation complexity arrays of one family up to a horizon."""

    alphabet: Alphabet
    family: str
    horizon: int
    generations: tuple[GenerationComplexity, ...]
    p: tuple[int, ...]

    def generation_count(self) -> int:
        return len(self.generations)


def tree_complexity(alphabet: Alphabet, family: str, horizon: int, *,
                    generation_cap: int = DEFAULT_GENERATION_CAP) -> TreeComplexity:
    """Count vertices by length up to the horizon, generation by generation.

    Levels stop as soon as their minimum length passes the horizon; child
    words are strictly longer than parents, so that is final.
    """
    gens: list[GenerationComplexity] = []
    p_total = [0] * (horizon + 1)
    i = 0
    while True:
        stats = generation_stats(alphabet, family, i, generation_cap=generation_cap)
        if stats.min_len > horizon:
            break
        b = [0] * (horizon + 1)
        for length, mult in stats.histogram.items():
            if length <= horizon:
                b[length] = mult
        # s[n] counts vertices shorter than n; p[n] is the partial sum of s.
        s = [0] * (horizon + 1)
        p = [0] * (horizon + 1)
        for n in range(1, horizon + 1):
            s[n] = s[n - 1] + b[n - 1]
            p[n] = p[n - 1] + s[n - 1]
        gens.append(GenerationComplexity(i, tuple(b), tuple(s), tuple(p)))
        for n in range(horizon + 1):
            p_total[n] += p[n]
        i += 1
    return TreeComplexity(alphabet, family, horizon, tuple(gens), tuple(p_total))


@dataclass(frozen=True)
class ComplexityTable:
    """Factor complexity p with finite differences s and b, plus tree bounds.

    `provenance` records how p was obtained: 'enumeration' counts words
    directly, 'tree-derived' evaluates the exact identity built from the
    bispecial trees.
    """

    alphabet: Alphabet
    horizon: int
    p: tuple[int, ...]
    s: tuple[int, ...]
    b: tuple[int, ...]
    lower: tuple[int, ...]
    upper: tuple[int, ...]
    provenance: str


def _bounds_from_trees(alphabet: Alphabet, horizon: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    tc = tree_complexity(alphabet, "T", horizon)
    lower = tuple(1 + n + tc.p[n] for n in range(horizon + 1))
    upper = tuple(1 + n + 3 * tc.p[n] for n in range(horizon + 1))
    return lower, upper


def exact_complexity(alphabet: Alphabet, horizon: int, *, cap: int = 64) -> ComplexityTable:
    """Brute-force complexity table from language enumeration."""
    from .smoothness import f_smooth_count

    p = tuple(f_smooth_count(alphabet, n, cap=cap) for n in range(horizon + 1))
    s = tuple(p[n + 1] - p[n] for n in range(horizon))
    b = tuple(s[n + 1] - s[n] for n in range(horizon - 1)) if horizon >= 1 else ()
    lower, upper = _bounds_from_trees(alphabet, horizon)
    return ComplexityTable(alphabet, horizon, p, s, b, lower, upper, "enumeration")


def tree_derived_complexity(alphabet: Alphabet, horizon: int) -> ComplexityTable:
    """Complexity table from the bispecial trees alone.

    With consecutive letters the empty-rooted tree is everything:
    p(n) = 1 + n + p_T(n).  Otherwise the two strong families add and the
    two weak families subtract: p(n) = 1 + n + p_T + p_T1 + p_T2 - p_T3 - p_T4.
    Both identities are exact, not bounds.
    """
    p_T = tree_complexity(alphabet, "T", horizon).p
    if alphabet.a == alphabet.b - 1:
        p = tuple(1 + n + p_T[n] for n in range(horizon + 1))
    else:
        parts = {
            fam: tree_complexity(alphabet, fam, horizon).p
            for fam in ("T1", "T2", "T3", "T4")
        }
        p = tuple(
            1 + n + p_T[n] + parts["T1"][n] + parts["T2"][n]
            - parts["T3"][n] - parts["T4"][n]
            for n in range(horizon + 1)
        )
    s = tuple(p[n + 1] - p[n] for n in range(horizon))
    b = tuple(s[n + 1] - s[n] for n in range(horizon - 1)) if horizon >= 1 else ()
    lower = tuple(1 + n + p_T[n] for n in range(horizon + 1))
    upper = tuple(1 + n + 3 * p_T[n] for n in range(horizon + 1))
    return ComplexityTable(alphabet, horizon, p, s, b, lower, upper, "tree-derived")

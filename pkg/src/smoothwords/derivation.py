"""Derivation operators on run factorizations.

A word u = c1^p1 c2^p2 ... cn^pn (canonical runs) is derivable when its run
exponents obey the rules below; the derivative is the word spelled by those
exponents, with boundary runs passed through `cut`:

    cut(p) = empty      if 1 <= p <= a
    cut(p) = letter b   if a < p <= b

* Two-sided derivative: interior exponents must lie in {a, b}, both boundary
  exponents in [1, b]; result is cut(p1) p2 ... p(n-1) cut(pn).  A single-run
  word maps to cut(p1) and the empty word maps to itself.  Repeated
  application ending in the empty word characterises f-smooth words.
* Right derivative: every exponent except the last must lie in {a, b}, the
  last in [1, b]; result is p1 ... p(n-1) cut(pn).  Its iterates ending in
  the empty word characterise r-smooth words, the prefixes of smooth words.
* Huang's variant replaces cut by: empty if p < b, letter b only if p = b.
  It agrees with the two-sided derivative exactly when a = b - 1 and is kept
  quarantined here because published claims relying on it break otherwise.

All three contract the length of any nonempty word, so iteration terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotDerivableError, NotRDerivableError
from .words import Alphabet, Word, _bytes_runs


@dataclass(frozen=True)
class DerivabilityReport:
    """Outcome of a domain check, pointing at the first offending run."""

    derivable: bool
    offending_run_index: Optional[int] = None
    offending_exponent: Optional[int] = None
    reason: Optional[str] = None


_OK = DerivabilityReport(True)


def cut_f(exponent: int, alphabet: Alphabet) -> Word:
    """Boundary-run cut: empty word for exponents up to a, else the letter b."""
    if not 1 <= exponent <= alphabet.b:
        raise NotDerivableError(
            f"cut undefined for exponent {exponent} over {alphabet}",
            DerivabilityReport(False, 0, exponent, "boundary exponent outside [1,b]"),
        )
    return Word(alphabet, _cut(exponent, alphabet.a, alphabet.b))


def _cut(p: int, a: int, b: int) -> bytes:
    return b"" if p <= a else bytes([b])


def _cut_huang(p: int, a: int, b: int) -> bytes:
    return bytes([b]) if p == b else b""


def _check_f(exps: list[int], a: int, b: int) -> Optional[DerivabilityReport]:
    """First broken constraint for the two-sided domain, or None."""
    n = len(exps)
    for i, p in enumerate(exps):
        if i == 0 or i == n - 1:
            if not 1 <= p <= b:
                return DerivabilityReport(False, i, p, "boundary exponent outside [1,b]")
        elif p != a and p != b:
            return DerivabilityReport(False, i, p, "interior exponent not a letter")
    return None


def _check_r(exps: list[int], a: int, b: int) -> Optional[DerivabilityReport]:
    """First broken constraint for the right-derivative domain, or None."""
    n = len(exps)
    for i, p in enumerate(exps):
        if i == n - 1:
            if not 1 <= p <= b:
                return DerivabilityReport(False, i, p, "final exponent outside [1,b]")
        elif p != a and p != b:
            return DerivabilityReport(False, i, p, "non-final exponent not a letter")
    return None


def _derive_f_bytes(letters: bytes, a: int, b: int, cut=_cut) -> Optional[bytes]:
    """One two-sided derivation step on raw letters; None when out of domain."""
    if not letters:
        return b""
    exps = [e for _, e in _bytes_runs(letters)]
    if _check_f(exps, a, b) is not None:
        return None
    if len(exps) == 1:
        return cut(exps[0], a, b)
    return cut(exps[0], a, b) + bytes(exps[1:-1]) + cut(exps[-1], a, b)


def _derive_r_bytes(letters: bytes, a: int, b: int) -> Optional[bytes]:
    """One right-derivation step on raw letters; None when out of domain."""
    if not letters:
        return b""
    exps = [e for _, e in _bytes_runs(letters)]
    if _check_r(exps, a, b) is not None:
        return None
    return bytes(exps[:-1]) + _cut(exps[-1], a, b)


def derivability(word: Word, kind: str = "f") -> DerivabilityReport:
    """Domain check without deriving; kind is 'f', 'r', or 'huang'."""
    if not word:
        return _OK
    exps = list(word.runs.exponents())
    ab = word.alphabet
    if kind in ("f", "huang"):
        report = _check_f(exps, ab.a, ab.b)
    elif kind == "r":
        report = _check_r(exps, ab.a, ab.b)
    else:
        raise ValueError(f"unknown derivation kind {kind!r}")
    return report if report is not None else _OK


def derive_f(word: Word) -> Word:
    """Two-sided derivative; raises NotDerivableError outside the domain."""
    ab = word.alphabet
    report = derivability(word, "f")
    if not report.derivable:
        raise NotDerivableError(
            f"word {word.render()!r} has no two-sided derivative: {report.reason} "
            f"(run {report.offending_run_index}, exponent {report.offending_exponent})",
            report,
        )
    return Word(ab, _derive_f_bytes(word.letters, ab.a, ab.b))


def derive_r(word: Word) -> Word:
    """Right derivative; raises NotRDerivableError outside the domain."""
    ab = word.alphabet
    report = derivability(word, "r")
    if not report.derivable:
        raise NotRDerivableError(
            f"word {word.render()!r} has no right derivative: {report.reason} "
            f"(run {report.offending_run_index}, exponent {report.offending_exponent})",
            report,
        )
    return Word(ab, _derive_r_bytes(word.letters, ab.a, ab.b))


def derive_huang(word: Word) -> Word:
    """Huang's two-sided variant; same domain, stricter boundary cut.

    Kept separate so the divergence from `derive_f` on alphabets with
    a < b - 1 stays observable instead of silently absorbed.
    """
    ab = word.alphabet
    report = derivability(word, "huang")
    if not report.derivable:
        raise NotDerivableError(
            f"word {word.render()!r} has no derivative under the strict cut: "
            f"{report.reason} (run {report.offending_run_index}, "
            f"exponent {report.offending_exponent})",
            report,
        )
    return Word(ab, _derive_f_bytes(word.letters, ab.a, ab.b, cut=_cut_huang))


def derivative_chain(word: Word, op=derive_f, max_steps: Optional[int] = None) -> list[Word]:
    """Iterate an operator until the empty word or a domain error.

    Returns the chain starting at `word`; stops after the empty word.  A
    domain error mid-chain propagates to the caller.
    """
    chain = [word]
    w = word
    steps = 0
    while w:
        w = op(w)
        chain.append(w)
        steps += 1
        if max_steps is not None and steps >= max_steps and w:
            break
    return chain

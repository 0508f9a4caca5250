"""Growth matrices and exponents for odd alphabets, and exponent formulas.

For alphabets with both letters odd, the parity-count vector of a tree word
obeys an affine recurrence under the primitive constructors.  Its linear
part M (with offset N and letter-swap permutation P) governs the growth of
the minimal level lengths; for a = 1 the system degenerates and a reduced
3 x 3 block R carries the growth instead.

Matrix entries are exact rationals; eigenvalue extraction runs in floating
point via power iteration and is cross-checked against closed forms: the
dominant growth rate is (1 + sqrt(2b - 1)) / 2 when a = 1, otherwise the
dominant root of X^3 - ((a + b) / 2) X^2 + (b - a)^2 / 4.

Complexity exponents reported here:

    rho  = log(a + b) / log((a + b) / 2)     lower-bound exponent
    alpha = log(a + b) / log((a^2 + b^2) / (a + b))
    beta = log(2 b^2) / log(2 a b / (a + b))  upper-bound exponent
    zeta = log(2 lambda) / log(lambda)        odd alphabets, from lambda

rho_prime = log(2b - 1) / log((a + b) / 2) is kept quarantined: it comes
from a refuted published claim and exceeds rho whenever a < b - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    BoundViolationError,
    NoConvergenceError,
    NotPrimitiveError,
)
from .words import Alphabet, Parity

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class CountMatrix:
    """Labelled exact-rational matrix."""

    label: str
    entries: Matrix

    @property
    def size(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "CountMatrix") -> "CountMatrix":
        return CountMatrix(
            f"{self.label}{other.label}",
            mat_mul(self.entries, other.entries),
        )


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    n = len(x)
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_vec(x: Matrix, v: Vector) -> Vector:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in x)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


@dataclass(frozen=True)
class GrowthMatrices:
    """The recurrence data (M, N, P) and, when a = 1, the reduced block R."""

    m: CountMatrix
    n: Vector
    p: CountMatrix
    r: Optional[CountMatrix]


def build_matrices(alphabet: Alphabet) -> GrowthMatrices:
    """Recurrence matrices for an odd alphabet, exact rationals throughout."""
    if alphabet.parity is not Parity.ODD:
        raise ValueError(f"growth matrices need both letters odd, got {alphabet}")
    a, b = alphabet.a, alphabet.b
    f = Fraction
    dam, dap = f(a - 1, 2), f(a + 1, 2)
    dbm, dbp = f(b - 1, 2), f(b + 1, 2)
    m = CountMatrix("M", (
        (dam, f(0), dbm, f(0)),
        (dap, f(0), dbp, f(0)),
        (f(0), dap, f(0), dbp),
        (f(0), dam, f(0), dbm),
    ))
    n = (dam, dap, dap, dam)
    p = CountMatrix("P", (
        (f(0), f(0), f(1), f(0)),
        (f(0), f(0), f(0), f(1)),
        (f(1), f(0), f(0), f(0)),
        (f(0), f(1), f(0), f(0)),
    ))
    r = None
    if a == 1:
        r = CountMatrix("R", (
            (f(0), f(0), dbm),
            (f(1), f(0), dbp),
            (f(0), f(1), f(0)),
        ))
    return GrowthMatrices(m=m, n=n, p=p, r=r)


def _strictly_positive(x: Matrix) -> bool:
    return all(e > 0 for row in x for e in row)


def _is_primitive(x: Matrix, max_power: int = 8) -> bool:
    power = x
    for _ in range(max_power):
        if _strictly_positive(power):
            return True
        power = mat_mul(power, x)
    return False


def _power_iteration(entries: Matrix, tol: float, max_iter: int = 20000) -> float:
    rows = [[float(e) for e in row] for row in entries]
    n = len(rows)
    vec = [1.0 / n] * n
    est = 0.0
    stable = 0
    for _ in range(max_iter):
        nxt = [sum(row[k] * vec[k] for k in range(n)) for row in rows]
        norm = sum(abs(x) for x in nxt)
        if norm == 0.0:
            return 0.0
        # vec carries one-norm 1, so the one-norm of A vec estimates the
        # dominant eigenvalue directly.
        prev, est = est, norm
        vec = [x / norm for x in nxt]
        if abs(est - prev) < tol / 10:
            stable += 1
            if stable >= 4:
                return est
        else:
            stable = 0
    raise NoConvergenceError(
        f"power iteration did not stabilise within {max_iter} rounds"
    )


def spectral_radius(matrix: CountMatrix, tol: float = 1e-10) -> float:
    """Dominant eigenvalue of a primitive nonnegative matrix.

    Primitivity is checked by looking for a strictly positive power up to
    the eighth; NotPrimitiveError otherwise.
    """
    if any(e < 0 for row in matrix.entries for e in row):
        raise ValueError("spectral radius here expects a nonnegative matrix")
    if not _is_primitive(matrix.entries):
        raise NotPrimitiveError(
            f"matrix {matrix.label} has no strictly positive power up to 8"
        )
    return _power_iteration(matrix.entries, tol)


def dominant_eigenvalue(matrix: CountMatrix, tol: float = 1e-10) -> float:
    """Power-iteration estimate without the primitivity gate.

    For reducible nonnegative matrices this still converges to the largest
    block's growth rate from a positive start vector, which is what the
    maximal-length growth product needs.
    """
    return _power_iteration(matrix.entries, tol)


def lambda_of(alphabet: Alphabet, tol: float = 1e-12) -> float:
    """Dominant growth rate of minimal level lengths, odd alphabets.

    Closed form (1 + sqrt(2b - 1)) / 2 for a = 1; otherwise the dominant
    root of X^3 - ((a + b) / 2) X^2 + (b - a)^2 / 4, found by bisection on
    ((a + b)/2 - 1, (a + b)/2) with adaptive widening, then polished with a
    few Newton steps.
    """
    if alphabet.parity is not Parity.ODD:
        raise ValueError(f"lambda is defined for odd alphabets, got {alphabet}")
    a, b = alphabet.a, alphabet.b
    if a == 1:
        return (1 + math.sqrt(2 * b - 1)) / 2
    s = (a + b) / 2
    d = (b - a) ** 2 / 4

    def q(x: float) -> float:
        return x ** 3 - s * x ** 2 + d

    def dq(x: float) -> float:
        return 3 * x ** 2 - 2 * s * x

    lo, hi = s - 1, s
    widen = 1.0
    while q(lo) > 0:
        widen *= 2
        lo = s - widen
        if widen > 16 * s:
            raise NoConvergenceError("no sign change found for the cubic")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if q(mid) > 0:
            hi = mid
        else:
            lo = mid
    x = (lo + hi) / 2
    for _ in range(4):
        slope = dq(x)
        if slope == 0:
            break
        x -= q(x) / slope
    return x


def minimal_length_sequence(alphabet: Alphabet, count: int) -> list[int]:
    """Minimal level lengths l_0..l_count along the all-a primitive path.

    Exact integers from the parity-count recurrence; l_i is the total of the
    state vector after i steps from the zero state.
    """
    mats = build_matrices(alphabet)
    m, n = mats.m.entries, mats.n
    v: Vector = (Fraction(0),) * 4
    out = [0]
    for _ in range(count):
        v = vec_add(mat_vec(m, v), n)
        out.append(int(sum(v)))
    return out


def single_term_lower_bounds(alphabet: Alphabet, count: int) -> list[int]:
    """The sequence of one-norm values of M^(i-1) N, for l_i >= that value."""
    mats = build_matrices(alphabet)
    m, n = mats.m.entries, mats.n
    v = n
    out = []
    for _ in range(count):
        out.append(int(sum(v)))
        v = mat_vec(m, v)
    return out


def lower_bound_constants(alphabet: Alphabet, *, generations: int = 14
                          ) -> tuple[float, float]:
    """Constants (C, D) with l_i >= C lambda^i - D - 1 on the fitted range.

    C is the dominant-growth scale of the exact sequence (the ratio at the
    last fitted generation); D absorbs the transient.  The bound is checked
    against the exact lengths before returning.
    """
    lam = lambda_of(alphabet)
    seq = minimal_length_sequence(alphabet, generations)
    c = seq[generations] / lam ** generations
    d = max(0.0, max(c * lam ** i - seq[i] - 1 for i in range(generations + 1)))
    for i, l_i in enumerate(seq):
        if l_i < c * lam ** i - d - 1 - 1e-9:
            raise BoundViolationError(
                f"fitted bound fails at generation {i}: {l_i} < "
                f"{c * lam ** i - d - 1}"
            )
    return c, d


def max_length_growth_radius(alphabet: Alphabet, tol: float = 1e-10) -> float:
    """Dominant eigenvalue of M P M, reported raw.

    Governs maximal level lengths over two-generation steps.  The product is
    reducible for a = 1, so the estimate skips the primitivity gate.
    """
    mats = build_matrices(alphabet)
    product = mats.m @ mats.p @ mats.m
    return dominant_eigenvalue(product, tol)


# -- exponents ------------------------------------------------------------


@dataclass(frozen=True)
class ExponentReport:
    """Growth exponents of one alphabet with the formula behind each field."""

    alphabet: Alphabet
    rho: float
    alpha: float
    beta: float
    zeta: Optional[float]
    growth_lambda: Optional[float]
    rho_prime: float
    c_constant: float
    formulas: dict[str, str] = field(default_factory=dict)


_FORMULAS = {
    "rho": "log(a+b) / log((a+b)/2)",
    "alpha": "log(a+b) / log((a*a+b*b)/(a+b))",
    "beta": "log(2*b*b) / log(2*a*b/(a+b))",
    "zeta": "log(2*lambda) / log(lambda)",
    "growth_lambda": "(1+sqrt(2b-1))/2 if a=1 else dominant root of "
                     "X^3 - ((a+b)/2) X^2 + (b-a)^2/4",
    "rho_prime": "log(2b-1) / log((a+b)/2)  [quarantined: from a refuted claim]",
    "c_constant": "4a / (a+b-2)",
}


def exponent_report(alphabet: Alphabet) -> ExponentReport:
    """All growth exponents for one alphabet; zeta only when both letters
    are odd."""
    a, b = alphabet.a, alphabet.b
    rho = math.log(a + b) / math.log((a + b) / 2)
    alpha = math.log(a + b) / math.log((a * a + b * b) / (a + b))
    beta = math.log(2 * b * b) / math.log(2 * a * b / (a + b))
    lam: Optional[float] = None
    zeta: Optional[float] = None
    if alphabet.parity is Parity.ODD:
        lam = lambda_of(alphabet)
        zeta = math.log(2 * lam) / math.log(lam)
    rho_prime = math.log(2 * b - 1) / math.log((a + b) / 2)
    c_constant = 4 * a / (a + b - 2)
    return ExponentReport(
        alphabet=alphabet,
        rho=rho,
        alpha=alpha,
        beta=beta,
        zeta=zeta,
        growth_lambda=lam,
        rho_prime=rho_prime,
        c_constant=c_constant,
        formulas=dict(_FORMULAS),
    )


# -- letter-frequency formula evaluators (consecutive pair {1, 2}) ---------


def frequency_delta(phi: float, n: float) -> float:
    """log 3 / log(3/2 + phi + 2/n): decay exponent entering the frequency
    deviation bound over {1, 2}."""
    return math.log(3) / math.log(1.5 + phi + 2 / n)


def frequency_gamma(phi: float) -> float:
    """log 3 / log(3/2 - phi): the matching growth exponent over {1, 2}."""
    return math.log(3) / math.log(1.5 - phi)


def frequency_bound_exponent() -> float:
    """Exponent rho + 0.00036 of the deviation bound over {1, 2}."""
    return math.log(3) / math.log(1.5) + 0.00036

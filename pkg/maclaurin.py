"""
Counting integer sequences under Maclaurin-type inequalities.

For a sequence B_1 .. B_(n-1) of positive numbers the set S_B(A) holds
the tuples (A_2, .., A_n) of positive integers with

    A_(k+1) <= B_k A_k^((k+1)/k)    for k = 1 .. n-1,  A_1 = A.

Its size is Phi_B A^((n-1)(n+2)/2) up to Psi_B A^((n-1)(n+2)/2 - 2).
The binomial sequence B_k = C(n, k+1) / C(n, k)^((k+1)/k) gives the
sequences allowed by Maclaurin's inequality, a superset of the
coefficient sequences of polynomials with positive real roots.

Every inequality with a rational exponent is raised to an integer power
before it is decided, so counts never touch floating point. Constants
with irrational values are kept as exponent vectors and only turned
into certified intervals at the end.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import accumulate
from math import comb, factorial, prod
from typing import Callable, NamedTuple, Optional, Sequence, Union

import gmpy2

from certified import CertifiedReal, certified_e, decide, rational_power
from constants import DEFAULT_PRECISION_BITS, MAX_PRECISION_BITS
from errors import DomainError, PrecisionExhausted
from exponent_vector import ExponentVector, product
from parallel import sum_partitioned

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

# C = 160 e^7 in the symmetric-mean inequality for real-rooted polynomials
TAO_FACTOR = 160
TAO_EXPONENT = 7


@dataclass(frozen=True)
class BSequence:
    """
    Attributes:
        n (int): number of coefficients A_1 .. A_n
        B (tuple[ExponentVector, ...]): B_1 .. B_(n-1), all positive
    """

    n: int
    B: tuple[ExponentVector, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError("a B-sequence needs n >= 2")
        if len(self.B) != self.n - 1:
            raise DomainError(f"expected {self.n - 1} entries for n={self.n}, got {len(self.B)}")

    @classmethod
    def of(cls, values: Sequence[Rational]) -> BSequence:
        """ From positive rationals B_1 .. B_(n-1). """
        return cls(len(values) + 1, tuple(ExponentVector.of(value) for value in values))

    @classmethod
    def binomial(cls, n: int) -> BSequence:
        """ B_k = C(n, k+1) / C(n, k)^((k+1)/k). """
        entries = tuple(ExponentVector.of(comb(n, k + 1)) / ExponentVector.of(comb(n, k)) ** Fraction(k + 1, k)
                        for k in range(1, n))
        return cls(n, entries)

    @classmethod
    def parse(cls, text: str) -> BSequence:
        """
        From a comma separated list such as "1/4,2,3/5".

        :raises DomainError: if an entry is not a positive rational.
        """
        try:
            values = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"cannot read B-sequence {text!r}: {e}") from e
        return cls.of(values)

    def entry(self, k: int) -> ExponentVector:
        """ B_k, 1-based. """
        return self.B[k - 1]

    def cap(self, k: int, a: int) -> int:
        """ Largest integer A_(k+1) with A_(k+1) <= B_k a^((k+1)/k). """
        if a <= 0:
            return 0
        bound = self.entry(k) * ExponentVector.of(a) ** Fraction(k + 1, k)
        degree = bound.root_degree()
        powered = bound.rational_power(degree)
        return int(gmpy2.iroot(gmpy2.mpz(powered.numerator // powered.denominator), degree)[0])

    def bracket_hypothesis_holds(self) -> bool:
        """
        True when every partial main-term product phi_(k-1) is at most the
        matching partial product of the C_j; the error terms of consecutive
        summation steps only merge into Psi_B under this condition.
        """
        ts = t_sequence(self.n)
        us = [Fraction(0)] + u_sequence(self.n)
        phi = ExponentVector.one()
        chain = ExponentVector.one()
        for k in range(1, self.n - 1):
            b = self.entry(self.n - k)
            phi = phi * b ** (ts[k - 1] + 1) * ExponentVector.of(1 / (ts[k - 1] + 1))
            if phi.compare(chain) > 0:
                return False
            step = self.entry(self.n - k - 1)
            chain = chain * (step ** ts[k]).max_with(step ** (us[k] + 1))
        return True


def _binomial_cap(n: int, k: int, a: int) -> int:
    """ Largest A_(k+1) with A_(k+1)^k C(n, k)^(k+1) <= a^(k+1) C(n, k+1)^k. """
    bound = a ** (k + 1) * comb(n, k + 1) ** k // comb(n, k) ** (k + 1)
    return int(gmpy2.iroot(gmpy2.mpz(bound), k)[0])


def _completions(n: int, cap: Callable[[int, int], int], a2_hi: int) -> list[int]:
    """
    Number of ways to complete (A_3, .., A_n) for every A_2 in 0..a2_hi,
    computed level by level from the last coefficient upwards.
    """
    maxima = [0, 0, a2_hi]
    for k in range(2, n):
        maxima.append(cap(k, maxima[k]))
    counts = [1] * (maxima[n] + 1)
    for k in range(n - 1, 1, -1):
        prefix = list(accumulate(counts[1:], initial=0))
        counts = [0] + [prefix[cap(k, a)] for a in range(1, maxima[k] + 1)]
    return counts


def _count_block(n: int, cap: Callable[[int, int], int], lo: int, hi: int) -> int:
    return sum(_completions(n, cap, hi)[lo:hi + 1])


def _nested_count(n: int, A: int, cap: Callable[[int, int], int], workers: int) -> int:
    if A < 1:
        raise DomainError("the leading coefficient A must be at least 1")
    top = cap(1, A)
    logger.debug("n=%d A=%d: A_2 runs up to %d", n, A, top)
    return sum_partitioned(partial(_count_block, n, cap), 1, top, workers)


def count_SB(A: int, bs: BSequence, workers: int = 1) -> int:
    """
    Size of S_B(A).

    :complexity: O(sum of the level maxima), each step one exact integer root.
    """
    return _nested_count(bs.n, A, bs.cap, workers)


def count_attainable(n: int, A: int, workers: int = 1) -> int:
    """
    Number of (A_2, .., A_n), all >= 1, whose symmetric means
    (A_k / C(n, k))^(1/k) are nonincreasing from A_1 = A.
    """
    if n < 2:
        raise DomainError("count_attainable needs n >= 2")
    return _nested_count(n, A, partial(_binomial_cap, n), workers)


def main_exponent(n: int) -> int:
    """ (n - 1)(n + 2) / 2, the growth exponent of the counts in A. """
    return (n - 1) * (n + 2) // 2


def phi_vector(bs: BSequence) -> ExponentVector:
    n = bs.n
    head = ExponentVector.of(Fraction(2 ** (n - 1) * n * factorial(n + 1), factorial(2 * n)))
    return head * product(bs.entry(k) ** Fraction((n - k) * (n + k + 1), 2 * (k + 1)) for k in range(1, n))


def psi_vector(bs: BSequence) -> ExponentVector:
    n = bs.n
    result = ExponentVector.of(n - 1)
    for k in range(1, n - 1):
        b = bs.entry(k)
        result = result * b ** Fraction((n - k - 1) * (n + k + 2), 2 * (k + 1))
        result = result * ExponentVector.one().max_with(b ** Fraction(-1, k + 1))
    return result


class MainTermConstants(NamedTuple):
    phi: CertifiedReal
    psi: CertifiedReal


def phi_psi_general(bs: BSequence, prec: int = DEFAULT_PRECISION_BITS) -> MainTermConstants:
    """ Phi_B and Psi_B as certified intervals; point intervals when rational. """
    return MainTermConstants(phi_vector(bs).to_certified(prec), psi_vector(bs).to_certified(prec))


def phi_binomial(n: int) -> Fraction:
    """
    2^(n-1) / n^((n^2+n-4)/2) * (n+1)! / (2n)! * prod_(k=1)^(n-2) C(n, k).

    :pre: n >= 2
    """
    binomials = prod(comb(n, k) for k in range(1, n - 1))
    return (Fraction(2 ** (n - 1) * factorial(n + 1) * binomials, factorial(2 * n))
            / Fraction(n) ** ((n * n + n - 4) // 2))


def psi_binomial_vector(n: int) -> ExponentVector:
    """ (n-1) n^(n/(n-1)) / n^((n-1)(n+2)/2) * prod_(k=1)^(n-2) C(n, k)^(1 + 1/k). """
    base = ExponentVector.of(n)
    result = ExponentVector.of(n - 1) * base ** Fraction(n, n - 1) / base ** main_exponent(n)
    return result * product(ExponentVector.of(comb(n, k)) ** (1 + Fraction(1, k)) for k in range(1, n - 1))


class BinomialConstants(NamedTuple):
    """
    phi: exact leading constant
    psi: closed-form error constant
    psi_general: the general error constant at the binomial sequence
    """
    phi: Fraction
    psi: CertifiedReal
    psi_general: CertifiedReal


def phi_psi_binomial(n: int, prec: int = DEFAULT_PRECISION_BITS) -> BinomialConstants:
    if n < 2:
        raise DomainError("phi_psi_binomial needs n >= 2")
    return BinomialConstants(phi_binomial(n), psi_binomial_vector(n).to_certified(prec),
                             psi_vector(BSequence.binomial(n)).to_certified(prec))


class MainTermBracket(NamedTuple):
    count: int
    main_term: CertifiedReal
    error_bound: CertifiedReal
    within: bool


def _bracket(count: int, A: int, n: int, phi: ExponentVector, psi: ExponentVector) -> MainTermBracket:
    power = main_exponent(n)
    scale = Fraction(A) ** power
    error_scale = Fraction(A) ** (power - 2)

    def above(prec: int) -> tuple[CertifiedReal, CertifiedReal]:
        return phi.to_certified(prec) * scale - count, psi.to_certified(prec) * error_scale

    def below(prec: int) -> tuple[CertifiedReal, CertifiedReal]:
        return count - phi.to_certified(prec) * scale, psi.to_certified(prec) * error_scale

    within = decide(above, strict=False) and decide(below, strict=False)
    return MainTermBracket(count, _scaled(phi, scale), _scaled(psi, error_scale), within)


def _scaled(vector: ExponentVector, factor: Fraction) -> CertifiedReal:
    if vector.is_rational:
        return CertifiedReal.exact(vector.to_fraction() * factor)
    return vector.to_certified() * factor


def attainable_bracket(n: int, A: int, workers: int = 1) -> MainTermBracket:
    """ count_attainable(n, A) against Phi_n A^e with the error Psi_n A^(e-2). """
    count = count_attainable(n, A, workers)
    return _bracket(count, A, n, ExponentVector.of(phi_binomial(n)), psi_binomial_vector(n))


def sequence_bracket(A: int, bs: BSequence, workers: int = 1) -> MainTermBracket:
    """ count_SB(A, bs) against Phi_B A^e with the error Psi_B A^(e-2). """
    count = count_SB(A, bs, workers)
    return _bracket(count, A, bs.n, phi_vector(bs), psi_vector(bs))


def t_sequence(n: int) -> list[Fraction]:
    """ t_k = k (2n - k + 1) / (2 (n - k)) for k = 0 .. n-1. """
    return [Fraction(k * (2 * n - k + 1), 2 * (n - k)) for k in range(n)]


def u_sequence(n: int) -> list[Fraction]:
    """ u_k = (k - 1)(2n - k + 2) / (2 (n - k)) for k = 1 .. n-1. """
    return [Fraction((k - 1) * (2 * n - k + 2), 2 * (n - k)) for k in range(1, n)]


def t_recurrence(n: int) -> list[Fraction]:
    """ t_0 = 0, t_(k+1) = (n-k)/(n-k-1) (t_k + 1). """
    values = [Fraction(0)]
    for k in range(n - 1):
        values.append(Fraction(n - k, n - k - 1) * (values[k] + 1))
    return values


def u_recurrence(n: int) -> list[Fraction]:
    """ u_1 = 0, u_(k+1) = max{(n-k)/(n-k-1) t_k, (n-k)/(n-k-1) (u_k + 1)}. """
    ts = t_recurrence(n)
    values = [Fraction(0)]
    for k in range(1, n - 1):
        ratio = Fraction(n - k, n - k - 1)
        values.append(max(ratio * ts[k], ratio * (values[-1] + 1)))
    return values


def _d_vectors(ds: Sequence[Rational]) -> list[Optional[ExponentVector]]:
    """ 1-based D_k as exponent vectors; index 0 is unused. """
    return [None] + [ExponentVector.of(d) for d in ds]


def simplification_sides(ds: Sequence[Rational]) -> tuple[tuple[ExponentVector, ExponentVector],
                                                          tuple[ExponentVector, ExponentVector]]:
    """
    Both sides of the two product identities for E_k = D_(k+1) / D_k^((k+1)/k):

        prod_(k<n) E_k^((n-k)(n+k+1)/(2(k+1)))
            = D_1^(-(n-1)(n+2)/2) prod_(k=2..n) D_k

        prod_(k<n-1) E_k^((n-k-1)(n+k+2)/(2(k+1))) max{1, E_k^(-1/(k+1))}
            = D_1^2 D_1^(-(n-1)(n+2)/2) prod_(k=2..n-1) D_k prod_(k<n-1) max{D_k^(1/k), D_(k+1)^(1/(k+1))}

    :pre: len(ds) = n >= 2, every entry a positive rational.
    """
    n = len(ds)
    if n < 2:
        raise DomainError("the identities need at least D_1 and D_2")
    d = _d_vectors(ds)
    e = [None] + [d[k + 1] / d[k] ** Fraction(k + 1, k) for k in range(1, n)]
    first_left = product(e[k] ** Fraction((n - k) * (n + k + 1), 2 * (k + 1)) for k in range(1, n))
    head = d[1] ** -main_exponent(n)
    first_right = head * product(d[k] for k in range(2, n + 1))
    second_left = ExponentVector.one()
    second_right = d[1] ** 2 * head * product(d[k] for k in range(2, n))
    for k in range(1, n - 1):
        second_left = second_left * e[k] ** Fraction((n - k - 1) * (n + k + 2), 2 * (k + 1))
        second_left = second_left * ExponentVector.one().max_with(e[k] ** Fraction(-1, k + 1))
        second_right = second_right * (d[k] ** Fraction(1, k)).max_with(d[k + 1] ** Fraction(1, k + 1))
    return (first_left, first_right), (second_left, second_right)


def check_simplification(ds: Sequence[Rational]) -> bool:
    """ True when both product identities hold exactly for D_1 .. D_n. """
    (a, b), (c, d) = simplification_sides(ds)
    return a == b and c == d


def tao_constant(prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """ 160 e^7, roughly 175461. """
    return certified_e(prec) ** TAO_EXPONENT * TAO_FACTOR


class TaoScale(NamedTuple):
    """
    Squares of the two normalizations of M(A_1, A_2):
    statement = max{A_1^2 / n^2, |A_2| / (n(n-1))},
    means = max{s_1^2, |s_2|} with s_k = A_k / C(n, k).
    """
    statement: Fraction
    means: Fraction


def tao_scale(n: int, A1: int, A2: int) -> TaoScale:
    first = Fraction(A1 * A1, n * n)
    return TaoScale(max(first, Fraction(abs(A2), n * (n - 1))), max(first, Fraction(abs(A2), comb(n, 2))))


def tao_upper_bound(n: int, A1: int, A2: int, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """
    Upper bound on the number of real-rooted monic integer polynomials of
    degree n starting with X^n - A_1 X^(n-1) + A_2 X^(n-2):

        prod_(k=1..n-3) C(n, k) * (prod_(k=3..n) k^k)^(1/2) * (3C M)^((n^2+n-6)/2)

    with M from the statement normalization. The value is 0 when M = 0.

    :raises DomainError: if n < 3.
    """
    if n < 3:
        raise DomainError("tao_upper_bound needs n >= 3")
    power = (n * n + n - 6) // 2
    binomials = prod(comb(n, k) for k in range(1, n - 2))
    self_powers = rational_power(prod(k**k for k in range(3, n + 1)), Fraction(1, 2), prec)
    m_power = rational_power(tao_scale(n, A1, A2).statement, Fraction(power, 2), prec)
    return (tao_constant(prec) * 3) ** power * self_powers * m_power * binomials


def tao_choice_bound(n: int, A1: int, A2: int, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """
    prod_(k=3..n) (2 C(n, k) C^k k^(k/2) M^k + 1): the number of integers
    A_k with |A_k| <= C(n, k) C^k k^(k/2) M^k, multiplied over k.
    """
    if n < 3:
        raise DomainError("tao_choice_bound needs n >= 3")
    c = tao_constant(prec)
    m_square = tao_scale(n, A1, A2).statement
    result = CertifiedReal.exact(1, prec)
    for k in range(3, n + 1):
        radius = c**k * rational_power(k, Fraction(k, 2), prec) * rational_power(m_square, Fraction(k, 2), prec)
        result = result * (radius * (2 * comb(n, k)) + 1)
    return result


def elementary_means(roots: Sequence[Rational]) -> list[Fraction]:
    """ s_k = e_k(roots) / C(n, k) for k = 0 .. n. """
    e = [Fraction(1)] + [Fraction(0)] * len(roots)
    for root in roots:
        for k in range(len(e) - 1, 0, -1):
            e[k] += e[k - 1] * root
    n = len(roots)
    return [e[k] / comb(n, k) for k in range(n + 1)]


def _tao_pair(sk: Fraction, sj: Fraction, k: int, j: int, c: Fraction) -> bool:
    """ |s_k|^(1/k) <= c (k/j)^(1/2) |s_j|^(1/j), raised to the power 2kj. """
    sk, sj = abs(sk), abs(sj)
    lhs = sk.numerator ** (2 * j) * sj.denominator ** (2 * k) * j ** (k * j) * c.denominator ** (2 * k * j)
    rhs = c.numerator ** (2 * k * j) * k ** (k * j) * sj.numerator ** (2 * k) * sk.denominator ** (2 * j)
    return lhs <= rhs


def _tao_holds(s: list[Fraction], k: int, l: int, c: CertifiedReal) -> Optional[bool]:
    js = (l, l + 1)
    if any(_tao_pair(s[k], s[j], k, j, c.lo) for j in js):
        return True
    if not any(_tao_pair(s[k], s[j], k, j, c.hi) for j in js):
        return False
    return None


def tao_inequality_check(roots: Sequence[Rational]) -> bool:
    """
    Whether |s_k|^(1/k) <= C max_(j in {l, l+1}) (k/j)^(1/2) |s_j|^(1/j)
    for all 1 <= l < k <= n, with C = 160 e^7 as a certified interval.

    :raises PrecisionExhausted: if a comparison sits on C itself.
    """
    s = elementary_means(roots)
    n = len(roots)
    floor_c = CertifiedReal.exact(int(tao_constant().lo))
    for k in range(2, n + 1):
        for l in range(1, k - 1):
            if _tao_holds(s, k, l, floor_c):
                continue
            prec = DEFAULT_PRECISION_BITS
            verdict = None
            while verdict is None:
                if prec > MAX_PRECISION_BITS:
                    raise PrecisionExhausted(f"Tao comparison at k={k}, l={l} unresolved")
                verdict = _tao_holds(s, k, l, tao_constant(prec))
                prec *= 2
            if not verdict:
                logger.warning("symmetric mean inequality fails at k=%d, l=%d for %s", k, l, list(roots))
                return False
    return True

"""
Arithmetic of discriminants.

A cubic X^3 - A X^2 + B X - C has a discriminant that is a quadratic in C,
so questions about square-free or almost prime discriminants become
questions about the values of a quadratic f = a X^2 + b X + c. The local
densities rho_f(p^2) = #{x mod p^2 : f(x) = 0 mod p^2} drive the sieve
bounds below.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from math import gcd, prod
from typing import NamedTuple

from gmpy2 import is_square, isqrt
from sympy import isprime, legendre_symbol

from arithmetic import factorize, is_squarefree, omega, phi_sum_constants, prime_pi, primes_up_to, rad
from certified import CertifiedReal
from constants import DEFAULT_PRECISION_BITS, DEFAULT_TRUNCATION
from cubic_census import ceil_gminus, floor_gplus
from errors import DomainError
from parallel import sum_partitioned
from polycore import cubic_discriminant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadPoly:
    """
    f = A X^2 + B X + C with its discriminant B^2 - 4AC.
    """

    A: int
    B: int
    C: int
    delta: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", self.B * self.B - 4 * self.A * self.C)

    def __call__(self, x: int) -> int:
        return (self.A * x + self.B) * x + self.C

    @property
    def is_zero(self) -> bool:
        return self.A == self.B == self.C == 0

    @property
    def content(self) -> int:
        return gcd(self.A, self.B, self.C)

    def divided(self, p: int) -> QuadPoly:
        """ f / p, for p dividing every coefficient. """
        return QuadPoly(self.A // p, self.B // p, self.C // p)

    @classmethod
    def cubic_discriminant_in_c(cls, A: int, B: int) -> QuadPoly:
        """ The discriminant of X^3 - A X^2 + B X - C as a quadratic in C. """
        return cls(-27, -4 * A**3 + 18 * A * B, A * A * B * B - 4 * B**3)

    def __str__(self) -> str:
        return f"{self.A}X^2 + {self.B}X + {self.C}"


def rho_bruteforce(f: QuadPoly, m: int) -> int:
    """ #{0 <= x < m : f(x) = 0 mod m}. """
    if m < 1:
        raise DomainError("modulus must be positive")
    return sum(1 for x in range(m) if f(x) % m == 0)


def _rho_prime(f: QuadPoly, p: int) -> int:
    """ rho_f(p) for an odd prime p. """
    if f.A % p:
        if f.delta % p == 0:
            return 1
        return 1 + int(legendre_symbol(f.delta % p, p))
    if f.B % p:
        return 1
    if f.C % p:
        return 0
    return p


def rho_quadratic_prime_sq(f: QuadPoly, p: int) -> int:
    """
    rho_f(p^2) from the residue of the discriminant.

    For odd p not dividing A it is 1 + (delta/p) off the discriminant,
    0 when p exactly divides it and p when p^2 does. For odd p dividing A
    it is 1 when p does not divide B, 0 when p divides B but not C, and
    p rho_(f/p)(p) when p divides every coefficient. p = 2 is counted
    directly over the residues mod 4.

    :raises DomainError: if f is zero or p is not prime.
    """
    if f.is_zero:
        raise DomainError("rho of the zero polynomial")
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        return rho_bruteforce(f, 4)
    if f.A % p:
        if f.delta % p:
            return 1 + int(legendre_symbol(f.delta % p, p))
        return p if f.delta % (p * p) == 0 else 0
    if f.B % p:
        return 1
    if f.C % p:
        return 0
    return p * _rho_prime(f.divided(p), p)


def rho_square(f: QuadPoly, d: int) -> int:
    """ rho_f(d^2) for square-free d, multiplied over the primes of d. """
    if not is_squarefree(d):
        raise DomainError(f"{d} is not square-free")
    return prod(rho_quadratic_prime_sq(f, p) for p in factorize(d))


@dataclass(frozen=True)
class SieveBracket:
    """
    Bounds on the number of x < n <= y with f(n) square-free.

    Attributes:
        lower: the lower bound, sieving to z with the Feller-Tornier product
        upper: the upper bound with the products over p | delta and p | content
        upper_sharp: (y - x) prod_(p<=z) (1 - rho(p^2)/p^2) + prod_(p<=z) (1 + rho(p^2))
        empirical: the exact count
        params: (x, y, z)
    """

    lower: CertifiedReal
    upper: CertifiedReal
    upper_sharp: CertifiedReal
    empirical: int
    params: tuple[int, int, int]

    @property
    def holds(self) -> bool:
        return self.lower.hi <= self.empirical <= self.upper_sharp.lo

    @property
    def upper_holds(self) -> bool:
        return self.empirical <= self.upper.lo


def _largest_abs_value(f: QuadPoly, x: int, y: int) -> int:
    """ max |f(n)| over the integers x < n <= y. """
    points = {x + 1, y}
    if f.A != 0:
        vertex = Fraction(-f.B, 2 * f.A)
        for n in (vertex.numerator // vertex.denominator, -(-vertex.numerator // vertex.denominator)):
            if x < n <= y:
                points.add(n)
    return max(abs(f(n)) for n in points)


def _squarefree_rows(f: QuadPoly, lo: int, hi: int) -> int:
    return sum(1 for n in range(lo, hi + 1) if is_squarefree(f(n)))


def count_squarefree_values(f: QuadPoly, x: int, y: int, workers: int = 1) -> int:
    """ #{x < n <= y : f(n) square-free}. """
    if x >= y:
        raise DomainError("need x < y")
    return sum_partitioned(partial(_squarefree_rows, f), x + 1, y, workers)


def feller_tornier(truncation: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """
    prod over all primes of (1 - 2/p^2), about 0.3226.

    The primes up to the truncation are multiplied out; the tail lies in
    [1 - 4/P, 1].
    """
    if truncation < 2:
        raise DomainError("truncation must be at least 2")
    result = CertifiedReal.exact(1, prec)
    for p in primes_up_to(truncation):
        result = result * Fraction(p * p - 2, p * p)
    tail = CertifiedReal(max(Fraction(0), 1 - Fraction(4, truncation)), Fraction(1), prec)
    return result * tail


def feller_tornier_constant(truncation: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """ 1/2 + (1/2) prod (1 - 2/p^2), about 0.661. """
    return feller_tornier(truncation, prec) * Fraction(1, 2) + Fraction(1, 2)


def squarefree_sieve_bounds(f: QuadPoly, x: int, y: int, z: int, truncation: int = DEFAULT_TRUNCATION,
                            workers: int = 1) -> SieveBracket:
    """
    Sieve bounds for the number of square-free values of f on x < n <= y,
    sieving by the squares of the primes up to z.

    :raises DomainError: if delta <= 0, x >= y or z >= y.
    """
    if f.delta <= 0:
        raise DomainError(f"the sieve bounds need a positive discriminant, got {f.delta}")
    if x >= y or z >= y:
        raise DomainError("need x < y and z < y")
    length = y - x
    big_f = int(isqrt(_largest_abs_value(f, x, y)))
    primes = primes_up_to(max(big_f, z))
    pi_z, pi_f = prime_pi(primes, z), prime_pi(primes, big_f)
    content_primes = set(factorize(f.content))
    delta_primes = set(factorize(f.delta))
    rho = {p: rho_quadratic_prime_sq(f, p) for p in primes[:pi_z]}
    for p in content_primes:
        rho.setdefault(p, rho_quadratic_prime_sq(f, p))

    local = Fraction(1)
    for p in primes[:pi_z]:
        if p in delta_primes:
            local *= 1 - Fraction(1, p)
        if p in content_primes:
            local *= 1 - Fraction(rho[p], p * p)
    sieve_error = rad(f.delta) * 3**pi_z
    large = [p for p in content_primes if z < p <= big_f]
    tail_density = sum((Fraction(rho[p], p * p) for p in large), Fraction(0)) \
        + Fraction(omega(f.delta), z) + Fraction(4, z)
    tail_count = sum(rho[p] for p in large) \
        + sum(p for p in delta_primes if z < p <= big_f and p not in content_primes) \
        + 2 * max(0, pi_f - pi_z)
    lower = feller_tornier(truncation) * (length * local) - sieve_error - length * tail_density - tail_count
    upper = CertifiedReal.exact(length * local + sieve_error)

    exact_local = prod((1 - Fraction(rho[p], p * p) for p in primes[:pi_z]), start=Fraction(1))
    upper_sharp = CertifiedReal.exact(length * exact_local + prod(1 + rho[p] for p in primes[:pi_z]))
    empirical = count_squarefree_values(f, x, y, workers)
    bracket = SieveBracket(lower, upper, upper_sharp, empirical, (x, y, z))
    if not bracket.upper_holds:
        logger.warning("square-free count %d of %s on (%d, %d] exceeds the product bound %s",
                       empirical, f, x, y, upper)
    return bracket


def excluded_by_three(A: int, A2: int) -> bool:
    """ 3 | A and 3 | A_2 make 27 divide every discriminant in the row. """
    return A % 3 == 0 and A2 % 3 == 0


def _squarefree_plus_rows(A: int, lo: int, hi: int) -> int:
    total = 0
    for A2 in range(lo, hi + 1):
        if excluded_by_three(A, A2):
            continue
        for A3 in range(max(ceil_gminus(A, A2), 1), floor_gplus(A, A2) + 1):
            delta = cubic_discriminant(A, A2, A3)
            if delta > 0 and is_squarefree(delta):
                total += 1
    return total


class SquarefreeCensus(NamedTuple):
    count: int
    ratio: CertifiedReal


def count_P3_squarefree_plus(A: int, workers: int = 1) -> SquarefreeCensus:
    """ Cubics with trace A, roots real and > 0, and a square-free discriminant; with count / A^5. """
    if A < 1:
        raise DomainError("the trace must be at least 1")
    count = sum_partitioned(partial(_squarefree_plus_rows, A), 1, A * A // 3, workers)
    return SquarefreeCensus(count, CertifiedReal.exact(Fraction(count, A**5)))


def squarefree_census_constant(truncation: int = DEFAULT_TRUNCATION, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """ 4/27 * 1/6 * 3/(4 pi^2) * (1/16 - 1/81) * prod (1 - 2/p^2), a little above 3e-5. """
    factor = Fraction(4, 27) * Fraction(1, 6) * (Fraction(1, 16) - Fraction(1, 81))
    return phi_sum_constants(prec).zero * factor * feller_tornier(truncation, prec)


def _is_almost_prime(delta: int, k: int) -> bool:
    return delta != 0 and omega(delta) <= k


def count_almost_prime_disc(A: int, B: int, H: int, k: int = 2) -> int:
    """
    #{-H <= C <= H : disc(X^3 - A X^2 + B X - C) is nonzero with at most k prime factors}.

    A square A^2 - 3B makes the discriminant reducible in C; it is logged
    and the count is still returned.
    """
    if H < 2:
        raise DomainError("height must be at least 2")
    d = A * A - 3 * B
    if d >= 0 and is_square(d):
        logger.warning("A^2 - 3B = %d is a square for (A, B) = (%d, %d)", d, A, B)
    return sum(1 for C in range(-H, H + 1) if _is_almost_prime(cubic_discriminant(A, B, C), k))


def _box_rows(H: int, k: int, lo: int, hi: int) -> int:
    return sum(1 for A in range(lo, hi + 1) for B in range(-H, H + 1) for C in range(-H, H + 1)
               if _is_almost_prime(cubic_discriminant(A, B, C), k))


def count_almost_prime_disc_box(H: int, k: int = 2, workers: int = 1) -> int:
    """ Triples (A, B, C) in [-H, H]^3 whose cubic has a nonzero discriminant with at most k prime factors. """
    if H < 2:
        raise DomainError("height must be at least 2")
    return sum_partitioned(partial(_box_rows, H, k), -H, H, workers)


def _ceil_sqrt(m: int) -> int:
    if m <= 0:
        return 0
    root = int(isqrt(m))
    return root if root * root == m else root + 1


def count_square_pairs(H: int) -> int:
    """
    #{(A, B) in [-H, H]^2 : A^2 - 3B is a square}, counted as the Z >= 0
    with 3 | A^2 - Z^2 and |A^2 - Z^2| <= 3H for every A.
    """
    if H < 2:
        raise DomainError("height must be at least 2")
    total = 0
    for A in range(-H, H + 1):
        lo, hi = _ceil_sqrt(A * A - 3 * H), int(isqrt(A * A + 3 * H))
        if hi < lo:
            continue
        # Z^2 = A^2 mod 3 iff 3 | Z exactly when 3 | A
        multiples = hi // 3 - (lo - 1) // 3
        total += multiples if A % 3 == 0 else (hi - lo + 1) - multiples
    return total


def count_square_pairs_naive(H: int) -> int:
    return sum(1 for A in range(-H, H + 1) for B in range(-H, H + 1)
               if A * A - 3 * B >= 0 and is_square(A * A - 3 * B))

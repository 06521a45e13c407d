"""
Arithmetic functions on integers: factorization and what is read off it,
sieves for omega and Euler's totient, and prime counting.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import NamedTuple

from sympy import factorint, primerange

from algorithms.binary_search import count_at_most, first_true
from certified import CertifiedReal, certified_log, certified_pi, decide
from constants import DEFAULT_PRECISION_BITS, FACTOR_CEILING
from errors import DomainError

logger = logging.getLogger(__name__)

# Below e^e the map m -> log m / log log m is not monotone; those m are checked one by one.
OMEGA_MONOTONE_FROM = 16


@lru_cache(maxsize=1 << 16)
def factorize(m: int) -> dict[int, int]:
    """
    Prime factorization of |m| as {prime: exponent}; 1 and -1 give {}.

    :raises DomainError: if m == 0 or |m| exceeds the factorization ceiling.
    """
    if m == 0:
        raise DomainError("0 has no factorization")
    m = abs(m)
    if m > FACTOR_CEILING:
        raise DomainError(f"{m} is above the factorization ceiling {FACTOR_CEILING}")
    # sympy: trial division, then Pollard rho, with deterministic primality below 2^64
    return {int(p): int(e) for p, e in factorint(m).items()}


def omega(m: int) -> int:
    """ Number of distinct prime factors, sign ignored. """
    return len(factorize(m))


def rad(m: int) -> int:
    """ Product of the distinct primes dividing m. """
    return prod(factorize(m))


def is_squarefree(m: int) -> bool:
    """ 0 is not square-free; 1 and -1 are. """
    if m == 0:
        return False
    return all(e == 1 for e in factorize(m).values())


def primes_up_to(limit: int) -> list[int]:
    return [int(p) for p in primerange(2, limit + 1)] if limit >= 2 else []


def prime_pi(primes: list[int], x: int) -> int:
    """ pi(x) from a sorted prime list reaching at least x. """
    return count_at_most(primes, x)


def omega_table(limit: int) -> list[int]:
    """ omega(m) for 0 <= m <= limit (entries 0 and 1 are 0). """
    counts = [0] * (limit + 1)
    for p in primerange(2, limit + 1):
        for multiple in range(p, limit + 1, p):
            counts[multiple] += 1
    return counts


def _first_bound_holds(w: int, m: int, prec: int = DEFAULT_PRECISION_BITS) -> bool:
    """ w < 2 log m. """
    return decide(lambda bits: (CertifiedReal.exact(w, bits), certified_log(m, bits) * 2), strict=True, prec=prec)


def _second_bound_holds(w: int, m: int, prec: int = DEFAULT_PRECISION_BITS) -> bool:
    """ w log log m < 3 log m, for m > 2. """
    def sides(bits: int) -> tuple[CertifiedReal, CertifiedReal]:
        log_m = certified_log(m, bits)
        return certified_log(log_m, bits) * w, log_m * 3

    return decide(sides, strict=True, prec=prec)


def _bounds_hold(w: int, m: int) -> bool:
    if not _first_bound_holds(w, m):
        return False
    return m <= 2 or _second_bound_holds(w, m)


def omega_bound_check(m: int) -> bool:
    """
    omega(m) < 2 log m, and for m > 2 also omega(m) < 3 log m / log log m.

    :raises DomainError: if m < 2.
    """
    if m < 2:
        raise DomainError("omega bounds need m >= 2")
    return _bounds_hold(omega(m), m)


class OmegaSweep(NamedTuple):
    """
    limit: largest m checked
    thresholds: for each omega value w, the least m past the monotone range
        at which both bounds hold for w
    failures: every m <= limit violating a bound
    """
    limit: int
    thresholds: dict[int, int]
    failures: list[int]

    @property
    def all_hold(self) -> bool:
        return not self.failures


def omega_bound_sweep(limit: int) -> OmegaSweep:
    """
    Check both omega bounds for every 2 <= m <= limit.

    Past e^e both bounds increase with m, so for each omega value only the
    least m carrying it has to be compared with the certified threshold.
    """
    table = omega_table(limit)
    failures = [m for m in range(2, min(limit, OMEGA_MONOTONE_FROM) + 1) if not _bounds_hold(table[m], m)]
    least: dict[int, int] = {}
    for m in range(OMEGA_MONOTONE_FROM + 1, limit + 1):
        least.setdefault(table[m], m)
    thresholds = {}
    for w in sorted(least):
        thresholds[w] = first_true(lambda m, w=w: _bounds_hold(w, m), OMEGA_MONOTONE_FROM + 1, limit)
        if least[w] < thresholds[w]:
            failures.append(least[w])
    logger.debug("omega sweep to %d: thresholds %s", limit, thresholds)
    return OmegaSweep(limit, thresholds, sorted(failures))


def totient_table(limit: int) -> list[int]:
    """ Euler's phi for 0 <= n <= limit by a linear sieve (phi(0) = 0). """
    phi = [0] * (limit + 1)
    if limit >= 1:
        phi[1] = 1
    primes: list[int] = []
    for i in range(2, limit + 1):
        if phi[i] == 0:
            phi[i] = i - 1
            primes.append(i)
        for p in primes:
            j = i * p
            if j > limit:
                break
            if i % p == 0:
                phi[j] = phi[i] * p
                break
            phi[j] = phi[i] * (p - 1)
    return phi


def phi_sum_mod3(N: int, r: int) -> int:
    """
    Sum of phi(n) over 1 <= n <= N with n = r mod 3.

    :raises DomainError: if N < 1 or r is not 0 or 1.
    """
    if N < 1:
        raise DomainError("phi_sum_mod3 needs N >= 1")
    if r not in (0, 1):
        raise DomainError("residue must be 0 or 1")
    phi = totient_table(N)
    start = 3 if r == 0 else 1
    return sum(phi[start::3])


class PhiSumConstants(NamedTuple):
    zero: CertifiedReal
    one: CertifiedReal


def phi_sum_constants(prec: int = DEFAULT_PRECISION_BITS) -> PhiSumConstants:
    """ 3/(4 pi^2) and 9/(8 pi^2): the leading constants of phi_sum_mod3 for r = 0, 1. """
    pi_squared = certified_pi(prec) ** 2
    return PhiSumConstants(Fraction(3, 4) / pi_squared, Fraction(9, 8) / pi_squared)

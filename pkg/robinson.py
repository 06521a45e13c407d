"""
Enumeration of monic integer polynomials of degree n and trace A whose
roots are all real and positive (or nonnegative).

The coefficients are chosen one level at a time along the normalized
derivative chain

    P_k(X) = sum_j (-1)^j [C(k, j) / C(n, j)] A_j X^(k-j) = (k!/n!) f^(n-k)(X),

which satisfies P_k' = k P_(k-1). Once A_1 .. A_(k-1) are fixed, P_k is
known up to its constant term, and P_k can only be real-rooted when that
constant lies between the values of P_k at the roots of P_(k-1): at
most the value at every local minimum, at least the value at every
local maximum. Each level therefore yields an integer window for A_k;
the windows are a superset, and every complete candidate passes the
exact root filter before it is emitted.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import comb, floor, ceil
from typing import Optional

from algorithms.mergesort import merge_all
from certified import CertifiedReal
from constants import Variant
from cubic_census import RationalScaling, count_P3_scaled
from data_structures.linked_stack import LinkedStack
from errors import DomainError
from parallel import run_partitioned, split_range
from polycore import (IntPoly, MonicIntPoly, RootInterval, all_roots_real_positive, count_real_roots,
                      isolate_real_roots, rational_gcd, rational_remainder, squarefree_part)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivativeChainLevel:
    """
    Level k of the derivative chain of a degree n polynomial whose first
    k - 1 coefficients are fixed.

    Attributes:
        n (int): degree of the polynomials being enumerated
        k (int): level, 2 <= k <= n
        prefix (tuple[int, ...]): A_1 .. A_(k-1)
    """

    n: int
    k: int
    prefix: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 2 <= self.k <= self.n or len(self.prefix) != self.k - 1:
            raise DomainError(f"bad chain level k={self.k} for n={self.n} with prefix {self.prefix}")

    def _chain_coefficients(self, degree: int, constant: Fraction = Fraction(0)) -> list[Fraction]:
        """ P_degree lowest degree first; the constant term of P_k is `constant`. """
        coeffs = [Fraction(0)] * (degree + 1)
        values = (1,) + self.prefix
        for j in range(min(degree + 1, len(values))):
            term = Fraction(comb(degree, j) * values[j], comb(self.n, j))
            coeffs[degree - j] = -term if j % 2 else term
        if degree == self.k:
            coeffs[0] = Fraction(constant)
        return coeffs

    def polynomial(self, constant: Fraction = Fraction(0)) -> list[Fraction]:
        """ P_k with the given constant term. """
        return self._chain_coefficients(self.k, constant)

    def previous(self) -> list[Fraction]:
        """ P_(k-1) = P_k' / k. """
        return self._chain_coefficients(self.k - 1)

    @property
    def binomial(self) -> int:
        return comb(self.n, self.k)

    @property
    def sign(self) -> int:
        """ (-1)^k: A_k = sign * C(n, k) * c for the constant term c of P_k. """
        return -1 if self.k % 2 else 1

    def maclaurin_cap(self) -> int:
        """ e_k <= C(n, k) (e_1 / n)^k for nonnegative roots. """
        cap = Fraction(comb(self.n, self.k) * self.prefix[0] ** self.k, self.n ** self.k)
        return floor(cap)


@dataclass(frozen=True)
class AdmissibleWindow:
    """
    Integer window [lower, upper] for A_k, before the sign condition.
    None stands for an unbounded side.
    """

    lower: Optional[int]
    upper: Optional[int]

    @property
    def is_empty(self) -> bool:
        return self.lower is not None and self.upper is not None and self.lower > self.upper

    def candidates(self, strict: bool, cap: int) -> range:
        """ A_k values satisfying the window, the sign condition and the cap. """
        lowest = 1 if strict else 0
        lower = lowest if self.lower is None else max(self.lower, lowest)
        upper = cap if self.upper is None else min(self.upper, cap)
        return range(lower, upper + 1)


def _interval_value(coeffs: list[Fraction], lo: Fraction, hi: Fraction) -> CertifiedReal:
    x = CertifiedReal(lo, hi)
    acc = CertifiedReal.exact(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _exact_value(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _is_value_at_root(remainder: list[Fraction], target: Fraction, previous: list[Fraction],
                      interval: RootInterval) -> bool:
    """ True iff remainder(beta) == target for the root beta of `previous` isolated by `interval`. """
    shifted = list(remainder)
    shifted[0] -= target
    common = rational_gcd(shifted, previous)
    if len(common) < 2:
        return False
    return count_real_roots(IntPoly.from_rationals(common), interval.lo, interval.hi) > 0


def _critical_bounds(remainder: list[Fraction], scale: int, previous: list[Fraction],
                     interval: RootInterval) -> tuple[int, int]:
    """
    (ceil w, floor w) for w = scale * remainder(beta), beta the root in `interval`.

    The interval is bisected until both integers are determined; an integral
    w is recognised through a common factor with P_(k-1).
    """
    checked: set[int] = set()
    current = interval
    while True:
        if current.is_exact:
            value = scale * _exact_value(remainder, current.lo)
            return ceil(value), floor(value)
        box = _interval_value(remainder, current.lo, current.hi) * scale
        lo_floor, hi_floor = floor(box.lo), floor(box.hi)
        lo_ceil, hi_ceil = ceil(box.lo), ceil(box.hi)
        if lo_floor == hi_floor and lo_ceil == hi_ceil:
            return lo_ceil, lo_floor
        if box.width < 1:
            m = hi_floor if lo_floor != hi_floor else lo_ceil
            if m not in checked:
                checked.add(m)
                if _is_value_at_root(remainder, Fraction(m, scale), previous, current):
                    return m, m
        current = current.bisect()


def _roots_in_half_line(poly: IntPoly, strict: bool) -> bool:
    """ Every root of poly real and > 0 (strict) or >= 0. """
    part = squarefree_part(poly)
    at_zero = part.coeffs[0] == 0
    if strict and at_zero:
        return False
    return count_real_roots(part, 0, None) + (1 if at_zero else 0) == part.degree


def admissible_constant_interval(level: DerivativeChainLevel, strict: bool = True) -> Optional[AdmissibleWindow]:
    """
    Integer window of A_k = (-1)^k C(n, k) c over the constant terms c for
    which P_k can have all roots real and in the required half-line.

    Returns None when P_(k-1) itself fails (the level is a dead end).
    """
    previous = level.previous()
    previous_int = IntPoly.from_rationals(previous)
    if not _roots_in_half_line(previous_int, strict):
        return None
    body = level.polynomial()
    remainder = rational_remainder(body, previous)
    # A_k = w(beta) exactly when P_k(beta) = 0
    scale = -level.sign * level.binomial
    lower: Optional[int] = None
    upper: Optional[int] = None
    above = 0
    for interval in isolate_real_roots(previous_int).descending():
        low_w, high_w = _critical_bounds(remainder, scale, previous, interval)
        if interval.multiplicity >= 2:
            caps_above, caps_below = True, True
        else:
            local_min = above % 2 == 0
            # c <= -Q(beta) at a local minimum, c >= -Q(beta) at a local maximum
            caps_above = local_min == (level.sign > 0)
            caps_below = not caps_above
        if caps_above:
            upper = high_w if upper is None else min(upper, high_w)
        if caps_below:
            lower = low_w if lower is None else max(lower, low_w)
        above += interval.multiplicity
    return AdmissibleWindow(lower, upper)


def _explore(n: int, A: int, strict: bool, A2_lo: int, A2_hi: int) -> list[MonicIntPoly]:
    """ Depth first search over the chain with A_2 restricted to [A2_lo, A2_hi]. """
    found = []
    frontier: LinkedStack[tuple[int, ...]] = LinkedStack()
    frontier.push((A,))
    while not frontier.is_empty():
        prefix = frontier.pop()
        k = len(prefix) + 1
        level = DerivativeChainLevel(n, k, prefix)
        window = admissible_constant_interval(level, strict)
        if window is None or window.is_empty:
            continue
        values = window.candidates(strict, level.maclaurin_cap())
        if k == 2:
            values = range(max(values.start, A2_lo), min(values.stop, A2_hi + 1))
        if k == n:
            for value in values:
                candidate = MonicIntPoly(prefix + (value,))
                if all_roots_real_positive(candidate, strict):
                    found.append(candidate)
        else:
            # pushed largest first so that the smallest prefix is expanded next
            for value in reversed(values):
                frontier.push(prefix + (value,))
    logger.debug("n=%d A=%d A_2 in [%d, %d]: %d polynomials", n, A, A2_lo, A2_hi, len(found))
    return found


def enumerate_positive_real_monic(n: int, A: int, strict: bool = True, workers: int = 1) -> list[MonicIntPoly]:
    """
    All monic integer polynomials of degree n and trace A with every root
    real and > 0 (strict) or >= 0, sorted by (A_2, ..., A_n).
    """
    if n < 1:
        raise DomainError("degree must be at least 1")
    if A < 0:
        raise DomainError("negative traces are not supported")
    if n == 1:
        return [] if strict and A == 0 else [MonicIntPoly((A,))]
    # Newton: A_2 <= (n - 1) A^2 / (2n) for real roots
    top = (n - 1) * A * A // (2 * n)
    chunks = split_range(0, top, max(workers, 1))
    parts = run_partitioned(partial(_explore, n, A, strict), chunks, workers)
    return merge_all(parts, key=MonicIntPoly.tail)


def count_positive_real_monic(n: int, A: int, strict: bool = True, workers: int = 1) -> int:
    return len(enumerate_positive_real_monic(n, A, strict, workers))


def count_prefix3(n: int, A: int, workers: int = 1) -> int:
    """
    Number of (A_2, A_3) for which some degree n polynomial with trace A and
    nonnegative real roots starts with (A, A_2, A_3).

    :raises DomainError: if n < 4.
    """
    if n < 4:
        raise DomainError("count_prefix3 needs n >= 4")
    return count_P3_scaled(A, RationalScaling.prefix3(n), Variant.NONNEG, workers)


def prefix3_main_term(n: int, A: int) -> Fraction:
    """ (9/640) (1 - 1/n)^2 (1 - 2/n) A^5. """
    return Fraction(9, 640) * (1 - Fraction(1, n)) ** 2 * (1 - Fraction(2, n)) * Fraction(A) ** 5


def prefix3_error_budget(n: int, A: int) -> Fraction:
    return Fraction(9, 2) * A**3 + Fraction(3, 2) * n * A**2 + 3 * A

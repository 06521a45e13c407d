"""
Closed-form census of cubic polynomials X^3 - A X^2 + A_2 X - A_3 with
real positive (or nonnegative) roots, the rationally scaled variant,
and counts with a bounded discriminant.

For fixed A and A_2 the cubic is real-rooted exactly when A_3 lies
between

    G-(A_2), G+(A_2) = (9 A A_2 - 2 A^3 -/+ 2 (A^2 - 3 A_2)^(3/2)) / 27,

so every count below is a sum of integer interval lengths. The
irrational part is handled by the identity floor((N + x) / R) =
floor((N + floor(x)) / R) for integers N, R > 0 and real x >= 0, with
floor(x) an exact integer square root.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from math import lcm
from typing import NamedTuple, Optional, Union

from gmpy2 import is_square, isqrt

from certified import CertifiedReal, rational_power
from constants import DEFAULT_PRECISION_BITS, Variant
from errors import DomainError
from parallel import sum_partitioned

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

# Integer slack on top of the bounded-discriminant bounds: a window of
# real length L holds at most L + 1 integers, the two-sided window at
# most L + 2.
BRANCH_ONE_SLACK = 1
BRANCH_TWO_SLACK = 2
GLOBAL_SLACK = 2


def _isqrt(m: int) -> int:
    return int(isqrt(m))


def floor_gplus(A: int, A2: int) -> int:
    """
    floor(G+(A_2)) computed exactly.

    :raises DomainError: if A^2 - 3 A_2 < 0.
    """
    D = A * A - 3 * A2
    if D < 0:
        raise DomainError(f"A^2 - 3A_2 = {D} < 0: no real-rooted cubic with A={A}, A_2={A2}")
    N = 9 * A * A2 - 2 * A**3
    return (N + _isqrt(4 * D**3)) // 27


def ceil_gminus(A: int, A2: int) -> int:
    """
    ceil(G-(A_2)) computed exactly.

    :raises DomainError: if A^2 - 3 A_2 < 0.
    """
    D = A * A - 3 * A2
    if D < 0:
        raise DomainError(f"A^2 - 3A_2 = {D} < 0: no real-rooted cubic with A={A}, A_2={A2}")
    N = 9 * A * A2 - 2 * A**3
    return -((-N + _isqrt(4 * D**3)) // 27)


@dataclass(frozen=True)
class GPair:
    """
    The integer window [ceil G-, floor G+] of admissible A_3 for fixed (A, A_2).
    """

    A: int
    A2: int
    floor_gplus: int
    ceil_gminus: int

    @property
    def D(self) -> int:
        return self.A * self.A - 3 * self.A2

    @classmethod
    def of(cls, A: int, A2: int) -> GPair:
        return cls(A, A2, floor_gplus(A, A2), ceil_gminus(A, A2))


def count_real_rooted(A: int, A2: int) -> int:
    """ Number of integers A_3 of any sign making X^3 - A X^2 + A_2 X - A_3 real-rooted. """
    if A * A - 3 * A2 < 0:
        return 0
    window = GPair.of(A, A2)
    return max(0, window.floor_gplus - window.ceil_gminus + 1)


def _plus_rows(A: int, lo: int, hi: int) -> int:
    """ Rows lo..hi of the strict census sum. """
    quarter = A * A // 4
    total = 0
    for A2 in range(lo, hi + 1):
        top = floor_gplus(A, A2)
        if A2 <= quarter:
            total += max(0, top)
        else:
            total += max(0, top - max(ceil_gminus(A, A2), 1) + 1)
    return total


def count_P3_plus(A: int, workers: int = 1) -> int:
    """
    Number of cubics with trace A and all roots real and > 0.

    Rows with A_2 <= A^2/4 have ceil G- <= 0 and contribute floor G+;
    the remaining rows up to A^2/3 contribute the window clipped at 1.
    """
    if A < 1:
        return 0
    return sum_partitioned(partial(_plus_rows, A), 1, A * A // 3, workers)


def count_P3_zeroplus(A: int) -> int:
    """
    Number of cubics with trace A and all roots real and >= 0.

    Beyond the strictly positive ones these are X (X^2 - A X + A_2) for
    0 <= A_2 <= A^2/4; a positive A_3 forces positive roots.

    :raises DomainError: if A < 0.
    """
    if A < 0:
        raise DomainError("negative traces are not supported")
    if A == 0:
        return 1
    return count_P3_plus(A) + A * A // 4 + 1


@dataclass(frozen=True)
class RationalScaling:
    """
    Positive rational weights: the scaled cubic is
    X^3 - alpha A X^2 + beta A_2 X - gamma A_3.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            value = Fraction(getattr(self, name))
            if value <= 0:
                raise DomainError(f"scaling {name} must be positive, got {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> RationalScaling:
        return cls(Fraction(1), Fraction(1), Fraction(1))

    @classmethod
    def prefix3(cls, n: int) -> RationalScaling:
        """ Scaling of (6/n!) f^(n-3) for a degree n polynomial f. """
        return cls(Fraction(3, n), Fraction(6, n * (n - 1)), Fraction(6, n * (n - 1) * (n - 2)))

    @classmethod
    def parse(cls, texts: list[str]) -> RationalScaling:
        try:
            return cls(*(Fraction(text) for text in texts))
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"cannot read scaling {texts}: {e}") from e


def _scaled_window(a: Fraction, b: Fraction, gamma: Fraction) -> Optional[tuple[int, int]]:
    """
    (ceil(G-/gamma), floor(G+/gamma)) for the cubic X^3 - a X^2 + b X - c,
    or None when a^2 - 3b < 0.
    """
    d = a * a - 3 * b
    if d < 0:
        return None
    N = 9 * a * b - 2 * a**3
    R = 27 * gamma
    # clear denominators so that sqrt(4 d^3) scales to sqrt of an integer
    Q = lcm(N.denominator, R.denominator, d.denominator**2)
    P = int(N * Q)
    R_int = int(R * Q)
    T = int(4 * d**3 * Q * Q)
    s = _isqrt(T)
    return -((-P + s) // R_int), (P + s) // R_int


def _scaled_rows(A: int, scaling: RationalScaling, variant: Variant, lo: int, hi: int) -> int:
    a = scaling.alpha * A
    lowest = 1 if variant == Variant.STRICT else 0
    total = 0
    for A2 in range(lo, hi + 1):
        window = _scaled_window(a, scaling.beta * A2, scaling.gamma)
        if window is None:
            continue
        bottom, top = window
        total += max(0, top - max(bottom, lowest) + 1)
    return total


def count_P3_scaled(A: int, scaling: RationalScaling, variant: Variant = Variant.STRICT,
                    workers: int = 1) -> int:
    """
    Number of integer pairs (A_2, A_3) with X^3 - alpha A X^2 + beta A_2 X -
    gamma A_3 real-rooted with roots > 0 (STRICT, A_2, A_3 >= 1) or >= 0
    (NONNEG, A_2, A_3 >= 0).
    """
    if variant == Variant.STRICT and A < 1:
        return 0
    if A < 0:
        raise DomainError("negative traces are not supported")
    a = scaling.alpha * A
    top = a * a / (3 * scaling.beta)
    lowest = 1 if variant == Variant.STRICT else 0
    return sum_partitioned(partial(_scaled_rows, A, scaling, variant), lowest, top.numerator // top.denominator,
                           workers)


class MainTermEstimate(NamedTuple):
    """ Main term and two error budgets; `sharp_bound` is reported only. """

    main_term: Fraction
    error_bound: CertifiedReal
    sharp_bound: CertifiedReal

    def within(self, count: int) -> bool:
        return abs(count - self.main_term) <= self.error_bound.hi


def main_term_and_error(A: int, scaling: RationalScaling, variant: Variant = Variant.STRICT) -> MainTermEstimate:
    al, be, ga = scaling.alpha, scaling.beta, scaling.gamma
    main = al**5 * Fraction(A)**5 / (480 * be * ga)
    quad = (1 / be if variant == Variant.STRICT else 2 / be) + 1 / ga
    budget = al**3 * A**3 / ga + quad * al**2 * A**2 + al * be * A / ga
    sharp_quad = (Fraction(11, 12) if variant == Variant.STRICT else Fraction(7, 6)) / be + Fraction(5, 54) / ga
    sharp = 3 * al**3 * A**3 / (8 * ga) + sharp_quad * al**2 * A**2 + al * be * A / (3 * ga)
    return MainTermEstimate(main, CertifiedReal.exact(budget), CertifiedReal.exact(sharp))


def _window_count(lo: int, hi: int, clip: Optional[int]) -> int:
    if clip is not None:
        lo, hi = max(lo, -clip), min(hi, clip)
    return max(0, hi - lo + 1)


def _bounded_disc_windows(A: int, B: int, D: int) -> Optional[tuple[tuple[int, int], Optional[tuple[int, int]]]]:
    """
    Integer windows for A_3: the outer one where disc >= 0 and the inner one
    where disc > D. None when no A_3 gives a real-rooted cubic.

    With u = 54 A_3 - b, disc >= 0 reads u^2 <= Q0 and disc <= D reads u^2 >= Q0 - 108 D.
    """
    b = -4 * A**3 + 18 * A * B
    e = A * A * B * B - 4 * B**3
    q0 = b * b + 108 * e
    if q0 < 0:
        return None
    s = _isqrt(q0)
    outer = (-((s - b) // 54), (b + s) // 54)
    qd = q0 - 108 * D
    if qd <= 0:
        return outer, None
    t = _isqrt(qd)
    if is_square(qd):
        t -= 1
    return outer, (-((t - b) // 54), (b + t) // 54)


def count_P3_bounded_disc(A: int, B: int, D: int, height: Optional[int] = None) -> int:
    """
    Number of integers A_3 (any sign, optionally |A_3| <= height) with
    X^3 - A X^2 + B X - A_3 real-rooted and discriminant <= D.
    """
    if D < 0:
        return 0
    windows = _bounded_disc_windows(A, B, D)
    if windows is None:
        return 0
    outer, inner = windows
    total = _window_count(*outer, height)
    if inner is not None:
        total -= _window_count(*inner, height)
    return total


@dataclass(frozen=True)
class W1Bound:
    """
    Bounds on count_P3_bounded_disc.

    Attributes:
        piecewise: the branch bound, None when A^2 - 3B < 0
        global_bound: 2/(3 sqrt 3) sqrt(D)
        branch: 1 or 2 for the piecewise branch in force, 0 when undefined
    """

    piecewise: Optional[CertifiedReal]
    global_bound: CertifiedReal
    branch: int

    def holds_for(self, count: int) -> bool:
        """ count <= bound + slack for both bounds. """
        if self.piecewise is not None:
            slack = BRANCH_ONE_SLACK if self.branch == 1 else BRANCH_TWO_SLACK
            if count > self.piecewise.hi + slack:
                return False
        return count <= self.global_bound.hi + GLOBAL_SLACK

    def stated_violated_by(self, count: int) -> bool:
        """ True when count certainly exceeds the bound without slack. """
        exceeds = self.global_bound.lo < count
        if self.piecewise is not None:
            exceeds = exceeds or self.piecewise.lo < count
        return exceeds


def global_disc_bound(D: int, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    if D < 0:
        raise DomainError("discriminant bound needs D >= 0")
    return rational_power(Fraction(D, 3), Fraction(1, 2), prec) * Fraction(2, 3)


def w1_upper_bound(A: int, B: int, D: int, prec: int = DEFAULT_PRECISION_BITS) -> W1Bound:
    d = A * A - 3 * B
    global_bound = global_disc_bound(D, prec)
    if d < 0:
        return W1Bound(None, global_bound, 0)
    d_three_halves = rational_power(d, Fraction(3, 2), prec)
    if 27 * D >= 4 * d**3:
        return W1Bound(d_three_halves * Fraction(4, 27), global_bound, 1)
    return W1Bound(Fraction(D) / d_three_halves, global_bound, 2)


class HeightDiscCensus(NamedTuple):
    count: int
    remark_bound: CertifiedReal
    corrected_bound: CertifiedReal


def _height_rows(H: int, D: int, lo: int, hi: int) -> int:
    return sum(count_P3_bounded_disc(A, B, D, height=H) for A in range(lo, hi + 1) for B in range(-H, H + 1))


def count_height_bounded_disc(H: int, D: int, workers: int = 1) -> HeightDiscCensus:
    """
    Real-rooted cubics X^3 - A X^2 + B X - C with |A|, |B|, |C| <= H and
    0 <= disc <= D, with the bound summed over the (A, B) box and its form
    with the integer slack added per pair.
    """
    if H < 0:
        raise DomainError("height must be nonnegative")
    count = sum_partitioned(partial(_height_rows, H, D), -H, H, workers)
    pairs = (2 * H + 1) ** 2
    per_pair = global_disc_bound(D)
    return HeightDiscCensus(count, per_pair * pairs, (per_pair + GLOBAL_SLACK) * pairs)


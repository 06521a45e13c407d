"""
Certified reals: closed rational intervals guaranteed to contain a real
number, with outward rounding to a dyadic working precision.

Elementary constants and logarithms come from mpmath's low level
``libmp`` routines, which accept an explicit rounding direction. Rational
powers are computed with exact integer roots (gmpy2), so algebraic
quantities such as 3^(3/2) never touch floating point.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

import gmpy2
from mpmath import libmp

from constants import DEFAULT_PRECISION_BITS, MAX_PRECISION_BITS
from errors import DomainError, PrecisionExhausted

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


def _floor_dyadic(q: Fraction, prec: int) -> Fraction:
    """
    Largest dyadic number with about `prec` significant bits that is <= q.
    Small rationals are returned unchanged.
    """
    num, den = q.numerator, q.denominator
    if num == 0 or (abs(num).bit_length() <= prec and den.bit_length() <= prec):
        return q
    shift = prec - (abs(num).bit_length() - den.bit_length())
    if shift >= 0:
        return Fraction((num << shift) // den, 1 << shift)
    return Fraction((num // (den << -shift)) << -shift)


def _ceil_dyadic(q: Fraction, prec: int) -> Fraction:
    return -_floor_dyadic(-q, prec)


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def decimal_string(q: Fraction, digits: int = 6, upward: bool = True) -> str:
    """
    Fixed point rendering of q with `digits` decimals, rounded toward
    +infinity when `upward` is set and toward -infinity otherwise.
    """
    scaled = q * 10**digits
    whole = -((-scaled.numerator) // scaled.denominator) if upward else scaled.numerator // scaled.denominator
    sign = "-" if whole < 0 else ""
    whole = abs(whole)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole // 10**digits}.{whole % 10**digits:0{digits}d}"


@dataclass(frozen=True)
class CertifiedReal:
    """
    A real number known to lie in the closed interval [lo, hi].

    Attributes:
        lo (Fraction): certified lower end
        hi (Fraction): certified upper end
        prec (int): working precision in bits used when results are rounded outward
    """

    lo: Fraction
    hi: Fraction
    prec: int = DEFAULT_PRECISION_BITS

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _as_fraction(self.lo))
        object.__setattr__(self, "hi", _as_fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Rational, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
        value = _as_fraction(value)
        return cls(value, value, prec)

    @classmethod
    def rounded(cls, lo: Fraction, hi: Fraction, prec: int) -> CertifiedReal:
        """ Interval [lo, hi] widened outward to dyadic endpoints. """
        return cls(_floor_dyadic(lo, prec), _ceil_dyadic(hi, prec), prec)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def _coerce(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        if isinstance(other, CertifiedReal):
            return other
        return CertifiedReal.exact(other, self.prec)

    def __neg__(self) -> CertifiedReal:
        return CertifiedReal(-self.hi, -self.lo, self.prec)

    def __add__(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        other = self._coerce(other)
        prec = max(self.prec, other.prec)
        return CertifiedReal.rounded(self.lo + other.lo, self.hi + other.hi, prec)

    __radd__ = __add__

    def __sub__(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> CertifiedReal:
        return self._coerce(other) - self

    def __mul__(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        other = self._coerce(other)
        prec = max(self.prec, other.prec)
        ends = [self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi]
        return CertifiedReal.rounded(min(ends), max(ends), prec)

    __rmul__ = __mul__

    def reciprocal(self) -> CertifiedReal:
        """
        :raises DomainError: if the interval contains zero.
        """
        if self.lo <= 0 <= self.hi:
            raise DomainError("reciprocal of an interval containing 0")
        return CertifiedReal.rounded(1 / self.hi, 1 / self.lo, self.prec)

    def __truediv__(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other: Rational) -> CertifiedReal:
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> CertifiedReal:
        if not isinstance(exponent, int):
            return certified_power(self, _as_fraction(exponent))
        if exponent < 0:
            return (self ** -exponent).reciprocal()
        lo_pow, hi_pow = self.lo ** exponent, self.hi ** exponent
        if self.lo >= 0:
            return CertifiedReal.rounded(lo_pow, hi_pow, self.prec)
        if self.hi <= 0:
            if exponent % 2 == 0:
                return CertifiedReal.rounded(hi_pow, lo_pow, self.prec)
            return CertifiedReal.rounded(lo_pow, hi_pow, self.prec)
        if exponent % 2 == 0:
            return CertifiedReal.rounded(Fraction(0), max(lo_pow, hi_pow), self.prec)
        return CertifiedReal.rounded(lo_pow, hi_pow, self.prec)

    def max_with(self, other: Union[CertifiedReal, Rational]) -> CertifiedReal:
        other = self._coerce(other)
        return CertifiedReal(max(self.lo, other.lo), max(self.hi, other.hi), max(self.prec, other.prec))

    def less_than(self, other: Union[CertifiedReal, Rational]) -> Optional[bool]:
        """ True/False when the order is certain, None when the intervals overlap. """
        other = self._coerce(other)
        if self.hi < other.lo:
            return True
        if self.lo >= other.hi:
            return False
        return None

    def at_most(self, other: Union[CertifiedReal, Rational]) -> Optional[bool]:
        other = self._coerce(other)
        if self.hi <= other.lo:
            return True
        if self.lo > other.hi:
            return False
        return None

    def upper_decimal(self, digits: int = 6) -> str:
        return decimal_string(self.hi, digits, upward=True)

    def lower_decimal(self, digits: int = 6) -> str:
        return decimal_string(self.lo, digits, upward=False)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"[{self.lower_decimal()}, {self.upper_decimal()}]"


def _from_mpf_pair(lo_raw, hi_raw, prec: int) -> CertifiedReal:
    lo = Fraction(*libmp.to_rational(lo_raw))
    hi = Fraction(*libmp.to_rational(hi_raw))
    return CertifiedReal(lo, hi, prec)


def certified_pi(prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    return _from_mpf_pair(libmp.mpf_pi(prec, libmp.round_floor), libmp.mpf_pi(prec, libmp.round_ceiling), prec)


def certified_e(prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    return _from_mpf_pair(libmp.mpf_e(prec, libmp.round_floor), libmp.mpf_e(prec, libmp.round_ceiling), prec)


def certified_log(value: Union[CertifiedReal, Rational], prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """
    Natural logarithm of a positive rational or certified real.

    :raises DomainError: if the argument is not certainly positive.
    """
    if not isinstance(value, CertifiedReal):
        value = CertifiedReal.exact(value, prec)
    if value.lo <= 0:
        raise DomainError(f"log of a value not certainly positive: {value}")
    prec = max(prec, value.prec)
    lo_arg = libmp.from_rational(value.lo.numerator, value.lo.denominator, prec, libmp.round_floor)
    hi_arg = libmp.from_rational(value.hi.numerator, value.hi.denominator, prec, libmp.round_ceiling)
    return _from_mpf_pair(libmp.mpf_log(lo_arg, prec, libmp.round_floor),
                          libmp.mpf_log(hi_arg, prec, libmp.round_ceiling), prec)


def _root_bounds(value: Fraction, q: int, prec: int) -> tuple[Fraction, Fraction]:
    """ Dyadic bounds on value**(1/q) for value > 0, from exact integer roots. """
    num, den = value.numerator, value.denominator
    num_root, num_exact = gmpy2.iroot(gmpy2.mpz(num), q)
    den_root, den_exact = gmpy2.iroot(gmpy2.mpz(den), q)
    if num_exact and den_exact:
        exact = Fraction(int(num_root), int(den_root))
        return exact, exact
    scale = max(prec - (num.bit_length() - den.bit_length()) // q, 0)
    root, exact = gmpy2.iroot(gmpy2.mpz((num << (q * scale)) // den), q)
    lo = Fraction(int(root), 1 << scale)
    return lo, lo + Fraction(1, 1 << scale)


def rational_power(base: Rational, exponent: Rational, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
    """
    base**exponent for a positive rational base and a rational exponent.

    The result is a point interval whenever the value is rational.

    :raises DomainError: if base <= 0 (base == 0 is allowed for exponent > 0).
    """
    base, exponent = _as_fraction(base), _as_fraction(exponent)
    if base == 0 and exponent > 0:
        return CertifiedReal.exact(0, prec)
    if base <= 0:
        raise DomainError(f"rational power of a nonpositive base {base}")
    powered = base ** exponent.numerator
    lo, hi = _root_bounds(powered, exponent.denominator, prec)
    return CertifiedReal(lo, hi, prec)


def certified_power(value: CertifiedReal, exponent: Rational) -> CertifiedReal:
    """ value**exponent for an interval that is certainly nonnegative. """
    exponent = _as_fraction(exponent)
    if value.lo < 0 or (value.lo == 0 and exponent <= 0):
        raise DomainError(f"power {exponent} of an interval not certainly positive: {value}")
    if exponent.denominator == 1:
        return value ** int(exponent)
    low = rational_power(value.lo, exponent, value.prec)
    high = rational_power(value.hi, exponent, value.prec)
    if exponent > 0:
        return CertifiedReal(low.lo, high.hi, value.prec)
    return CertifiedReal(high.lo, low.hi, value.prec)


def decide(build: Callable[[int], tuple[CertifiedReal, CertifiedReal]], strict: bool = True,
           prec: int = DEFAULT_PRECISION_BITS) -> bool:
    """
    Decide lhs < rhs (or lhs <= rhs when `strict` is False) for two certified
    reals produced by `build(prec)`, doubling the precision until the
    intervals separate.

    :raises PrecisionExhausted: if the comparison is still open at MAX_PRECISION_BITS.
    """
    while prec <= MAX_PRECISION_BITS:
        lhs, rhs = build(prec)
        verdict = lhs.less_than(rhs) if strict else lhs.at_most(rhs)
        if verdict is not None:
            return verdict
        logger.debug("comparison unresolved at %d bits: %s vs %s", prec, lhs, rhs)
        prec *= 2
    raise PrecisionExhausted(f"comparison unresolved at {MAX_PRECISION_BITS} bits")

"""
Exact polynomial arithmetic over the integers: discriminants, integer
roots, square-free decomposition, Sturm chains, real root isolation, and
the decision "all roots real and positive".

Nothing in this module uses floating point.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count
from math import gcd, lcm
from typing import Iterable, Iterator, Optional, Sequence, Union

import gmpy2
import sympy

from data_structures.linked_stack import LinkedStack
from errors import DomainError

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

_X = sympy.Symbol("X")


def _trim(coeffs: Sequence) -> list:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [0]


@dataclass(frozen=True)
class IntPoly:
    """
    A polynomial with arbitrary precision integer coefficients.

    Attributes:
        coeffs (tuple[int, ...]): coefficients, lowest degree first, with no
            trailing zeros (the zero polynomial is ``(0,)``)
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in _trim(self.coeffs)))

    @classmethod
    def from_roots(cls, roots: Iterable[int], leading: int = 1) -> IntPoly:
        poly = cls((leading,))
        for root in roots:
            poly = poly * cls((-root, 1))
        return poly

    @classmethod
    def from_rationals(cls, coeffs: Sequence[Number]) -> IntPoly:
        """ Primitive integer polynomial with positive leading coefficient
            proportional to the given rational coefficients.
        """
        fracs = [Fraction(c) for c in _trim(coeffs)]
        scale = lcm(*(f.denominator for f in fracs))
        return cls(tuple(int(f * scale) for f in fracs)).primitive()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    def __call__(self, x: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """ Exact sign of the polynomial at a rational point, in integers only. """
        num, den = x.numerator, x.denominator
        acc = 0
        den_power = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * den_power
            den_power *= den
        # acc = den^degree * f(x); den > 0
        return (acc > 0) - (acc < 0)

    def sign_at_infinity(self, direction: int) -> int:
        lead = 1 if self.leading > 0 else -1
        if direction < 0 and self.degree % 2 == 1:
            return -lead
        return lead

    def derivative(self) -> IntPoly:
        if self.degree == 0:
            return IntPoly((0,))
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def content(self) -> int:
        return gcd(*self.coeffs) if not self.is_zero else 1

    def primitive(self) -> IntPoly:
        """ Divide out the content and make the leading coefficient positive. """
        if self.is_zero:
            return self
        c = self.content() * (1 if self.leading > 0 else -1)
        return IntPoly(tuple(x // c for x in self.coeffs))

    def reduced(self) -> IntPoly:
        """ Divide out the (positive) content, keeping every sign. """
        if self.is_zero:
            return self
        c = self.content()
        return IntPoly(tuple(x // c for x in self.coeffs))

    def deflate_zero_roots(self) -> IntPoly:
        """ Remove every factor X. """
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
        return IntPoly(tuple(coeffs))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPoly) -> IntPoly:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: Union[IntPoly, int]) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)), _X, domain="ZZ")

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("X" if k == 1 else f"X^{k}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class MonicIntPoly:
    """
    A monic polynomial in the alternating convention
    X^n - A_1 X^(n-1) + A_2 X^(n-2) - ... + (-1)^n A_n.

    Attributes:
        A (tuple[int, ...]): the coefficients A_1 ... A_n
    """

    A: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", tuple(int(a) for a in self.A))
        if len(self.A) < 1:
            raise DomainError("a monic polynomial needs degree >= 1")

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def trace(self) -> int:
        return self.A[0]

    def tail(self) -> tuple[int, ...]:
        """ (A_2, ..., A_n), the enumeration sort key. """
        return self.A[1:]

    def to_int_poly(self) -> IntPoly:
        coeffs = [0] * (self.n + 1)
        coeffs[self.n] = 1
        for k, a in enumerate(self.A, start=1):
            coeffs[self.n - k] = a if k % 2 == 0 else -a
        return IntPoly(tuple(coeffs))

    @classmethod
    def from_int_poly(cls, poly: IntPoly) -> MonicIntPoly:
        if poly.leading != 1 or poly.degree < 1:
            raise DomainError(f"{poly} is not monic of positive degree")
        n = poly.degree
        return cls(tuple(poly.coeffs[n - k] * (-1) ** k for k in range(1, n + 1)))

    def __str__(self) -> str:
        return str(self.to_int_poly())


def discriminant(f: IntPoly) -> int:
    """
    Standard discriminant (-1)^(n(n-1)/2) Res(f, f') / lc(f).

    :raises DomainError: if f is constant.
    """
    if f.degree < 1:
        raise DomainError("discriminant of a constant polynomial")
    return int(f.to_sympy().discriminant())


def cubic_discriminant(A: int, B: int, C: int) -> int:
    """ Discriminant of X^3 - A X^2 + B X - C. """
    return -27 * C * C + (-4 * A**3 + 18 * A * B) * C + (A * A * B * B - 4 * B**3)


def ikth_root_floor(m: int, k: int) -> int:
    """
    The integer r with r^k <= m < (r+1)^k.

    :raises DomainError: if m < 0 or k < 1.
    """
    if m < 0 or k < 1:
        raise DomainError(f"ikth_root_floor needs m >= 0 and k >= 1, got ({m}, {k})")
    return int(gmpy2.iroot(gmpy2.mpz(m), k)[0])


# Rational polynomial helpers (coefficient lists, lowest degree first).

def _rat(poly: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in poly.coeffs]


def _rat_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    quotient = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        factor = rem[shift + len(b) - 1] / lead
        quotient[shift] = factor
        if factor:
            for i, c in enumerate(b):
                rem[shift + i] -= factor * c
    return _trim(quotient), _trim(rem[:len(b) - 1] or [Fraction(0)])


def _rat_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while any(b):
        a, b = b, _rat_divmod(a, b)[1]
    return [c / a[-1] for c in a]


def _rat_derivative(a: list[Fraction]) -> list[Fraction]:
    return _trim([k * c for k, c in enumerate(a) if k > 0] or [Fraction(0)])


def _rat_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    a = a + [Fraction(0)] * (size - len(a))
    b = b + [Fraction(0)] * (size - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def rational_remainder(a: Sequence[Number], b: Sequence[Number]) -> list[Fraction]:
    """ Remainder of a by b over the rationals (coefficients lowest degree first). """
    return _rat_divmod([Fraction(c) for c in a], [Fraction(c) for c in b])[1]


def rational_gcd(a: Sequence[Number], b: Sequence[Number]) -> list[Fraction]:
    """ Monic gcd over the rationals. """
    return _rat_gcd([Fraction(c) for c in a], [Fraction(c) for c in b])


def squarefree_part(f: IntPoly) -> IntPoly:
    """ f / gcd(f, f'), primitive with positive leading coefficient. """
    if f.degree < 1:
        return f.primitive()
    rat = _rat(f)
    g = _rat_gcd(rat, _rat_derivative(rat))
    return IntPoly.from_rationals(_rat_divmod(rat, g)[0])


def square_free_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """
    Factors g_i with f = c * prod g_i^i, each g_i square-free, primitive and
    pairwise coprime (Yun's repeated gcd scheme). Constant factors are omitted.
    """
    if f.degree < 1:
        return []
    a = _rat(f)
    da = _rat_derivative(a)
    g = _rat_gcd(a, da)
    b = _rat_divmod(a, g)[0]
    c = _rat_divmod(da, g)[0]
    d = _rat_sub(c, _rat_derivative(b))
    factors = []
    multiplicity = 1
    while len(b) > 1:
        h = _rat_gcd(b, d)
        b = _rat_divmod(b, h)[0]
        c = _rat_divmod(d, h)[0]
        d = _rat_sub(c, _rat_derivative(b))
        if len(h) > 1:
            factors.append((IntPoly.from_rationals(h), multiplicity))
        multiplicity += 1
    return factors


def _positive_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """ Pseudo-remainder of a by b scaled by a positive power of |lc(b)|. """
    rem = list(a.coeffs)
    lead = b.leading
    sign, mag = (1 if lead > 0 else -1), abs(lead)
    while len(rem) >= len(b.coeffs) and any(rem):
        shift = len(rem) - len(b.coeffs)
        top = rem[-1]
        rem = [mag * x for x in rem]
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= sign * top * c
        rem.pop()
        rem = _trim(rem)
        if rem == [0]:
            break
    return IntPoly(tuple(rem)).reduced()


def sturm_sequence(f: IntPoly) -> list[IntPoly]:
    """ Sturm chain f, f', -rem, ... with every member scaled by positive integers. """
    chain = [f.reduced(), f.derivative().reduced()]
    while chain[-1].degree > 0:
        rem = _positive_prem(chain[-2], chain[-1])
        if rem.is_zero:
            break
        chain.append(-rem)
    return chain


def _variations(chain: Sequence[IntPoly], x: Optional[Fraction], direction: int = 1) -> int:
    signs = []
    for poly in chain:
        s = poly.sign_at(x) if x is not None else poly.sign_at_infinity(direction)
        if s:
            signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(f: IntPoly, lo: Optional[Number] = None, hi: Optional[Number] = None,
                     chain: Optional[list[IntPoly]] = None) -> int:
    """
    Number of distinct real roots of f in (lo, hi]; None stands for -inf / +inf.
    """
    if f.degree < 1:
        return 0
    if chain is None:
        chain = sturm_sequence(squarefree_part(f))
    lo_var = _variations(chain, None if lo is None else Fraction(lo), -1)
    hi_var = _variations(chain, None if hi is None else Fraction(hi), 1)
    return lo_var - hi_var


def root_bound(f: IntPoly) -> int:
    """ B with every complex root strictly inside |z| < B (Cauchy). """
    lead = abs(f.leading)
    biggest = max((abs(c) for c in f.coeffs[:-1]), default=0)
    return 1 + -(-biggest // lead) + 1


@dataclass(frozen=True)
class RootInterval:
    """
    A closed rational interval holding exactly one distinct real root.

    Attributes:
        lo, hi (Fraction): the interval ends; equal when the root is known exactly
        multiplicity (int): multiplicity of the root in the source polynomial
        factor (IntPoly): square-free factor vanishing at the root, used for refinement
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: IntPoly = field(compare=False, repr=False)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def bisect(self) -> RootInterval:
        """ Halve the interval around its root. """
        if self.is_exact:
            return self
        mid = (self.lo + self.hi) / 2
        s = self.factor.sign_at(mid)
        if s == 0:
            return RootInterval(mid, mid, self.multiplicity, self.factor)
        if s == self.factor.sign_at(self.lo):
            return RootInterval(mid, self.hi, self.multiplicity, self.factor)
        return RootInterval(self.lo, mid, self.multiplicity, self.factor)

    def refine(self, width: Fraction) -> RootInterval:
        current = self
        while current.width > width:
            current = current.bisect()
        return current


@dataclass(frozen=True)
class IsolatedRoots:
    """
    The distinct real roots of a polynomial, in increasing order.

    Attributes:
        intervals (tuple[RootInterval, ...]): strictly ordered, pairwise disjoint
    """

    intervals: tuple[RootInterval, ...]

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self) -> Iterator[RootInterval]:
        return iter(self.intervals)

    def __getitem__(self, index: int) -> RootInterval:
        return self.intervals[index]

    @property
    def total_multiplicity(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)

    def refine(self, width: Number) -> IsolatedRoots:
        """ Bisect every interval down to at most `width`. """
        width = Fraction(width)
        return IsolatedRoots(tuple(iv.refine(width) for iv in self.intervals))

    def descending(self) -> list[RootInterval]:
        return list(reversed(self.intervals))


def _split_point(g: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """ A point strictly inside (lo, hi) where g does not vanish. """
    for den in count(2):
        for num in range(1, den):
            point = lo + (hi - lo) * Fraction(num, den)
            if g.sign_at(point) != 0:
                return point
    raise AssertionError("unreachable")


def _isolate_squarefree(g: IntPoly) -> list[tuple[Fraction, Fraction]]:
    """ Isolating intervals for the real roots of a square-free g; no endpoint is a root. """
    if g.degree < 1:
        return []
    if g.degree == 1:
        root = Fraction(-g.coeffs[0], g.coeffs[1])
        return [(root, root)]
    chain = sturm_sequence(g)
    bound = Fraction(root_bound(g))
    found = []
    pending = LinkedStack()
    pending.push((-bound, bound))
    while not pending.is_empty():
        lo, hi = pending.pop()
        inside = _variations(chain, lo) - _variations(chain, hi)
        if inside == 0:
            continue
        if inside == 1:
            found.append((lo, hi))
            continue
        mid = _split_point(g, lo, hi)
        pending.push((mid, hi))
        pending.push((lo, mid))
    return sorted(found)


def isolate_real_roots(f: IntPoly) -> IsolatedRoots:
    """
    Isolate every distinct real root of f, with multiplicities taken from
    the square-free decomposition.

    :raises DomainError: if f is the zero polynomial.
    """
    if f.is_zero:
        raise DomainError("cannot isolate the roots of the zero polynomial")
    intervals = []
    for factor, multiplicity in square_free_decomposition(f):
        for lo, hi in _isolate_squarefree(factor):
            intervals.append(RootInterval(lo, hi, multiplicity, factor))
    intervals.sort(key=lambda iv: (iv.lo, iv.hi))
    # intervals from different factors may still touch; shrink until disjoint
    overlapping = True
    while overlapping:
        overlapping = False
        for i in range(len(intervals) - 1):
            left, right = intervals[i], intervals[i + 1]
            if left.hi >= right.lo:
                intervals[i], intervals[i + 1] = left.bisect(), right.bisect()
                overlapping = True
        intervals.sort(key=lambda iv: (iv.lo, iv.hi))
    return IsolatedRoots(tuple(intervals))


def all_roots_real_positive(f: MonicIntPoly, strict: bool = True) -> bool:
    """
    True iff every complex root of f is real and > 0 (strict) or >= 0.

    Decided exactly: the square-free part must have as many distinct roots
    in (0, +inf) as its degree, after removing a root at 0 when allowed.
    """
    # Descartes: alternating signs are necessary
    if strict and any(a <= 0 for a in f.A):
        return False
    if not strict and any(a < 0 for a in f.A):
        return False
    poly = f.to_int_poly()
    if poly.coeffs[0] == 0:
        if strict:
            return False
        poly = poly.deflate_zero_roots()
        if poly.degree == 0:
            return True
    part = squarefree_part(poly)
    return count_real_roots(part, 0, None, chain=sturm_sequence(part)) == part.degree

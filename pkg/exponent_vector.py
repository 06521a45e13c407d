"""
Positive reals of the form prod p^(e_p) with rational exponents, kept as
exact prime exponent vectors. Products, quotients and rational powers
stay exact; comparisons reduce to integer powers.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from sympy import factorint

from certified import CertifiedReal, rational_power
from constants import DEFAULT_PRECISION_BITS
from errors import DomainError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class ExponentVector:
    """
    Attributes:
        exponents (tuple[tuple[int, Fraction], ...]): (prime, exponent) pairs,
            sorted by prime, with no zero exponent
    """

    exponents: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def _from_map(cls, mapping: dict[int, Fraction]) -> ExponentVector:
        return cls(tuple(sorted((p, Fraction(e)) for p, e in mapping.items() if e != 0)))

    @classmethod
    def one(cls) -> ExponentVector:
        return cls(())

    @classmethod
    def of(cls, value: Rational) -> ExponentVector:
        """
        :raises DomainError: if value <= 0.
        """
        value = Fraction(value)
        if value <= 0:
            raise DomainError(f"exponent vectors represent positive numbers, got {value}")
        mapping: dict[int, Fraction] = {}
        for p, e in factorint(value.numerator).items():
            mapping[int(p)] = Fraction(e)
        for p, e in factorint(value.denominator).items():
            mapping[int(p)] = mapping.get(int(p), Fraction(0)) - e
        return cls._from_map(mapping)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.exponents)

    def __mul__(self, other: ExponentVector) -> ExponentVector:
        mapping = self.as_dict()
        for p, e in other.exponents:
            mapping[p] = mapping.get(p, Fraction(0)) + e
        return ExponentVector._from_map(mapping)

    def __pow__(self, power: Rational) -> ExponentVector:
        power = Fraction(power)
        return ExponentVector._from_map({p: e * power for p, e in self.exponents})

    def inverse(self) -> ExponentVector:
        return self ** -1

    def __truediv__(self, other: ExponentVector) -> ExponentVector:
        return self * other.inverse()

    def root_degree(self) -> int:
        """ Smallest L with every exponent times L an integer. """
        return lcm(1, *(e.denominator for _, e in self.exponents))

    @property
    def is_rational(self) -> bool:
        return self.root_degree() == 1

    def rational_power(self, power: int) -> Fraction:
        """ self^power as an exact rational; power must clear every denominator. """
        value = Fraction(1)
        for p, e in self.exponents:
            scaled = e * power
            if scaled.denominator != 1:
                raise DomainError(f"power {power} does not clear the exponent {e} of {p}")
            value *= Fraction(p) ** int(scaled)
        return value

    def to_fraction(self) -> Fraction:
        return self.rational_power(1)

    def compare(self, other: ExponentVector) -> int:
        """ -1, 0 or 1 as self <, ==, > other. """
        ratio = self / other
        value = ratio.rational_power(ratio.root_degree())
        return (value > 1) - (value < 1)

    def max_with(self, other: ExponentVector) -> ExponentVector:
        return self if self.compare(other) >= 0 else other

    def to_certified(self, prec: int = DEFAULT_PRECISION_BITS) -> CertifiedReal:
        """ Certified enclosure; a point interval when the value is rational. """
        if self.is_rational:
            return CertifiedReal.exact(self.to_fraction(), prec)
        result = CertifiedReal.exact(1, prec)
        for p, e in self.exponents:
            result = result * rational_power(p, e, prec)
        return result

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " * ".join(f"{p}^({e})" if e.denominator != 1 else f"{p}^{e}" for p, e in self.exponents)


def product(vectors: Iterable[ExponentVector]) -> ExponentVector:
    result = ExponentVector.one()
    for vector in vectors:
        result = result * vector
    return result

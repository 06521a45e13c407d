"""
One row of command output: a count, its main term, its error bound, and
whether the count lies within the bound.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from certified import CertifiedReal

MainTerm = Union[Fraction, CertifiedReal]


def exact_text(value: Optional[MainTerm]) -> str:
    """ "p/q" for rationals and point intervals, "[lo,hi]" with exact ends otherwise. """
    if value is None:
        return ""
    if isinstance(value, CertifiedReal):
        if value.is_exact:
            return str(value.lo)
        return f"[{value.lo},{value.hi}]"
    return str(Fraction(value))


@dataclass(frozen=True)
class CensusReport:
    """
    Attributes:
        command: the command that produced the row, e.g. "census cubic"
        params: inputs, in the order they were given
        count: the exact count
        main_term: the predicted count, exact or certified
        error_bound: the allowed deviation from main_term, or the bound itself
            when there is no main term
        within_bound: verdict, None when nothing was compared
        elapsed_ms: wall time, 0 unless timing was requested
    """

    command: str
    params: dict[str, Any] = field(default_factory=dict)
    count: int = 0
    main_term: Optional[MainTerm] = None
    error_bound: Optional[CertifiedReal] = None
    within_bound: Optional[bool] = None
    elapsed_ms: int = 0

    @classmethod
    def bracketed(cls, command: str, params: dict[str, Any], count: int, main_term: Fraction,
                  error_bound: CertifiedReal) -> CensusReport:
        """ A row whose verdict is |count - main_term| <= upper end of error_bound. """
        within = abs(count - Fraction(main_term)) <= error_bound.hi
        return cls(command, params, count, Fraction(main_term), error_bound, within)

    @property
    def failed(self) -> bool:
        return self.within_bound is False

    def error_bound_text(self) -> str:
        if self.error_bound is None:
            return ""
        return self.error_bound.upper_decimal()

    def params_text(self) -> str:
        return ";".join(f"{key}={_param_text(value)}" for key, value in self.params.items())


def _param_text(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_param_text(item) for item in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, CertifiedReal)):
        return exact_text(value)
    return str(value)

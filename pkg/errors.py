""" Exceptions raised by the census library and its command line. """

__docformat__ = 'reStructuredText'


class CensusError(Exception):
    """ Root of every error raised on purpose by this package. """
    pass


class DomainError(CensusError, ValueError):
    """ An operation was called outside of its mathematical domain,
        e.g. the discriminant of a constant polynomial.
    """
    pass


class PrecisionExhausted(CensusError, ArithmeticError):
    """ A certified comparison did not resolve before the precision ceiling. """
    pass


class UsageError(CensusError):
    """ Bad command line input, or a request above the supported scale. """
    pass

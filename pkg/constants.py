from enum import auto

from base_enum import BaseEnum


class Variant(BaseEnum):
    """ Which roots are admitted: strictly positive, or nonnegative. """
    STRICT = auto()
    NONNEG = auto()


class OutputFormat(BaseEnum):
    CSV = auto()
    JSON = auto()


class Suite(BaseEnum):
    CUBIC = auto()
    MACLAURIN = auto()
    DISC = auto()
    ALL = auto()


class ExitCode(BaseEnum):
    OK = 0
    USAGE = 1
    VIOLATION = 2


# Certified arithmetic
DEFAULT_PRECISION_BITS = 128
MAX_PRECISION_BITS = 1 << 14

# Scale limits
MAX_CUBIC_TRACE = 10**4
FACTOR_CEILING = 10**18

# Defaults for constants and randomized sweeps
DEFAULT_TRUNCATION = 10**4
DEFAULT_SEED = 20240101

CSV_COLUMNS = (
    "command",
    "params",
    "count",
    "main_term",
    "error_bound_approx",
    "within_bound",
    "elapsed_ms",
)

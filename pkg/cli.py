"""
Command line front end. Every command prints CSV rows (or a JSON array)
of CensusReport to standard output; diagnostics go to standard error.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import argparse
import logging
import sys
import time
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Optional, TextIO

from arithmetic import phi_sum_constants
from census_report import CensusReport
from certified import CertifiedReal
from constants import DEFAULT_SEED, DEFAULT_TRUNCATION, MAX_CUBIC_TRACE, ExitCode, OutputFormat, Suite, Variant
from cubic_census import (RationalScaling, count_height_bounded_disc, count_P3_bounded_disc, count_P3_plus,
                          count_P3_scaled, main_term_and_error, w1_upper_bound)
from disc_arith import (QuadPoly, count_almost_prime_disc, count_almost_prime_disc_box, count_P3_squarefree_plus,
                        count_square_pairs, feller_tornier, feller_tornier_constant, squarefree_census_constant,
                        squarefree_sieve_bounds)
from errors import CensusError, UsageError
from maclaurin import BSequence, attainable_bracket, phi_psi_binomial, sequence_bracket, tao_constant
from robinson import count_positive_real_monic, count_prefix3, prefix3_error_budget, prefix3_main_term
from serialize import write_reports
from verification import Sweep, run_suite

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], list[CensusReport]]

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class _Parser(argparse.ArgumentParser):
    """ Reports usage problems as UsageError instead of exiting. """

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _integer(minimum: int) -> Callable[[str], int]:
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{value} is below {minimum}")
        return value
    return convert


def _check_trace(A: int) -> None:
    if A > MAX_CUBIC_TRACE:
        raise UsageError(f"trace {A} is above {MAX_CUBIC_TRACE}; the census runs in about A^4 steps")


def _census_cubic(args: argparse.Namespace) -> list[CensusReport]:
    A = args.trace
    _check_trace(A)
    variant = Variant.NONNEG if args.nonneg else Variant.STRICT
    params: dict = {"trace": A}
    if args.scaled:
        scaling = RationalScaling.parse(args.scaled)
        params["scaled"] = [scaling.alpha, scaling.beta, scaling.gamma]
    else:
        scaling = RationalScaling.identity()
    if args.nonneg:
        params["variant"] = variant.label
    if args.scaled or args.nonneg:
        count = count_P3_scaled(A, scaling, variant, args.workers)
    else:
        count = count_P3_plus(A, args.workers)
    estimate = main_term_and_error(A, scaling, variant)
    logger.info("sharper budget for trace %d: %s", A, estimate.sharp_bound.upper_decimal())
    return [CensusReport.bracketed("census cubic", params, count, estimate.main_term, estimate.error_bound)]


def _census_robinson(args: argparse.Namespace) -> list[CensusReport]:
    _check_trace(args.trace)
    strict = not args.nonneg
    count = count_positive_real_monic(args.n, args.trace, strict, args.workers)
    params = {"n": args.n, "trace": args.trace, "variant": (Variant.STRICT if strict else Variant.NONNEG).label}
    return [CensusReport("census robinson", params, count)]


def _census_prefix3(args: argparse.Namespace) -> list[CensusReport]:
    _check_trace(args.trace)
    count = count_prefix3(args.n, args.trace, args.workers)
    budget = CertifiedReal.exact(prefix3_error_budget(args.n, args.trace))
    return [CensusReport.bracketed("census prefix3", {"n": args.n, "trace": args.trace}, count,
                                   prefix3_main_term(args.n, args.trace), budget)]


def _census_heightdisc(args: argparse.Namespace) -> list[CensusReport]:
    census = count_height_bounded_disc(args.h, args.d, args.workers)
    if census.count > census.remark_bound.hi:
        logger.warning("%d cubics of height %d with disc <= %d exceed the summed square root bound %s",
                       census.count, args.h, args.d, census.remark_bound.upper_decimal())
    params = {"h": args.h, "d": args.d, "remark_bound_approx": census.remark_bound.upper_decimal()}
    within = census.count <= census.corrected_bound.hi
    return [CensusReport("census heightdisc", params, census.count, error_bound=census.corrected_bound,
                         within_bound=within)]


def _attainable(args: argparse.Namespace) -> list[CensusReport]:
    if args.trace < 1:
        raise UsageError("attainable needs --trace >= 1")
    if args.bseq is not None:
        bs = BSequence.parse(args.bseq)
        if args.n is not None and args.n != bs.n:
            raise UsageError(f"--n {args.n} does not match the {bs.n - 1} entries of --bseq")
        if not bs.bracket_hypothesis_holds():
            logger.warning("B = %s has a product cap below a level maximum; the error bound is not guaranteed",
                           args.bseq)
        bracket = sequence_bracket(args.trace, bs, args.workers)
        params = {"n": bs.n, "trace": args.trace, "bseq": args.bseq}
    else:
        if args.n is None:
            raise UsageError("attainable needs --n or --bseq")
        bracket = attainable_bracket(args.n, args.trace, args.workers)
        params = {"n": args.n, "trace": args.trace}
    return [CensusReport("attainable", params, bracket.count, bracket.main_term, bracket.error_bound,
                         bracket.within)]


def _disc_bounded(args: argparse.Namespace) -> list[CensusReport]:
    count = count_P3_bounded_disc(args.a, args.b, args.d)
    bound = w1_upper_bound(args.a, args.b, args.d)
    if bound.stated_violated_by(count):
        logger.warning("(A, B, D) = (%d, %d, %d): %d exceeds the bound before slack", args.a, args.b, args.d, count)
    params = {"a": args.a, "b": args.b, "d": args.d, "branch": bound.branch}
    chosen = bound.piecewise if bound.piecewise is not None else bound.global_bound
    return [CensusReport("disc bounded", params, count, error_bound=chosen, within_bound=bound.holds_for(count))]


def _disc_squarefree(args: argparse.Namespace) -> list[CensusReport]:
    _check_trace(args.trace)
    census = count_P3_squarefree_plus(args.trace, args.workers)
    within = census.count * 10**5 >= 3 * args.trace**5
    params = {"trace": args.trace, "ratio": census.ratio.lo}
    return [CensusReport("disc squarefree", params, census.count, within_bound=within)]


def _disc_almostprime(args: argparse.Namespace) -> list[CensusReport]:
    if (args.a is None) != (args.b is None):
        raise UsageError("give both --a and --b, or neither")
    if args.a is None:
        count = count_almost_prime_disc_box(args.h, args.k, args.workers)
        params = {"h": args.h, "k": args.k}
    else:
        count = count_almost_prime_disc(args.a, args.b, args.h, args.k)
        params = {"h": args.h, "a": args.a, "b": args.b, "k": args.k}
    return [CensusReport("disc almostprime", params, count)]


def _disc_squares(args: argparse.Namespace) -> list[CensusReport]:
    return [CensusReport("disc squares", {"h": args.h}, count_square_pairs(args.h))]


def _sieve_quad(args: argparse.Namespace) -> list[CensusReport]:
    f = QuadPoly(args.a, args.b, args.c)
    bracket = squarefree_sieve_bounds(f, args.x, args.y, args.z, args.truncation, args.workers)
    params = {"a": args.a, "b": args.b, "c": args.c, "x": args.x, "y": args.y, "z": args.z,
              "lower_approx": bracket.lower.lower_decimal(), "upper_approx": bracket.upper.upper_decimal()}
    return [CensusReport("sieve quad", params, bracket.empirical, error_bound=bracket.upper_sharp,
                         within_bound=bracket.holds)]


def _constants(args: argparse.Namespace) -> list[CensusReport]:
    binomial = phi_psi_binomial(args.n)
    phi_sums = phi_sum_constants()
    values = [
        ({"name": "phi", "n": args.n}, binomial.phi),
        ({"name": "psi", "n": args.n}, binomial.psi),
        ({"name": "psi_general", "n": args.n}, binomial.psi_general),
        ({"name": "tao"}, tao_constant()),
        ({"name": "feller_tornier_product", "truncation": args.truncation}, feller_tornier(args.truncation)),
        ({"name": "feller_tornier", "truncation": args.truncation}, feller_tornier_constant(args.truncation)),
        ({"name": "squarefree_census", "truncation": args.truncation}, squarefree_census_constant(args.truncation)),
        ({"name": "phi_sum_zero"}, phi_sums.zero),
        ({"name": "phi_sum_one"}, phi_sums.one),
    ]
    reports = []
    for params, value in values:
        bound = value if isinstance(value, CertifiedReal) else CertifiedReal.exact(Fraction(value))
        reports.append(CensusReport("constants", params, 0, value, bound))
    return reports


def _verify(args: argparse.Namespace) -> list[CensusReport]:
    suite = Suite.from_label(args.suite)
    return run_suite(suite, Sweep(quick=args.quick, seed=args.seed, workers=args.workers))


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=OutputFormat.CSV.label, choices=OutputFormat.labels())
    common.add_argument("--workers", type=_integer(1), default=1, help="processes for the outer loops")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the randomized suites")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    common.add_argument("--check", action="store_true", help="exit 2 when a row is outside its bound")
    common.add_argument("--timing", action="store_true", help="fill in elapsed_ms")
    common.add_argument("--quick", action="store_true", help="reduced ranges for verify")
    return common


def _leaf(group, name: str, handler: Handler, common: argparse.ArgumentParser, help_text: str):
    parser = group.add_parser(name, parents=[common], help=help_text)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    nonneg = _integer(0)
    parser = _Parser(prog="census", description="Counts of monic integer polynomials with real roots.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    census = commands.add_parser("census", help="polynomial censuses")
    targets = census.add_subparsers(dest="target", required=True, parser_class=_Parser)
    cubic = _leaf(targets, "cubic", _census_cubic, common, "cubics with positive real roots")
    cubic.add_argument("--trace", type=nonneg, required=True)
    cubic.add_argument("--scaled", nargs=3, metavar=("ALPHA", "BETA", "GAMMA"))
    cubic.add_argument("--nonneg", action="store_true")
    robinson = _leaf(targets, "robinson", _census_robinson, common, "degree n by Robinson's construction")
    robinson.add_argument("--n", type=_integer(1), required=True)
    robinson.add_argument("--trace", type=nonneg, required=True)
    robinson.add_argument("--nonneg", action="store_true")
    prefix3 = _leaf(targets, "prefix3", _census_prefix3, common, "first three coefficients of degree n")
    prefix3.add_argument("--n", type=_integer(4), required=True)
    prefix3.add_argument("--trace", type=nonneg, required=True)
    heightdisc = _leaf(targets, "heightdisc", _census_heightdisc, common, "cubics of bounded height and disc")
    heightdisc.add_argument("--h", type=nonneg, required=True)
    heightdisc.add_argument("--d", type=nonneg, required=True)

    attainable = _leaf(commands, "attainable", _attainable, common, "attainable Maclaurin sequences")
    attainable.add_argument("--n", type=_integer(2))
    attainable.add_argument("--trace", type=_integer(1), required=True)
    attainable.add_argument("--bseq", help='comma separated B_1..B_(n-1), e.g. "3,3" or "1,1/2"')

    disc = commands.add_parser("disc", help="discriminant arithmetic")
    kinds = disc.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    bounded = _leaf(kinds, "bounded", _disc_bounded, common, "A_3 with discriminant at most D")
    bounded.add_argument("--a", type=int, required=True)
    bounded.add_argument("--b", type=int, required=True)
    bounded.add_argument("--d", type=nonneg, required=True)
    squarefree = _leaf(kinds, "squarefree", _disc_squarefree, common, "square-free discriminants")
    squarefree.add_argument("--trace", type=_integer(1), required=True)
    almostprime = _leaf(kinds, "almostprime", _disc_almostprime, common, "discriminants with few prime factors")
    almostprime.add_argument("--h", type=_integer(2), required=True)
    almostprime.add_argument("--a", type=int)
    almostprime.add_argument("--b", type=int)
    almostprime.add_argument("--k", type=_integer(1), default=2)
    squares = _leaf(kinds, "squares", _disc_squares, common, "pairs with A^2 - 3B a square")
    squares.add_argument("--h", type=_integer(2), required=True)

    sieve = commands.add_parser("sieve", help="sieve bounds")
    shapes = sieve.add_subparsers(dest="shape", required=True, parser_class=_Parser)
    quad = _leaf(shapes, "quad", _sieve_quad, common, "square-free values of a quadratic")
    for name in ("a", "b", "c", "x", "y"):
        quad.add_argument(f"--{name}", type=int, required=True)
    quad.add_argument("--z", type=_integer(2), required=True)
    quad.add_argument("--truncation", type=_integer(2), default=DEFAULT_TRUNCATION)

    constants = _leaf(commands, "constants", _constants, common, "certified constants")
    constants.add_argument("--n", type=_integer(2), default=3)
    constants.add_argument("--truncation", type=_integer(2), default=DEFAULT_TRUNCATION)

    verify = _leaf(commands, "verify", _verify, common, "run the verification suite")
    verify.add_argument("--suite", default=Suite.ALL.label, choices=Suite.labels())
    return parser


def configure_logging(verbosity: int) -> None:
    level = LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def run(argv: Optional[list[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Parse argv, run the command and write its rows.

    :return: 0 on success, 1 on a usage or domain error, 2 when verify
        finds a failing criterion or --check finds a row outside its bound.
    """
    stream = stream if stream is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return ExitCode.USAGE.value
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    configure_logging(args.verbose)

    start = time.perf_counter()
    try:
        reports = args.handler(args)
    except CensusError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.USAGE.value
    if args.timing:
        elapsed = int((time.perf_counter() - start) * 1000)
        reports = [replace(report, elapsed_ms=elapsed) for report in reports]

    write_reports(reports, OutputFormat.from_label(args.format), stream)
    if (args.check or args.command == "verify") and any(report.failed for report in reports):
        return ExitCode.VIOLATION.value
    return ExitCode.OK.value

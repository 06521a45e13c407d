"""
The verification suite: every quantitative statement the library encodes,
checked against an independent count or an exact identity.

Each criterion yields one CensusReport whose count is the number of cases
checked and whose within_bound is the verdict.
"""
from __future__ import annotations

__docformat__ = 'reStructuredText'

import io
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable, NamedTuple, Optional

from arithmetic import omega, phi_sum_constants, phi_sum_mod3, primes_up_to, rad
from census_report import CensusReport
from certified import certified_log
from constants import DEFAULT_SEED, OutputFormat, Suite, Variant
from cubic_census import (RationalScaling, count_height_bounded_disc, count_P3_bounded_disc, count_P3_plus,
                          count_P3_scaled, count_real_rooted, ceil_gminus, floor_gplus, main_term_and_error,
                          w1_upper_bound)
from disc_arith import (QuadPoly, count_almost_prime_disc_box, count_P3_squarefree_plus, count_square_pairs,
                        count_square_pairs_naive, feller_tornier, rho_bruteforce, rho_quadratic_prime_sq,
                        rho_square, squarefree_census_constant, squarefree_sieve_bounds)
from exponent_vector import ExponentVector
from maclaurin import (attainable_bracket, check_simplification, count_attainable, phi_binomial,
                       psi_binomial_vector, t_recurrence, t_sequence, tao_choice_bound, tao_inequality_check,
                       tao_upper_bound, u_recurrence, u_sequence)
from polycore import MonicIntPoly, all_roots_real_positive, cubic_discriminant
from robinson import count_positive_real_monic, count_prefix3, enumerate_positive_real_monic, prefix3_error_budget, \
    prefix3_main_term
from serialize import write_reports

logger = logging.getLogger(__name__)

# failures listed in the log per criterion
REPORTED_FAILURES = 5


@dataclass(frozen=True)
class Sweep:
    """ How a suite run is sized: reduced ranges when quick. """

    quick: bool = False
    seed: int = DEFAULT_SEED
    workers: int = 1

    def pick(self, full, quick):
        return quick if self.quick else full

    def rng(self, salt: int) -> random.Random:
        return random.Random(self.seed * 1009 + salt)


class Outcome(NamedTuple):
    cases: int
    failures: list[str]
    # extra report params, e.g. a reduced oracle range
    scope: Optional[dict] = None


@dataclass(frozen=True)
class Criterion:
    index: int
    key: str
    suite: Suite
    check: Callable[[Sweep], Outcome]


CRITERIA: list[Criterion] = []


def criterion(key: str, suite: Suite):
    """ Register a check under the next criterion number. """
    def register(check: Callable[[Sweep], Outcome]) -> Callable[[Sweep], Outcome]:
        CRITERIA.append(Criterion(len(CRITERIA) + 1, key, suite, check))
        return check
    return register


class _Tally:
    def __init__(self) -> None:
        self.cases = 0
        self.failures: list[str] = []

    def expect(self, condition: bool, description: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(description)

    def outcome(self, scope: Optional[dict] = None) -> Outcome:
        return Outcome(self.cases, self.failures, scope)


def _sturm_census(A: int) -> int:
    """ count_P3_plus by exact root isolation of every candidate. """
    return sum(1 for A2 in range(1, A * A // 3 + 1) for A3 in range(1, floor_gplus(A, A2) + 1)
               if all_roots_real_positive(MonicIntPoly((A, A2, A3))))


def _discriminant_census(A: int) -> int:
    """ count_P3_plus by the sign of the discriminant of every candidate. """
    return sum(1 for A2 in range(1, A * A // 3 + 1) for A3 in range(1, floor_gplus(A, A2) + 1)
               if cubic_discriminant(A, A2, A3) >= 0)


@criterion("cubic-exact", Suite.CUBIC)
def _cubic_exact(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for A, expected in ((1, 0), (3, 1), (6, 16)):
        tally.expect(count_P3_plus(A) == expected, f"count_P3_plus({A}) != {expected}")
    isolated_to = sweep.pick(40, 8)
    for A in range(1, isolated_to + 1):
        count = count_P3_plus(A, sweep.workers)
        tally.expect(count == _sturm_census(A), f"root isolation disagrees at A={A}")
        tally.expect(count == _discriminant_census(A), f"discriminant disagrees at A={A}")
    return tally.outcome({"isolated_to": isolated_to})


@criterion("cubic-bracket", Suite.CUBIC)
def _cubic_bracket(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for A in range(1, sweep.pick(300, 60) + 1):
        count = count_P3_plus(A, sweep.workers)
        tally.expect(abs(count - Fraction(A**5, 480)) <= 2 * A**3, f"A={A}: {count}")
    return tally.outcome()


@criterion("attainable-bracket", Suite.MACLAURIN)
def _attainable_bracket(sweep: Sweep) -> Outcome:
    tally = _Tally()
    tally.expect(phi_binomial(3) == Fraction(2, 405), "Phi_3 != 2/405")
    tally.expect(psi_binomial_vector(3) == ExponentVector.of(2) * ExponentVector.of(3) ** Fraction(-3, 2),
                 "Psi_3 != 2/3^(3/2)")
    for n, top in ((2, sweep.pick(1000, 100)), (3, sweep.pick(25, 10)), (4, sweep.pick(6, 4))):
        for A in range(1, top + 1):
            bracket = attainable_bracket(n, A, sweep.workers)
            tally.expect(bracket.within, f"n={n} A={A}: {bracket.count} outside {bracket.main_term}")
    return tally.outcome()


@criterion("robinson-direction", Suite.CUBIC)
def _robinson_direction(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for n in range(2, 5):
        for A in range(1, sweep.pick(8, 5) + 1):
            real = count_positive_real_monic(n, A, workers=sweep.workers)
            tally.expect(real <= count_attainable(n, A), f"n={n} A={A}: {real} real-rooted")
    return tally.outcome()


@criterion("scaled-bracket", Suite.CUBIC)
def _scaled_bracket(sweep: Sweep) -> Outcome:
    tally = _Tally()
    identity = RationalScaling.identity()
    for A in range(1, sweep.pick(300, 60) + 1):
        count = count_P3_scaled(A, identity, Variant.STRICT, sweep.workers)
        tally.expect(main_term_and_error(A, identity).within(count), f"identity A={A}: {count}")
    for n in (4, 5):
        for A in range(1, sweep.pick(20, 10) + 1):
            count = count_prefix3(n, A, sweep.workers)
            gap = abs(count - prefix3_main_term(n, A))
            tally.expect(gap <= prefix3_error_budget(n, A), f"prefix n={n} A={A}: {count}")
    return tally.outcome()


@criterion("exponent-sequences", Suite.MACLAURIN)
def _exponent_sequences(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for n in range(2, sweep.pick(50, 20) + 1):
        t, u = t_sequence(n), u_sequence(n)
        tally.expect(t == t_recurrence(n), f"t closed form, n={n}")
        tally.expect(u == u_recurrence(n), f"u closed form, n={n}")
        tally.expect(t[n - 1] - u[n - 2] == 2, f"t_(n-1) - u_(n-1), n={n}")
    return tally.outcome()


@criterion("simplification", Suite.MACLAURIN)
def _simplification(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for n in range(2, 7):
        ds = [comb(n, k) for k in range(1, n + 1)]
        tally.expect(check_simplification(ds), f"binomial n={n}")
    rng = sweep.rng(7)
    for _ in range(20):
        ds = [Fraction(rng.randint(1, 30), rng.randint(1, 30)) for _ in range(rng.randint(3, 5))]
        tally.expect(check_simplification(ds), f"D={[str(d) for d in ds]}")
    return tally.outcome()


def _random_quadratic(rng: random.Random, stratum: int, primes: list[int]) -> QuadPoly:
    """ Stratum 0: generic; 1: p | A; 2: p divides every coefficient. """
    while True:
        A, B, C = (rng.randint(-60, 60) for _ in range(3))
        p = rng.choice(primes)
        if stratum == 1:
            A *= p
        elif stratum == 2:
            A, B, C = A * p, B * p, C * p
        f = QuadPoly(A, B, C)
        if not f.is_zero:
            return f


@criterion("rho-engine", Suite.DISC)
def _rho_engine(sweep: Sweep) -> Outcome:
    tally = _Tally()
    rng = sweep.rng(8)
    primes = primes_up_to(47)
    for index in range(sweep.pick(500, 50)):
        f = _random_quadratic(rng, index % 3, primes)
        for p in primes:
            expected = rho_bruteforce(f, p * p)
            tally.expect(rho_quadratic_prime_sq(f, p) == expected, f"{f} at p={p}")
        for d in (15, 21, 33, 35):
            value = rho_square(f, d)
            tally.expect(value == rho_bruteforce(f, d * d), f"{f} not multiplicative at d={d}")
            # the local bound needs d odd and prime to the leading coefficient
            if gcd(d, f.A) == 1 and f.delta != 0:
                tally.expect(value <= 2 ** omega(d) * rad(f.delta), f"{f} above the local bound at d={d}")
    return tally.outcome()


SIEVE_QUADRATICS = (
    QuadPoly(1, 0, -2),
    QuadPoly(1, 0, -3),
    QuadPoly(1, 1, -1),
    QuadPoly(1, 0, -5),
    QuadPoly(2, 0, -1),
    QuadPoly(1, 3, 1),
    QuadPoly(3, 1, -1),
    QuadPoly(1, 0, -6),
    QuadPoly(1, 5, 3),
    QuadPoly(4, 0, -3),
)


@criterion("sieve-bracket", Suite.DISC)
def _sieve_bracket(sweep: Sweep) -> Outcome:
    tally = _Tally()
    y = sweep.pick(10**4, 10**3)
    for f in SIEVE_QUADRATICS:
        for z in (7, 11, 13):
            bracket = squarefree_sieve_bounds(f, 0, y, z, workers=sweep.workers)
            tally.expect(bracket.holds, f"{f} z={z}: {bracket.empirical} outside "
                                        f"[{bracket.lower.upper_decimal()}, {bracket.upper_sharp.lower_decimal()}]")
    return tally.outcome()


@criterion("squarefree-census", Suite.DISC)
def _squarefree_census(sweep: Sweep) -> Outcome:
    tally = _Tally()
    tally.expect(squarefree_census_constant().lo > Fraction(3, 10**5), "census constant below 3e-5")
    for A in sweep.pick((20, 30, 40), (20,)):
        census = count_P3_squarefree_plus(A, sweep.workers)
        tally.expect(census.count * 10**5 >= 3 * A**5, f"A={A}: {census.count}")
    for A in (6, 9):
        for A2 in range(3, A * A // 3 + 1, 3):
            for A3 in range(max(ceil_gminus(A, A2), 1), floor_gplus(A, A2) + 1):
                tally.expect(cubic_discriminant(A, A2, A3) % 27 == 0, f"27 does not divide disc at {(A, A2, A3)}")
    return tally.outcome()


@criterion("bounded-disc", Suite.CUBIC)
def _bounded_disc(sweep: Sweep) -> Outcome:
    tally = _Tally()
    tally.expect(count_P3_bounded_disc(3, 1, 100) == 3, "count at (3, 1, 100) != 3")
    tally.expect(w1_upper_bound(3, 1, 100).stated_violated_by(3), "(3, 1, 100) does not exceed the unslacked bound")
    side = sweep.pick(30, 8)
    for D in (10**e for e in range(sweep.pick(7, 4))):
        for A in range(-side, side + 1):
            for B in range(-side, side + 1):
                count = count_P3_bounded_disc(A, B, D)
                tally.expect(w1_upper_bound(A, B, D).holds_for(count), f"(A, B, D)={(A, B, D)}: {count}")
    return tally.outcome()


@criterion("mean-inequality", Suite.MACLAURIN)
def _mean_inequality(sweep: Sweep) -> Outcome:
    tally = _Tally()
    rng = sweep.rng(12)
    for _ in range(sweep.pick(1000, 50)):
        roots = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(2, 8))]
        tally.expect(tao_inequality_check(roots), f"roots {[str(r) for r in roots]}")
    side = sweep.pick(6, 3)
    for A1 in range(-side, side + 1):
        for A2 in range(-side, side + 1):
            count = count_real_rooted(A1, A2)
            tally.expect(count <= tao_choice_bound(3, A1, A2).lo, f"choice bound at {(A1, A2)}: {count}")
            if (A1, A2) != (0, 0):
                tally.expect(count <= tao_upper_bound(3, A1, A2).lo, f"product bound at {(A1, A2)}: {count}")
    return tally.outcome()


@criterion("totient-sums", Suite.DISC)
def _totient_sums(sweep: Sweep) -> Outcome:
    tally = _Tally()
    tally.expect(phi_sum_mod3(10, 0) == 10, "phi_sum_mod3(10, 0) != 10")
    tally.expect(phi_sum_mod3(10, 1) == 13, "phi_sum_mod3(10, 1) != 13")
    N = sweep.pick(10**6, 10**4)
    for r, constant in zip((0, 1), phi_sum_constants()):
        total = phi_sum_mod3(N, r)
        low, high = Fraction(98, 100) * constant.hi * N * N, Fraction(102, 100) * constant.lo * N * N
        tally.expect(low <= total <= high, f"r={r}: {total} not within 2% at N={N}")
    return tally.outcome()


@criterion("feller-tornier", Suite.DISC)
def _feller_tornier(sweep: Sweep) -> Outcome:
    tally = _Tally()
    value = feller_tornier(10**4)
    tally.expect(value.lo > Fraction(32, 100) and value.hi < Fraction(33, 100), f"product {value}")
    return tally.outcome()


@criterion("square-pairs", Suite.DISC)
def _square_pairs(sweep: Sweep) -> Outcome:
    tally = _Tally()
    for H in range(2, sweep.pick(200, 40) + 1):
        tally.expect(count_square_pairs(H) == count_square_pairs_naive(H), f"H={H}")
    for H in sweep.pick((10**3, 10**4, 10**5), (10**3,)):
        count = count_square_pairs(H)
        log_h = certified_log(H)
        tally.expect(2 * count >= log_h.hi * H and count <= log_h.lo * 3 * H, f"H={H}: {count}")
    if not sweep.quick:
        boxes = [count_almost_prime_disc_box(H, 2, sweep.workers) for H in (20, 40, 80)]
        for smaller, larger in zip(boxes, boxes[1:]):
            tally.expect(larger >= 4 * smaller, f"box census grows {smaller} -> {larger}")
    return tally.outcome()


def _render(reports: list[CensusReport]) -> str:
    stream = io.StringIO()
    write_reports(reports, OutputFormat.CSV, stream)
    return stream.getvalue()


def _census_rows(sweep: Sweep, workers: int) -> str:
    A = sweep.pick(24, 12)
    reports = [
        CensusReport("census cubic", {"trace": A}, count_P3_plus(A, workers)),
        CensusReport("census prefix3", {"n": 4, "trace": A},
                     count_P3_scaled(A, RationalScaling.prefix3(4), Variant.NONNEG, workers)),
        CensusReport("census robinson", {"n": 4, "trace": 6},
                     len(enumerate_positive_real_monic(4, 6, workers=workers))),
        CensusReport("census heightdisc", {"h": 3, "d": 100}, count_height_bounded_disc(3, 100, workers).count),
        CensusReport("attainable", {"n": 3, "trace": A // 2}, count_attainable(3, A // 2, workers)),
        CensusReport("disc squarefree", {"trace": A // 2}, count_P3_squarefree_plus(A // 2, workers).count),
        CensusReport("disc almostprime", {"h": 4}, count_almost_prime_disc_box(4, 2, workers)),
    ]
    listing = [str(poly) for poly in enumerate_positive_real_monic(4, 6, workers=workers)]
    return _render(reports) + "\n".join(listing)


@criterion("determinism", Suite.CUBIC)
def _determinism(sweep: Sweep) -> Outcome:
    tally = _Tally()
    baseline = _census_rows(sweep, 1)
    for workers in (2, 8):
        tally.expect(_census_rows(sweep, workers) == baseline, f"output differs with {workers} workers")
    return tally.outcome()


def selected(suite: Suite) -> list[Criterion]:
    return [c for c in CRITERIA if suite == Suite.ALL or c.suite == suite]


def run_criterion(item: Criterion, sweep: Sweep) -> CensusReport:
    outcome = item.check(sweep)
    passed = not outcome.failures
    if passed:
        logger.info("criterion %d %s: %d cases pass", item.index, item.key, outcome.cases)
    else:
        logger.warning("criterion %d %s: %d of %d cases fail, first: %s", item.index, item.key,
                       len(outcome.failures), outcome.cases, "; ".join(outcome.failures[:REPORTED_FAILURES]))
    params = {"criterion": item.index, "name": item.key, "suite": item.suite.label, "quick": sweep.quick}
    params.update(outcome.scope or {})
    return CensusReport("verify", params, outcome.cases, within_bound=passed)


def run_suite(suite: Suite, sweep: Sweep = Sweep()) -> list[CensusReport]:
    """ One report per criterion of the suite, in criterion order. """
    return [run_criterion(item, sweep) for item in selected(suite)]

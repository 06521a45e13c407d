import random
import unittest
from fractions import Fraction
from math import comb

from cubic_census import count_real_rooted
from ed_utils.decorators import advanced, number
from ed_utils.timeout import time_budget
from errors import DomainError
from exponent_vector import ExponentVector
from maclaurin import (BSequence, attainable_bracket, check_simplification, count_attainable, count_SB,
                       elementary_means, main_exponent, phi_binomial, phi_psi_binomial, phi_psi_general, phi_vector,
                       psi_binomial_vector, psi_vector, sequence_bracket, simplification_sides, t_recurrence,
                       t_sequence, tao_choice_bound, tao_constant, tao_inequality_check, tao_scale, tao_upper_bound,
                       u_recurrence, u_sequence)


def brute_attainable(n: int, A: int) -> int:
    """ Direct count of (A_2, .., A_n) with A_(k+1)^k C(n,k)^(k+1) <= A_k^(k+1) C(n,k+1)^k. """
    def extend(k: int, a: int) -> int:
        if k == n:
            return 1
        total = 0
        b = 1
        while b ** k * comb(n, k) ** (k + 1) <= a ** (k + 1) * comb(n, k + 1) ** k:
            total += extend(k + 1, b)
            b += 1
        return total
    return extend(1, A)


class TestSequences(unittest.TestCase):

    @number("5.1")
    def test_b_sequences(self):
        bs = BSequence.parse("1/4, 2, 3/5")
        self.assertEqual(bs.n, 4)
        self.assertEqual(bs.entry(3), ExponentVector.of(Fraction(3, 5)))
        self.assertEqual(BSequence.binomial(3).entry(1), ExponentVector.of(Fraction(1, 3)))
        with self.assertRaises(DomainError):
            BSequence.parse("1,x")
        with self.assertRaises(DomainError):
            BSequence.of([])
        with self.assertRaises(DomainError):
            BSequence.of([1, 0])

    @number("5.2")
    def test_caps(self):
        half = BSequence.of([1, Fraction(1, 2)])
        self.assertEqual([half.cap(2, a) for a in range(0, 5)], [0, 0, 1, 2, 4])
        self.assertEqual(half.cap(1, 2), 4)
        binomial = BSequence.binomial(3)
        # A_3 <= (A_2 / 3)^(3/2)
        self.assertEqual([binomial.cap(2, a) for a in (3, 12, 27)], [1, 8, 27])


class TestCounts(unittest.TestCase):

    @number("5.3")
    def test_attainable_values(self):
        self.assertEqual(count_attainable(3, 6), 39)
        self.assertEqual(count_attainable(3, 3), 1)
        self.assertEqual(count_attainable(3, 2), 0)
        for A in range(1, 30):
            self.assertEqual(count_attainable(2, A), A * A // 4)
        with self.assertRaises(DomainError):
            count_attainable(1, 5)
        with self.assertRaises(DomainError):
            count_attainable(3, 0)

    @number("5.4")
    def test_attainable_against_direct_search(self):
        for n in (3, 4):
            for A in range(1, 9):
                self.assertEqual(count_attainable(n, A), brute_attainable(n, A), (n, A))

    @number("5.5")
    def test_binomial_sequence_counts_attainable(self):
        for n in (2, 3, 4):
            bs = BSequence.binomial(n)
            for A in range(1, 9):
                self.assertEqual(count_SB(A, bs), count_attainable(n, A), (n, A))

    @number("5.6")
    def test_workers_agree(self):
        self.assertEqual(count_attainable(3, 40, workers=4), count_attainable(3, 40))
        bs = BSequence.of([2, Fraction(1, 3), 5])
        self.assertEqual(count_SB(9, bs, workers=3), count_SB(9, bs))


class TestMainTerms(unittest.TestCase):

    @number("5.7")
    def test_binomial_constants(self):
        self.assertEqual(main_exponent(3), 5)
        self.assertEqual(phi_binomial(2), Fraction(1, 4))
        self.assertEqual(phi_binomial(3), Fraction(2, 405))
        self.assertEqual(psi_binomial_vector(2), ExponentVector.one())
        self.assertEqual(psi_binomial_vector(3), ExponentVector.of(2) * ExponentVector.of(3) ** Fraction(-3, 2))
        constants = phi_psi_binomial(3)
        self.assertEqual(constants.phi, Fraction(2, 405))
        self.assertTrue(Fraction(3849, 10**4) < constants.psi.lo and constants.psi.hi < Fraction(3850, 10**4))
        with self.assertRaises(DomainError):
            phi_psi_binomial(1)

    @number("5.8")
    def test_general_constants_at_binomial_sequence(self):
        for n in range(2, 7):
            bs = BSequence.binomial(n)
            self.assertEqual(phi_vector(bs), ExponentVector.of(phi_binomial(n)), n)
            # the general error constant is larger by n^((n-2)/(n-1))
            self.assertEqual(psi_vector(bs) / psi_binomial_vector(n), ExponentVector.of(n) ** Fraction(n - 2, n - 1))

    @number("5.9")
    def test_sequence_bracket(self):
        half = BSequence.of([1, Fraction(1, 2)])
        self.assertEqual(count_SB(2, half), 7)
        bracket = sequence_bracket(2, half)
        self.assertTrue(bracket.within)
        self.assertEqual(bracket.main_term.lo, Fraction(32, 5))
        self.assertEqual(bracket.error_bound.hi, 16)
        constants = phi_psi_general(half)
        self.assertTrue(constants.phi.is_exact)
        self.assertEqual(constants.phi.lo, Fraction(1, 5))

    @number("5.10")
    def test_bracket_hypothesis(self):
        self.assertTrue(BSequence.of([1, Fraction(1, 2)]).bracket_hypothesis_holds())
        for n in range(2, 7):
            self.assertTrue(BSequence.binomial(n).bracket_hypothesis_holds(), n)
        steep = BSequence.of([1, 5])
        self.assertFalse(steep.bracket_hypothesis_holds())
        bracket = sequence_bracket(1, steep)
        # 5 sequences against 2 A^5 +- 2 A^3
        self.assertEqual(bracket.count, 5)
        self.assertFalse(bracket.within)

    @number("5.11")
    def test_attainable_bracket(self):
        for A in range(1, 200):
            self.assertTrue(attainable_bracket(2, A).within, A)
        for A in range(1, 10):
            self.assertTrue(attainable_bracket(3, A).within, A)
        bracket = attainable_bracket(3, 6)
        self.assertEqual(bracket.count, 39)
        self.assertEqual(bracket.main_term.lo, Fraction(2, 405) * 6**5)

    @number("5.12")
    @advanced()
    @time_budget(600)
    def test_attainable_bracket_sweep(self):
        for n, top in ((2, 1000), (3, 25), (4, 6)):
            for A in range(1, top + 1):
                self.assertTrue(attainable_bracket(n, A).within, (n, A))


class TestExponentSequences(unittest.TestCase):

    @number("5.13")
    def test_closed_forms(self):
        self.assertEqual(t_sequence(3), [0, Fraction(3, 2), 5])
        self.assertEqual(t_sequence(4), [0, Fraction(4, 3), Fraction(7, 2), 9])
        self.assertEqual(u_sequence(3), [0, 3])

    @number("5.14")
    def test_recurrences(self):
        for n in range(2, 40):
            self.assertEqual(t_sequence(n), t_recurrence(n), n)
            self.assertEqual(u_sequence(n), u_recurrence(n), n)
            # one summation step costs two powers of A
            self.assertEqual(t_sequence(n)[n - 1] - u_sequence(n)[n - 2], 2)
            self.assertEqual(t_sequence(n)[n - 1], main_exponent(n))

    @number("5.15")
    def test_simplification_identities(self):
        for n in range(2, 7):
            self.assertTrue(check_simplification([comb(n, k) for k in range(1, n + 1)]), n)
        rng = random.Random(5)
        for _ in range(20):
            ds = [Fraction(rng.randint(1, 30), rng.randint(1, 30)) for _ in range(rng.randint(2, 6))]
            self.assertTrue(check_simplification(ds), ds)
        (left, right), _ = simplification_sides([2, 3])
        self.assertEqual(left, ExponentVector.of(Fraction(3, 4)))
        self.assertEqual(right, left)
        with self.assertRaises(DomainError):
            simplification_sides([2])


class TestSymmetricMeans(unittest.TestCase):

    @number("5.16")
    def test_constant_and_scale(self):
        c = tao_constant()
        self.assertTrue(175461 < c.lo and c.hi < 175462)
        self.assertEqual(tao_scale(3, 3, 3), (1, 1))
        self.assertEqual(tao_scale(4, 2, 12), (1, 2))
        self.assertEqual(elementary_means([1, 2, 3]), [1, 2, Fraction(11, 3), 6])

    @number("5.17")
    def test_bounds(self):
        self.assertEqual(tao_upper_bound(3, 0, 0).hi, 0)
        self.assertTrue(tao_choice_bound(3, 0, 0).contains(1))
        with self.assertRaises(DomainError):
            tao_upper_bound(2, 1, 1)
        with self.assertRaises(DomainError):
            tao_choice_bound(2, 1, 1)
        for A1 in range(-3, 4):
            for A2 in range(-3, 4):
                count = count_real_rooted(A1, A2)
                self.assertLessEqual(count, tao_choice_bound(3, A1, A2).lo)
                if (A1, A2) != (0, 0):
                    self.assertLessEqual(count, tao_upper_bound(3, A1, A2).lo)

    @number("5.18")
    def test_inequality_on_real_roots(self):
        self.assertTrue(tao_inequality_check([1, 2, 3]))
        self.assertTrue(tao_inequality_check([Fraction(-7, 2), 0, 0, 5]))
        rng = random.Random(12)
        for _ in range(50):
            roots = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(2, 8))]
            self.assertTrue(tao_inequality_check(roots), roots)

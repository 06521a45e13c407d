import unittest
from fractions import Fraction

from cubic_census import GPair, RationalScaling, count_P3_plus, count_P3_zeroplus, main_term_and_error
from ed_utils.decorators import advanced, number
from ed_utils.timeout import time_budget
from errors import DomainError
from maclaurin import count_attainable
from polycore import MonicIntPoly, all_roots_real_positive
from robinson import (AdmissibleWindow, DerivativeChainLevel, admissible_constant_interval, count_positive_real_monic,
                      count_prefix3, enumerate_positive_real_monic, prefix3_error_budget, prefix3_main_term)


def brute_quartics(A: int, strict: bool = True) -> list[MonicIntPoly]:
    lowest = 1 if strict else 0
    found = []
    for A2 in range(lowest, 3 * A * A // 8 + 1):
        for A3 in range(lowest, A**3 // 16 + 1):
            for A4 in range(lowest, A**4 // 256 + 1):
                f = MonicIntPoly((A, A2, A3, A4))
                if all_roots_real_positive(f, strict):
                    found.append(f)
    return found


class TestDerivativeChain(unittest.TestCase):

    @number("4.1")
    def test_chain_polynomials(self):
        level = DerivativeChainLevel(3, 2, (6,))
        self.assertEqual(level.polynomial(), [0, -4, 1])
        self.assertEqual(level.polynomial(Fraction(11, 3)), [Fraction(11, 3), -4, 1])
        self.assertEqual(level.previous(), [-2, 1])
        self.assertEqual((level.sign, level.binomial, level.maclaurin_cap()), (1, 3, 12))
        with self.assertRaises(DomainError):
            DerivativeChainLevel(3, 4, (6, 11, 6))
        with self.assertRaises(DomainError):
            DerivativeChainLevel(3, 2, (6, 11))

    @number("4.2")
    def test_second_coefficient_window(self):
        window = admissible_constant_interval(DerivativeChainLevel(3, 2, (6,)))
        self.assertEqual(window, AdmissibleWindow(None, 12))
        self.assertEqual(window.candidates(True, 12), range(1, 13))
        self.assertEqual(window.candidates(False, 12), range(0, 13))

    @number("4.3")
    def test_last_coefficient_window_is_the_cubic_window(self):
        for A in range(1, 7):
            for A2 in range(1, A * A // 3 + 1):
                window = admissible_constant_interval(DerivativeChainLevel(3, 3, (A, A2)))
                expected = GPair.of(A, A2)
                self.assertEqual((window.lower, window.upper), (expected.ceil_gminus, expected.floor_gplus), (A, A2))

    @number("4.4")
    def test_dead_end(self):
        # X^2 - 4/3 X + 5/3 has no real roots
        self.assertIsNone(admissible_constant_interval(DerivativeChainLevel(3, 3, (2, 5))))
        # G+ and G- at (6, 1) are about 0.042 and -28.04
        self.assertEqual(admissible_constant_interval(DerivativeChainLevel(3, 3, (6, 1))), AdmissibleWindow(-28, 0))
        self.assertTrue(AdmissibleWindow(3, 2).is_empty)
        self.assertFalse(AdmissibleWindow(None, 2).is_empty)


class TestEnumeration(unittest.TestCase):

    @number("4.5")
    def test_small_degrees(self):
        self.assertEqual(enumerate_positive_real_monic(1, 0), [])
        self.assertEqual(enumerate_positive_real_monic(1, 0, strict=False), [MonicIntPoly((0,))])
        self.assertEqual(enumerate_positive_real_monic(1, 4), [MonicIntPoly((4,))])
        for A in range(0, 12):
            self.assertEqual(count_positive_real_monic(2, A), A * A // 4)
            self.assertEqual(count_positive_real_monic(2, A, strict=False), A * A // 4 + 1)
        with self.assertRaises(DomainError):
            enumerate_positive_real_monic(0, 3)
        with self.assertRaises(DomainError):
            enumerate_positive_real_monic(3, -1)

    @number("4.6")
    def test_cubics_match_closed_form(self):
        for A in range(0, 13):
            self.assertEqual(count_positive_real_monic(3, A), count_P3_plus(A), A)
            self.assertEqual(count_positive_real_monic(3, A, strict=False), count_P3_zeroplus(A), A)

    @number("4.7")
    def test_quartics_against_brute_force(self):
        for A in range(1, 7):
            self.assertEqual(enumerate_positive_real_monic(4, A), brute_quartics(A), A)
        self.assertEqual(enumerate_positive_real_monic(4, 5, strict=False), brute_quartics(5, strict=False))

    @number("4.8")
    def test_sorted_and_certified(self):
        found = enumerate_positive_real_monic(4, 8)
        self.assertEqual(found, sorted(found, key=MonicIntPoly.tail))
        self.assertEqual(len(set(found)), len(found))
        for f in found:
            self.assertTrue(all_roots_real_positive(f))
        self.assertIn(MonicIntPoly((8, 24, 32, 16)), found)

    @number("4.9")
    def test_workers_agree(self):
        self.assertEqual(enumerate_positive_real_monic(4, 8, workers=2), enumerate_positive_real_monic(4, 8))
        self.assertEqual(count_positive_real_monic(5, 7, workers=3), count_positive_real_monic(5, 7))
        self.assertEqual(count_positive_real_monic(3, 6, True, workers=8), 16)


class TestPrefixCensus(unittest.TestCase):

    @number("4.10")
    def test_main_term_matches_scaling(self):
        for n in range(4, 9):
            scaled = main_term_and_error(7, RationalScaling.prefix3(n)).main_term
            self.assertEqual(prefix3_main_term(n, 7), scaled)
        self.assertEqual(prefix3_main_term(4, 2), Fraction(9, 640) * Fraction(9, 32) * 32)
        with self.assertRaises(DomainError):
            count_prefix3(3, 5)

    @number("4.11")
    def test_attained_prefixes_are_counted(self):
        for A in range(1, 9):
            attained = {f.tail()[:2] for f in enumerate_positive_real_monic(4, A, strict=False)}
            self.assertLessEqual(len(attained), count_prefix3(4, A))

    @number("4.12")
    def test_prefix_bracket(self):
        for n in (4, 5):
            for A in range(1, 11):
                gap = abs(count_prefix3(n, A) - prefix3_main_term(n, A))
                self.assertLessEqual(gap, prefix3_error_budget(n, A), (n, A))

    @number("4.13")
    @advanced()
    @time_budget(600)
    def test_real_rooted_are_attainable(self):
        for n in range(2, 5):
            for A in range(1, 9):
                self.assertLessEqual(count_positive_real_monic(n, A), count_attainable(n, A), (n, A))

    @number("4.14")
    @advanced()
    @time_budget(900)
    def test_search_matches_closed_forms_to_twenty_five(self):
        for A in range(13, 26):
            self.assertEqual(count_positive_real_monic(3, A), count_P3_plus(A), A)
        for A in range(0, 26):
            self.assertEqual(count_positive_real_monic(3, A, strict=False), count_P3_zeroplus(A), A)
        for A in (7, 8):
            self.assertEqual(enumerate_positive_real_monic(4, A), brute_quartics(A), A)
            self.assertEqual(enumerate_positive_real_monic(4, A, strict=False), brute_quartics(A, strict=False), A)

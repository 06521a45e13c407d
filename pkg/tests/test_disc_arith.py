import random
import unittest
from fractions import Fraction

from arithmetic import (factorize, is_squarefree, omega, omega_bound_check, omega_bound_sweep, omega_table,
                        phi_sum_constants, phi_sum_mod3, prime_pi, primes_up_to, rad, totient_table)
from disc_arith import (QuadPoly, count_almost_prime_disc, count_almost_prime_disc_box, count_P3_squarefree_plus,
                        count_square_pairs, count_square_pairs_naive, count_squarefree_values, excluded_by_three,
                        feller_tornier, feller_tornier_constant, rho_bruteforce, rho_quadratic_prime_sq, rho_square,
                        squarefree_census_constant, squarefree_sieve_bounds)
from ed_utils.decorators import advanced, number
from ed_utils.timeout import time_budget
from errors import DomainError
from polycore import MonicIntPoly, all_roots_real_positive, cubic_discriminant


class TestArithmetic(unittest.TestCase):

    @number("6.1")
    def test_factorize(self):
        self.assertEqual(factorize(360), {2: 3, 3: 2, 5: 1})
        self.assertEqual(factorize(-12), {2: 2, 3: 1})
        self.assertEqual(factorize(1), {})
        self.assertEqual((omega(30), rad(72)), (3, 6))
        self.assertEqual([is_squarefree(m) for m in (30, 12, 0, -1, -7)], [True, False, False, True, True])
        with self.assertRaises(DomainError):
            factorize(0)
        with self.assertRaises(DomainError):
            factorize(10**19)

    @number("6.2")
    def test_prime_tables(self):
        primes = primes_up_to(20)
        self.assertEqual(primes, [2, 3, 5, 7, 11, 13, 17, 19])
        self.assertEqual(primes_up_to(1), [])
        self.assertEqual((prime_pi(primes, 10), prime_pi(primes, 19), prime_pi(primes, 1)), (4, 8, 0))
        table = omega_table(60)
        self.assertEqual(table[:2], [0, 0])
        self.assertEqual(table[1:], [omega(m) for m in range(1, 61)])

    @number("6.3")
    def test_omega_bounds(self):
        self.assertTrue(omega_bound_check(2))
        self.assertTrue(omega_bound_check(30030))
        self.assertTrue(omega_bound_check(2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23))
        with self.assertRaises(DomainError):
            omega_bound_check(1)
        sweep = omega_bound_sweep(2000)
        self.assertTrue(sweep.all_hold)
        self.assertEqual(sweep.limit, 2000)
        self.assertTrue(set(sweep.thresholds) <= {1, 2, 3, 4})

    @number("6.4")
    def test_totients(self):
        self.assertEqual(totient_table(10), [0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4])
        self.assertEqual(phi_sum_mod3(10, 0), 10)
        self.assertEqual(phi_sum_mod3(10, 1), 13)
        with self.assertRaises(DomainError):
            phi_sum_mod3(10, 2)
        with self.assertRaises(DomainError):
            phi_sum_mod3(0, 1)

    @number("6.5")
    def test_totient_sums_grow_quadratically(self):
        N = 10**4
        constants = phi_sum_constants()
        self.assertTrue(Fraction(7599, 10**5) < constants.zero.lo and constants.zero.hi < Fraction(7600, 10**5))
        for r, constant in zip((0, 1), constants):
            ratio = Fraction(phi_sum_mod3(N, r), N * N)
            self.assertTrue(Fraction(98, 100) * constant.hi <= ratio <= Fraction(102, 100) * constant.lo, r)


class TestLocalDensities(unittest.TestCase):

    @number("6.6")
    def test_rho_examples(self):
        root_two = QuadPoly(1, 0, -2)
        self.assertEqual(root_two.delta, 8)
        self.assertEqual(rho_quadratic_prime_sq(root_two, 7), 2)
        self.assertIs(type(rho_quadratic_prime_sq(root_two, 7)), int)
        # 5 (X + 2)(X - 1): two roots mod 5, each lifting five ways
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(5, 5, -10), 5), 10)
        self.assertIs(type(rho_quadratic_prime_sq(QuadPoly(5, 5, -10), 5)), int)
        self.assertEqual(rho_square(root_two, 7 * 17), 4)
        self.assertIs(type(rho_square(root_two, 7 * 17)), int)
        self.assertEqual(rho_quadratic_prime_sq(root_two, 3), 0)
        self.assertEqual(rho_quadratic_prime_sq(root_two, 2), 0)
        # p^2 | delta
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(1, 0, 0), 3), 3)
        # p exactly divides delta
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(1, 0, -3), 3), 0)
        # p divides every coefficient
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(9, 9, 9), 3), 9)
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(3, 1, 5), 3), 1)
        self.assertEqual(rho_quadratic_prime_sq(QuadPoly(3, 3, 1), 3), 0)

    @number("6.7")
    def test_rho_against_brute_force(self):
        rng = random.Random(41)
        primes = primes_up_to(23)
        for _ in range(150):
            p = rng.choice(primes)
            f = QuadPoly(rng.randint(-60, 60), rng.randint(-60, 60), rng.randint(-60, 60))
            if rng.random() < 0.3:
                f = QuadPoly(f.A * p, f.B * p, f.C * p)
            if f.is_zero:
                continue
            self.assertEqual(rho_quadratic_prime_sq(f, p), rho_bruteforce(f, p * p), (str(f), p))

    @number("6.8")
    def test_rho_square_is_multiplicative(self):
        f = QuadPoly(2, 3, -7)
        for d in (6, 15, 21, 35):
            self.assertEqual(rho_square(f, d), rho_bruteforce(f, d * d), d)
        self.assertEqual(rho_square(f, 1), 1)
        with self.assertRaises(DomainError):
            rho_square(f, 12)
        with self.assertRaises(DomainError):
            rho_quadratic_prime_sq(f, 4)
        with self.assertRaises(DomainError):
            rho_quadratic_prime_sq(QuadPoly(0, 0, 0), 5)
        with self.assertRaises(DomainError):
            rho_bruteforce(f, 0)

    @number("6.9")
    def test_cubic_discriminant_as_quadratic(self):
        for A, B in ((6, 11), (0, -1), (3, 1), (-4, 7)):
            q = QuadPoly.cubic_discriminant_in_c(A, B)
            for C in range(-10, 11):
                self.assertEqual(q(C), cubic_discriminant(A, B, C), (A, B, C))
        self.assertEqual(QuadPoly(9, 9, 9).content, 9)
        self.assertEqual(QuadPoly(9, 9, 9).divided(3), QuadPoly(3, 3, 3))


class TestSquarefreeValues(unittest.TestCase):

    @number("6.10")
    def test_feller_tornier(self):
        value = feller_tornier()
        self.assertTrue(Fraction(32, 100) < value.lo and value.hi < Fraction(33, 100))
        self.assertTrue(value.contains(Fraction(3226, 10**4)))
        half = feller_tornier_constant()
        self.assertTrue(Fraction(66, 100) < half.lo and half.hi < Fraction(665, 1000))
        with self.assertRaises(DomainError):
            feller_tornier(1)

    @number("6.11")
    def test_sieve_bracket(self):
        f = QuadPoly(1, 0, -2)
        for z in (7, 11, 13):
            bracket = squarefree_sieve_bounds(f, 0, 1000, z)
            self.assertEqual(bracket.empirical, count_squarefree_values(f, 0, 1000))
            self.assertEqual(bracket.params, (0, 1000, z))
            self.assertTrue(bracket.holds, z)
            self.assertIsInstance(bracket.upper_sharp.hi, Fraction)
        self.assertEqual(count_squarefree_values(f, 0, 10), sum(1 for n in range(1, 11) if is_squarefree(n * n - 2)))
        self.assertEqual(count_squarefree_values(f, 0, 300, workers=3), count_squarefree_values(f, 0, 300))
        with self.assertRaises(DomainError):
            squarefree_sieve_bounds(QuadPoly(1, 0, 1), 0, 1000, 7)
        with self.assertRaises(DomainError):
            squarefree_sieve_bounds(f, 0, 10, 11)
        with self.assertRaises(DomainError):
            count_squarefree_values(f, 5, 5)

    @number("6.12")
    def test_squarefree_census(self):
        expected = 0
        for A2 in range(1, 13):
            for A3 in range(1, 9):
                delta = cubic_discriminant(6, A2, A3)
                if all_roots_real_positive(MonicIntPoly((6, A2, A3))) and delta > 0 and is_squarefree(delta):
                    expected += 1
        census = count_P3_squarefree_plus(6)
        self.assertEqual(census.count, expected)
        self.assertEqual(census.ratio.lo, Fraction(expected, 6**5))
        self.assertEqual(count_P3_squarefree_plus(12, workers=2).count, count_P3_squarefree_plus(12).count)
        with self.assertRaises(DomainError):
            count_P3_squarefree_plus(0)

    @number("6.13")
    def test_rows_divisible_by_27(self):
        for A in (3, 6, 9):
            for A2 in range(-9, 10):
                for A3 in range(-10, 11):
                    if excluded_by_three(A, A2):
                        self.assertEqual(cubic_discriminant(A, A2, A3) % 27, 0)
        self.assertFalse(excluded_by_three(6, 4))
        self.assertTrue(squarefree_census_constant().lo > Fraction(3, 10**5))

    @number("6.14")
    @advanced()
    @time_budget(600)
    def test_squarefree_census_density(self):
        for A in (20, 30, 40):
            self.assertGreaterEqual(count_P3_squarefree_plus(A).count * 10**5, 3 * A**5, A)


class TestAlmostPrime(unittest.TestCase):

    @number("6.15")
    def test_almost_prime_discriminants(self):
        # disc(X^3 - X - C) = 4 - 27 C^2
        expected = sum(1 for C in range(-30, 31) if 4 - 27 * C * C != 0 and omega(4 - 27 * C * C) <= 2)
        self.assertEqual(count_almost_prime_disc(0, -1, 30), expected)
        self.assertLessEqual(count_almost_prime_disc(0, -1, 30, k=1), expected)
        with self.assertLogs("disc_arith", level="WARNING"):
            count_almost_prime_disc(1, 0, 5)
        with self.assertRaises(DomainError):
            count_almost_prime_disc(0, -1, 1)

    @number("6.16")
    def test_box_census(self):
        expected = sum(1 for A in range(-3, 4) for B in range(-3, 4) for C in range(-3, 4)
                       if cubic_discriminant(A, B, C) != 0 and omega(cubic_discriminant(A, B, C)) <= 2)
        self.assertEqual(count_almost_prime_disc_box(3), expected)
        self.assertEqual(count_almost_prime_disc_box(3, workers=2), expected)

    @number("6.17")
    def test_square_pairs(self):
        for H in range(2, 41):
            self.assertEqual(count_square_pairs(H), count_square_pairs_naive(H), H)
        with self.assertRaises(DomainError):
            count_square_pairs(1)

    @number("6.18")
    @advanced()
    @time_budget(600)
    def test_square_pairs_sweep(self):
        for H in range(2, 201):
            self.assertEqual(count_square_pairs(H), count_square_pairs_naive(H), H)
        boxes = [count_almost_prime_disc_box(H) for H in (20, 40, 80)]
        for smaller, larger in zip(boxes, boxes[1:]):
            self.assertGreaterEqual(larger, 4 * smaller)

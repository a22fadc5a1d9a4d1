import itertools
import unittest
from fractions import Fraction

import galois
import numpy

from sparsecode.field import ParameterError, PrimeField, find_primitive_root_of_unity
from sparsecode.recurrence import (
    DegenerateGeneratorError,
    GeneratorPolynomial,
    berlekamp_massey,
    clean_up,
    generates,
)
from sparsecode.sparse_poly import SparsePolynomial, evaluate_geometric, inverse_dft


def shortest_recurrence(seq, p):
    """ Least d with a_{j+d} = sum_i l_i a_{j+i} mod p for some l, by enumeration """
    n = len(seq)
    for d in range(n + 1):
        for lambdas in itertools.product(range(p), repeat=d):
            if all(
                seq[j + d] == sum(l * seq[j + i] for i, l in enumerate(lambdas)) % p
                for j in range(n - d)
            ):
                return d


class TestGeneratorPolynomial(unittest.TestCase):

    def test_from_roots_matches_galois(self):
        F = PrimeField(31)
        GF = galois.GF(31)
        roots = [F(2), F(7), F(19)]
        g = GeneratorPolynomial.from_roots(roots)
        expected = galois.Poly.Roots(GF([2, 7, 19]))
        # galois lists coefficients by decreasing degree
        self.assertEqual([int(c) for c in g.coefficients()], [int(c) for c in expected.coeffs[::-1]])
        for b in roots:
            self.assertEqual(g(b), 0)
        self.assertEqual(g.constant_term(), F(-2 * 7 * 19))

    def test_degree_zero_is_one(self):
        g = GeneratorPolynomial()
        self.assertEqual(g.degree, 0)
        self.assertEqual(g(PrimeField(13)(5)), 1)
        self.assertEqual(g.constant_term(), 1)

    def test_next_value(self):
        fib = GeneratorPolynomial([1, 1])
        self.assertEqual(fib.next_value([5, 8]), 13)
        self.assertTrue(generates(fib, [1, 1, 2, 3, 5, 8, 13]))
        self.assertFalse(generates(fib, [1, 1, 2, 3, 5, 9]))


class TestBerlekampMassey(unittest.TestCase):

    def test_fibonacci_over_rationals(self):
        seq = [Fraction(x) for x in (0, 1, 1, 2, 3, 5, 8, 13)]
        self.assertEqual(berlekamp_massey(seq), GeneratorPolynomial([1, 1]))

    def test_zero_window(self):
        F = PrimeField(13)
        self.assertEqual(berlekamp_massey([F(0)] * 6).degree, 0)

    def test_impulse_has_full_complexity(self):
        F = PrimeField(13)
        g = berlekamp_massey([F(0), F(0), F(0), F(1)])
        self.assertEqual(g.degree, 4)
        self.assertTrue(generates(g, [F(0), F(0), F(0), F(1)]))

    def test_empty_window(self):
        with self.assertRaises(ParameterError):
            berlekamp_massey([])

    def test_recovers_roots_of_sparse_sequence(self):
        F = PrimeField(97)
        alpha = find_primitive_root_of_unity(F, 96)
        f = SparsePolynomial([(5, 3), (17, 1), (60, 42)], F)
        window = evaluate_geometric(f, alpha, 0, 1, 6)
        g = berlekamp_massey(window)
        self.assertEqual(g, GeneratorPolynomial.from_roots([alpha ** e for e in f.exponents]))

    def test_linear_complexity_equals_dft_weight(self):
        F = PrimeField(13)
        alpha = find_primitive_root_of_unity(F, 12)
        rng = numpy.random.default_rng(2024)
        for _ in range(500):
            # sparse vectors are rare otherwise
            v = [F(int(x)) if rng.random() < 0.5 else F(0) for x in rng.integers(1, 13, size=12)]
            weight = inverse_dft(v, alpha).sparsity
            self.assertEqual(berlekamp_massey(v + v).degree, weight)

    def test_output_generates_its_input(self):
        F = PrimeField(101)
        rng = numpy.random.default_rng(7)
        for _ in range(100):
            seq = [F(int(x)) for x in rng.integers(0, 101, size=int(rng.integers(1, 12)))]
            g = berlekamp_massey(seq)
            self.assertTrue(generates(g, seq))
            self.assertLessEqual(g.degree, len(seq))

    def test_generates_every_contiguous_sub_window(self):
        F = PrimeField(101)
        rng = numpy.random.default_rng(17)
        for _ in range(30):
            seq = [F(int(x)) for x in rng.integers(0, 101, size=10)]
            g = berlekamp_massey(seq)
            for i, j in itertools.combinations(range(len(seq) + 1), 2):
                self.assertTrue(generates(g, seq[i:j]), (seq, i, j))

    def test_degree_is_minimal(self):
        # every window of length <= 4 over F_5, against all shorter recurrences
        p = 5
        F = PrimeField(p)
        for length in range(1, 5):
            for raw in itertools.product(range(p), repeat=length):
                L = berlekamp_massey([F(x) for x in raw]).degree
                self.assertEqual(L, shortest_recurrence(raw, p), raw)


class TestCleanUp(unittest.TestCase):

    def setUp(self):
        self.F = PrimeField(97)
        self.alpha = find_primitive_root_of_unity(self.F, 96)
        self.f = SparsePolynomial([(3, 5), (40, 11)], self.F)
        self.word = evaluate_geometric(self.f, self.alpha, 0, 1, 20)
        self.generator = GeneratorPolynomial.from_roots([self.alpha ** 3, self.alpha ** 40])

    def corrupted(self, positions):
        word = list(self.word)
        for i in positions:
            word[i] = word[i] + 1
        return tuple(word)

    def test_clean_word_has_no_mismatch(self):
        result = clean_up(self.generator, self.word, 0, 0)
        self.assertEqual(result.corrected, self.word)
        self.assertEqual(result.mismatches, 0)

    def test_forward_and_backward_from_middle_window(self):
        received = self.corrupted([0, 2, 15])
        result = clean_up(self.generator, received, 6, 3)
        self.assertEqual(result.corrected, self.word)
        self.assertEqual(result.mismatches, 3)

    def test_rejects_above_budget(self):
        received = self.corrupted([0, 2, 15])
        self.assertIsNone(clean_up(self.generator, received, 6, 2))

    def test_progression_window(self):
        received = self.corrupted([0, 1, 4, 8])
        # window at positions 3, 10
        result = clean_up(self.generator, received, 3, 4, step=7, period=96)
        self.assertEqual(result.corrected, self.word)
        self.assertEqual(result.mismatches, 4)

    def test_progression_needs_coprime_period(self):
        with self.assertRaises(ParameterError):
            clean_up(self.generator, self.word, 0, 0, step=2, period=96)
        with self.assertRaises(ParameterError):
            clean_up(self.generator, self.word, 0, 0, step=5)

    def test_window_must_fit(self):
        with self.assertRaises(ParameterError):
            clean_up(self.generator, self.word, 19, 0)

    def test_zero_generator(self):
        zero = (self.F(0),) * 5
        received = zero[:2] + (self.F(4),) + zero[3:]
        result = clean_up(GeneratorPolynomial(), received, 0, 1)
        self.assertEqual(result.corrected, zero)
        self.assertEqual(result.mismatches, 1)

    def test_degenerate_generator_backward(self):
        g = GeneratorPolynomial([self.F(0), self.F(1)])
        with self.assertRaises(DegenerateGeneratorError):
            clean_up(g, self.word, 3, 20)
        self.assertIsNotNone(clean_up(g, self.word, 0, 20))


if __name__ == '__main__':
    unittest.main()

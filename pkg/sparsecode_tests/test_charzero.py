import itertools
import unittest
from fractions import Fraction

import numpy

from sparsecode.charzero import (
    NoUniqueDecodingError,
    RealCodeParameters,
    encode_real,
    minimum_distance,
    sign_changes,
    unique_decode_real,
    word_from_json,
    word_to_json,
)
from sparsecode.codec import Mode, NotEncodableError, enumerate_subsequences
from sparsecode.field import ParameterError, PrimeField
from sparsecode.sparse_poly import SparsePolynomial


def random_rational_poly(rng, T, max_degree):
    exponents = rng.choice(max_degree + 1, size=T, replace=False)
    terms = []
    for e in exponents:
        numerator = int(rng.integers(1, 20)) * (1 if rng.random() < 0.5 else -1)
        terms.append((int(e), Fraction(numerator, int(rng.integers(1, 9)))))
    return SparsePolynomial(terms)


def corrupt_rational(word, support, rng):
    word = list(word)
    for i in support:
        word[i] = word[i] + Fraction(int(rng.integers(1, 50)), int(rng.integers(1, 7)))
    return tuple(word)


class TestRealCodeParameters(unittest.TestCase):

    def test_geometric(self):
        params = RealCodeParameters.geometric(2, 4, 1)
        self.assertEqual(params.points, (1, 2, 4, 8))
        self.assertTrue(params.is_geometric)
        self.assertEqual(params.n, 4)

    def test_validation(self):
        with self.assertRaises(ParameterError):
            RealCodeParameters((1, -2, 3), 1)
        with self.assertRaises(ParameterError):
            RealCodeParameters((1, 2, 2), 1)
        with self.assertRaises(ParameterError):
            RealCodeParameters((), 1)
        with self.assertRaises(ParameterError):
            RealCodeParameters((1, 2), 0)
        with self.assertRaises(ParameterError):
            RealCodeParameters.geometric(1, 4, 1)
        with self.assertRaises(ParameterError):
            RealCodeParameters((1, 2, 5), 1, alpha=2)

    def test_general_points(self):
        params = RealCodeParameters((Fraction(1, 2), 3, 7), 1)
        self.assertFalse(params.is_geometric)
        self.assertEqual(minimum_distance(params), 2)


class TestEncodeReal(unittest.TestCase):

    def test_examples(self):
        params = RealCodeParameters.geometric(2, 3, 2)
        self.assertEqual(encode_real(SparsePolynomial(), params), (0, 0, 0))
        self.assertEqual(encode_real(SparsePolynomial([(1, 1)]), params), (1, 2, 4))

    def test_not_encodable(self):
        params = RealCodeParameters.geometric(2, 3, 1, degree_bound=5)
        with self.assertRaises(NotEncodableError):
            encode_real(SparsePolynomial([(1, 1), (2, 1)]), params)
        with self.assertRaises(NotEncodableError):
            encode_real(SparsePolynomial([(6, 1)]), params)
        with self.assertRaises(NotEncodableError):
            encode_real(SparsePolynomial([(1, 1)], PrimeField(13)), params)

    def test_word_json(self):
        word = (Fraction(1, 3), Fraction(-2), Fraction(0))
        self.assertEqual(word_from_json(word_to_json(word)), word)
        self.assertEqual(word_from_json('[1, "5/2"]'), (1, Fraction(5, 2)))
        with self.assertRaises(ParameterError):
            word_from_json('{"values": ["x"]}')


class TestDescartes(unittest.TestCase):

    def test_sign_changes(self):
        self.assertEqual(sign_changes(SparsePolynomial()), 0)
        self.assertEqual(sign_changes(SparsePolynomial([(0, -1), (3, 2), (7, 5)])), 1)
        self.assertEqual(sign_changes(SparsePolynomial([(0, 1), (1, -1), (2, 1), (9, -1)])), 3)

    def test_sparse_codewords_agree_rarely(self):
        rng = numpy.random.default_rng(8)
        T = 3
        points = sorted({Fraction(int(a), int(b)) for a, b in rng.integers(1, 30, size=(12, 2))})
        params = RealCodeParameters(points, T, degree_bound=15)
        for _ in range(200):
            f = random_rational_poly(rng, T, 15)
            g = random_rational_poly(rng, T, 15)
            if f == g:
                continue
            difference = f - g
            self.assertLessEqual(sign_changes(difference), 2 * T - 1)
            agreements = sum(
                1 for a, b in zip(encode_real(f, params), encode_real(g, params)) if a == b
            )
            self.assertLessEqual(agreements, 2 * T - 1)

    def test_minimum_distance(self):
        self.assertEqual(minimum_distance(RealCodeParameters.geometric(2, 10, 3)), 5)


class TestUniqueDecodeReal(unittest.TestCase):

    def test_clean_word(self):
        params = RealCodeParameters.geometric(Fraction(3, 2), 8, 2, degree_bound=10)
        f = SparsePolynomial([(1, Fraction(-1, 3)), (7, 4)])
        self.assertEqual(unique_decode_real(encode_real(f, params), params, 2), f)

    def test_exhaustive_two_errors(self):
        T, E, n = 3, 2, 10
        params = RealCodeParameters.geometric(2, n, T, degree_bound=10)
        windows = enumerate_subsequences(n, 2 * T, Mode.AFFINE_ALL)
        rng = numpy.random.default_rng(10)
        unresolved = 0
        for _ in range(50):
            f = random_rational_poly(rng, T, 10)
            word = encode_real(f, params)
            for support in itertools.combinations(range(n), E):
                received = corrupt_rational(word, support, rng)
                clean = any(
                    not {r + i * s for i in range(2 * T)} & set(support) for r, s in windows
                )
                try:
                    decoded = unique_decode_real(received, params, E)
                except NoUniqueDecodingError:
                    self.assertFalse(clean, (f, support))
                    unresolved += 1
                    continue
                self.assertEqual(decoded, f)
        self.assertLess(unresolved, 50 * 45)

    def test_too_many_errors_fails_cleanly(self):
        params = RealCodeParameters.geometric(2, 10, 3, degree_bound=10)
        f = SparsePolynomial([(0, 1), (4, -2), (9, Fraction(1, 5))])
        received = corrupt_rational(encode_real(f, params), [0, 3, 6, 9], numpy.random.default_rng(0))
        try:
            decoded = unique_decode_real(received, params, 2)
        except NoUniqueDecodingError:
            return
        self.assertNotEqual(decoded, f)

    def test_preconditions(self):
        params = RealCodeParameters.geometric(2, 9, 3)
        with self.assertRaises(ParameterError):
            unique_decode_real((0,) * 9, params, 2)
        general = RealCodeParameters((1, 3, 4, 7), 1)
        with self.assertRaises(ParameterError):
            unique_decode_real((0,) * 4, general, 1)
        with self.assertRaises(ParameterError):
            unique_decode_real((0,) * 3, RealCodeParameters.geometric(2, 4, 1), 1)


if __name__ == '__main__':
    unittest.main()

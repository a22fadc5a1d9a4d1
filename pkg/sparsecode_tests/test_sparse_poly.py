import unittest
from fractions import Fraction

import numpy

from sparsecode.field import ParameterError, PrimeField, find_primitive_root_of_unity
from sparsecode.sparse_poly import SparsePolynomial, evaluate_geometric, inverse_dft


class TestSparsePolynomial(unittest.TestCase):

    def setUp(self):
        self.F = PrimeField(13)

    def test_normalises_terms(self):
        f = SparsePolynomial([(5, 3), (1, 2), (5, 10), (7, 0)], self.F)
        self.assertEqual(f.terms, ((1, self.F(2)),))
        self.assertEqual(f.sparsity, 1)
        self.assertEqual(f.degree, 1)

    def test_zero_polynomial(self):
        z = SparsePolynomial.zero(self.F)
        self.assertTrue(z.is_zero())
        self.assertEqual(z.degree, -1)
        self.assertEqual(z(self.F(4)), 0)

    def test_bad_exponent(self):
        with self.assertRaises(ParameterError):
            SparsePolynomial([(-1, 1)], self.F)
        with self.assertRaises(ParameterError):
            SparsePolynomial([(1.5, 1)], self.F)

    def test_arithmetic(self):
        f = SparsePolynomial([(0, 1), (3, 4)], self.F)
        g = SparsePolynomial([(3, 9), (4, 1)], self.F)
        self.assertEqual(f + g, SparsePolynomial([(0, 1), (4, 1)], self.F))
        self.assertTrue((f - f).is_zero())

    def test_rational_coefficients(self):
        f = SparsePolynomial([(2, "1/3"), (0, Fraction(-1, 2))])
        self.assertIsNone(f.field)
        self.assertEqual(f(Fraction(3)), Fraction(5, 2))

    def test_json_keeps_field_and_rationals(self):
        f = SparsePolynomial([(2, 5), (9, 12)], self.F)
        self.assertEqual(f.to_dict(), {"p": 13, "terms": [[2, 5], [9, 12]]})
        self.assertEqual(SparsePolynomial.from_json(f.to_json()), f)
        q = SparsePolynomial([(1, Fraction(-7, 3))])
        self.assertEqual(q.to_dict(), {"p": None, "terms": [[1, "-7/3"]]})
        self.assertEqual(SparsePolynomial.from_json(q.to_json()), q)

    def test_malformed_json(self):
        for text in ('nope', '[1, 2]', '{"p": 13}', '{"p": 13, "terms": [[1]]}'):
            with self.assertRaises(ParameterError):
                SparsePolynomial.from_json(text)

    def test_json_entries_are_not_rounded(self):
        for text in ('{"p": 13, "terms": [[1, 2.7]]}',
                     '{"p": 13, "terms": [[1, "abc"]]}',
                     '{"p": 13, "terms": [["1", 2]]}',
                     '{"p": 13, "terms": [[1.0, 2]]}',
                     '{"p": "13", "terms": [[1, 2]]}',
                     '{"p": 13, "terms": [[1, "1/13"]]}',
                     '{"p": null, "terms": [[1, 0.5]]}'):
            with self.assertRaises(ParameterError, msg=text):
                SparsePolynomial.from_json(text)
        f = SparsePolynomial.from_json('{"p": 13, "terms": [[1, "1/2"]]}')
        self.assertEqual(f.terms, ((1, self.F(7)),))


class TestEvaluateGeometric(unittest.TestCase):

    def test_matches_direct_evaluation(self):
        F = PrimeField(97)
        alpha = find_primitive_root_of_unity(F, 96)
        f = SparsePolynomial([(3, 5), (40, 11), (95, 2)], F)
        for r, s in ((0, 1), (2, 3), (7, 5)):
            values = evaluate_geometric(f, alpha, r, s, 20)
            self.assertEqual(values, tuple(f(alpha ** (r + i * s)) for i in range(20)))

    def test_affine_substitution(self):
        # f(alpha^(r+is)) = g(beta^i) with g(z) = f(z alpha^r), beta = alpha^s
        F = PrimeField(101)
        alpha = find_primitive_root_of_unity(F, 25)
        f = SparsePolynomial([(4, 7), (17, 3)], F)
        r, s = 3, 2
        g = SparsePolynomial([(e, c * alpha ** (r * e)) for e, c in f.terms], F)
        self.assertEqual(
            evaluate_geometric(f, alpha, r, s, 11),
            evaluate_geometric(g, alpha ** s, 0, 1, 11),
        )

    def test_rational_points(self):
        f = SparsePolynomial([(1, 1)])
        self.assertEqual(evaluate_geometric(f, Fraction(2), 0, 1, 3), (1, 2, 4))

    def test_zero_polynomial(self):
        F = PrimeField(13)
        self.assertEqual(evaluate_geometric(SparsePolynomial.zero(F), F(2), 0, 1, 4), (0,) * 4)

    def test_bad_arguments(self):
        F = PrimeField(13)
        f = SparsePolynomial.monomial(1, 1, F)
        for start, step, count in ((-1, 1, 3), (0, 0, 3), (0, 1, 0)):
            with self.assertRaises(ParameterError):
                evaluate_geometric(f, F(2), start, step, count)


class TestInverseDFT(unittest.TestCase):

    def test_round_trip_on_random_vectors(self):
        F = PrimeField(13)
        alpha = find_primitive_root_of_unity(F, 12)
        rng = numpy.random.default_rng(3)
        for _ in range(50):
            v = tuple(F(int(x)) for x in rng.integers(0, 13, size=12))
            f = inverse_dft(v, alpha)
            self.assertEqual(evaluate_geometric(f, alpha, 0, 1, 12), v)

    def test_delta_vector(self):
        F = PrimeField(13)
        alpha = find_primitive_root_of_unity(F, 12)
        v = [1] + [0] * 11
        f = inverse_dft(v, alpha)
        # every coefficient is 1/12
        self.assertEqual(f.sparsity, 12)
        self.assertTrue(all(c == F(12).inverse() for c in f.coefficients))

    def test_periodic_pattern_has_weight_T(self):
        # (0, ..., 0, 1) repeated with period T transforms to exactly T terms
        F = PrimeField(13)
        m = 12
        alpha = find_primitive_root_of_unity(F, m)
        for T in (1, 2, 3, 6):
            v = [1 if i % T == T - 1 else 0 for i in range(m)]
            f = inverse_dft(v, alpha)
            self.assertEqual(f.sparsity, T, "T=%d" % T)
            self.assertTrue(all(e % (m // T) == 0 for e in f.exponents), f)
            self.assertEqual(evaluate_geometric(f, alpha, 0, 1, m), tuple(F(x) for x in v))

    def test_wrong_order(self):
        F = PrimeField(13)
        with self.assertRaises(ParameterError):
            inverse_dft([1, 2, 3], find_primitive_root_of_unity(F, 12))


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-
"""
sparse_poly.py -- sparse univariate polynomials, geometric evaluation and
the inverse DFT over F_p

A polynomial lives either over a PrimeField (field=PrimeField) or over the
rationals (field=None, coefficients are Rational).

"""
import json

from .field import (
    ParameterError,
    PrimeField,
    Rational,
    format_rational,
    parse_json_number,
    parse_rational,
)


class SparsePolynomial(object):
    """f(x) = sum_j c_j x^e_j with distinct exponents and no zero coefficient.

    Terms are kept sorted by increasing exponent, so equality is a
    structural comparison.
    """
    def __init__(self, terms=(), field=None):
        """
        :param terms: iterable of (exponent, coefficient); repeated exponents
            are summed
        :param field: PrimeField of the coefficients, None for rationals
        :raises: ParameterError: on negative or non-integer exponents
        """
        self.field = field
        collected = {}
        for e, c in terms:
            if int(e) != e or e < 0:
                raise ParameterError("bad exponent %r" % (e,))
            e = int(e)
            c = self._coefficient(c)
            collected[e] = collected[e] + c if e in collected else c
        self.terms = tuple(
            (e, c) for e, c in sorted(collected.items()) if c != 0
        )

    def _coefficient(self, c):
        if self.field is not None:
            return self.field(c)
        if isinstance(c, str):
            return parse_rational(c)
        return Rational(c)

    @classmethod
    def zero(cls, field=None):
        return cls((), field)

    @classmethod
    def monomial(cls, exponent, coefficient=1, field=None):
        return cls([(exponent, coefficient)], field)

    @property
    def sparsity(self):
        return len(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self):
        """ Largest exponent, -1 for the zero polynomial """
        return self.terms[-1][0] if self.terms else -1

    @property
    def exponents(self):
        return tuple(e for e, _ in self.terms)

    @property
    def coefficients(self):
        return tuple(c for _, c in self.terms)

    def is_zero(self):
        return not self.terms

    def __call__(self, x):
        total = x * 0
        for e, c in self.terms:
            total = total + c * x ** e
        return total

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.field, self.terms))

    def __neg__(self):
        return SparsePolynomial([(e, -c) for e, c in self.terms], self.field)

    def __add__(self, other):
        if self.field != other.field:
            raise ParameterError("adding polynomials over different rings")
        return SparsePolynomial(self.terms + other.terms, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join("%s*x^%d" % (self._format(c), e) for e, c in self.terms)
        ring = "mod %d" % self.field.p if self.field is not None else "over Q"
        return "SparsePolynomial(%s %s)" % (body, ring)

    def _format(self, c):
        if self.field is not None:
            return str(int(c))
        return format_rational(c) if c.denominator != 1 else str(c.numerator)

    def to_dict(self):
        """ {"p": p or null, "terms": [[e, c], ...]}, exponents ascending.
        Rational coefficients are written as "num/den" strings.
        """
        if self.field is not None:
            terms = [[e, int(c)] for e, c in self.terms]
            return {"p": self.field.p, "terms": terms}
        return {"p": None, "terms": [[e, format_rational(c)] for e, c in self.terms]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data):
        """ Inverse of to_dict
        :raises: ParameterError: if the dict is malformed
        """
        try:
            p = data.get("p")
            terms = [(e, c) for e, c in data["terms"]]
        except (AttributeError, KeyError, TypeError, ValueError):
            raise ParameterError("malformed polynomial: %r" % (data,))
        field = PrimeField(parse_json_number(p)) if p is not None else None
        terms = [(parse_json_number(e), parse_json_number(c, rational=True)) for e, c in terms]
        try:
            return cls(terms, field)
        except ZeroDivisionError:
            raise ParameterError("coefficient denominator vanishes mod %d: %r" % (p, data))

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError:
            raise ParameterError("polynomial is not JSON: %r" % (text,))
        return cls.from_dict(data)


def evaluate_geometric(f, alpha, start, step, count):
    """ Evaluate f at alpha^(start + i*step) for 0 <= i < count
    :param f: SparsePolynomial
    :param alpha: FieldElement (or Rational for the rational codes)
    :param start: first exponent r >= 0
    :param step: exponent increment s >= 1
    :param count: number of values n >= 1
    :return: tuple of values
    :raises: ParameterError: on out-of-range start/step/count
    """
    if start < 0 or step < 1 or count < 1:
        raise ParameterError(
            "need start >= 0, step >= 1, count >= 1 (got %r, %r, %r)" % (start, step, count)
        )
    zero = alpha * 0
    # term j contributes c_j b_j^r (b_j^s)^i with b_j = alpha^e_j
    current = []
    ratios = []
    for e, c in f.terms:
        b = alpha ** e
        current.append(c * b ** start)
        ratios.append(b ** step)
    values = []
    for _ in range(count):
        total = zero
        for j, v in enumerate(current):
            total = total + v
            current[j] = v * ratios[j]
        values.append(total)
    return tuple(values)


def inverse_dft(v, alpha):
    """ Polynomial f of degree < m with f(alpha^i) = v[i], m = len(v)

    Computed naively as (1/m) DFT_{alpha^-1}(v), stored sparsely.

    :raises: ParameterError: if alpha does not have order m
    """
    m = len(v)
    if m < 1 or alpha.multiplicative_order() != m:
        raise ParameterError("alpha %r does not have order %d" % (alpha, m))
    field = alpha.field
    v = [field(x) for x in v]
    inv_m = field(m).inverse()
    inv_alpha = alpha.inverse()
    terms = []
    for e in range(m):
        root = inv_alpha ** e
        acc = field.zero
        power = field.one
        for x in v:
            acc = acc + x * power
            power = power * root
        terms.append((e, acc * inv_m))
    return SparsePolynomial(terms, field)

# -*- coding: utf-8 -*-
"""
field.py -- exact arithmetic in a prime field F_p

Elements are canonical integers in [0, p). Moduli are kept below 2^31 so
every product fits a double-width machine integer. Rationals for the
characteristic-zero codes are plain `fractions.Fraction` values.

"""
from fractions import Fraction
from functools import lru_cache

import sympy


class FieldConstructionError(ValueError):
    """Raised when a prime field is requested for an unusable modulus
    """


class ParameterError(ValueError):
    """Raised when code or field parameters violate a precondition
    """


class DuplicateLogError(ParameterError):
    """Raised when a discrete log table meets the same power twice
    """


MAX_MODULUS = 2 ** 31

Rational = Fraction


def parse_rational(text):
    """ Parse a "num/den" (or integer) string into a Rational
    :raises: ParameterError: if text is not a rational
    """
    try:
        return Rational(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ParameterError("not a rational: %r" % (text,))


def parse_json_number(value, rational=False):
    """ An int, or with rational=True also a "num/den" string, read from JSON

    Floats and other types are refused rather than rounded.

    :raises: ParameterError: for anything else
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if rational and isinstance(value, str):
        return parse_rational(value)
    expected = "an integer or \"num/den\"" if rational else "an integer"
    raise ParameterError("expected %s, got %r" % (expected, value))


def format_rational(q):
    """ Format a Rational as "num/den" """
    q = Rational(q)
    return "%d/%d" % (q.numerator, q.denominator)


class PrimeField(object):
    """The prime field F_p, p an odd prime below 2^31.
    """
    def __init__(self, p):
        """
        :param p: prime modulus, 3 <= p < 2^31
        :raises: FieldConstructionError: if p is not such a prime
        """
        if int(p) != p:
            raise FieldConstructionError("modulus must be an integer: %r" % (p,))
        p = int(p)
        if p < 3 or p >= MAX_MODULUS or not sympy.isprime(p):
            raise FieldConstructionError("%d is not a prime in [3, 2^31)" % p)
        self.p = p
        self._order_factors = None
        self._generator = None

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ParameterError("element of F_%d used in F_%d" % (value.field.p, self.p))
            return value
        if isinstance(value, Fraction):
            return FieldElement(self, value.numerator) / FieldElement(self, value.denominator)
        return FieldElement(self, int(value))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('PrimeField', self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p

    def __reduce__(self):
        return (PrimeField, (self.p,))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    def order_factors(self):
        """ Distinct prime factors of p-1, cached """
        if self._order_factors is None:
            self._order_factors = tuple(sympy.primefactors(self.p - 1))
        return self._order_factors

    def generator(self):
        """ Smallest generator g of the multiplicative group F_p^* """
        if self._generator is None:
            n = self.p - 1
            for g in range(2, self.p):
                if all(pow(g, n // q, self.p) != 1 for q in self.order_factors()):
                    self._generator = FieldElement(self, g)
                    break
        return self._generator


class FieldElement(object):
    """An element of a PrimeField, stored as its canonical representative.

    Elements hash like their integer value and compare equal to it, so a
    table keyed by elements can also be read with integers in [0, p).
    """
    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ParameterError("mixing F_%d and F_%d" % (self.field.p, other.field.p))
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * FieldElement(self.field, o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, o) * self.inverse()

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return FieldElement(self.field, pow(self.value, exponent, self.field.p))

    def inverse(self):
        """ Multiplicative inverse
        :raises: ZeroDivisionError: for the zero element
        """
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in F_%d" % self.field.p)
        return FieldElement(self.field, pow(self.value, -1, self.field.p))

    def multiplicative_order(self):
        """ Order of the element in F_p^*
        :raises: ZeroDivisionError: for the zero element
        """
        if self.value == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        p = self.field.p
        order = p - 1
        for q in self.field.order_factors():
            while order % q == 0 and pow(self.value, order // q, p) == 1:
                order //= q
        return order

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            # only canonical integers, so equal objects hash alike
            return self.value == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return "%d (mod %d)" % (self.value, self.field.p)

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))


def find_primitive_root_of_unity(field, m):
    """ Find a primitive m-th root of unity in F_p
    :param field: PrimeField
    :param m: order wanted, must divide p-1
    :return: alpha = g^((p-1)/m) for the smallest generator g
    :raises: ParameterError: if m does not divide p-1
    """
    if m < 1 or (field.p - 1) % m:
        raise ParameterError("%d does not divide p-1 = %d" % (m, field.p - 1))
    return field.generator() ** ((field.p - 1) // m)


@lru_cache(maxsize=64)
def discrete_log_table(field, alpha, m):
    """ Table mapping alpha^e -> e for 0 <= e < m

    The result is cached and shared; callers must not mutate it.

    :raises: DuplicateLogError: if alpha has order smaller than m
    :raises: ParameterError: if alpha^m != 1
    """
    alpha = field(alpha)
    table = {}
    power = field.one
    for e in range(m):
        if power in table:
            raise DuplicateLogError(
                "%r repeats at exponents %d and %d" % (power, table[power], e)
            )
        table[power] = e
        power = power * alpha
    if power != 1:
        raise ParameterError("%r does not have order %d" % (alpha, m))
    return table

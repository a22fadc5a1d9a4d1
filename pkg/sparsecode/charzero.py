# -*- coding: utf-8 -*-
"""
charzero.py -- sparse polynomial evaluation codes over the rationals

Evaluation points are distinct positive rationals. By Descartes' rule a
nonzero polynomial with at most 2T terms has at most 2T-1 positive roots,
so two T-sparse code words agree on at most 2T-1 points and the minimum
distance is n - 2T + 1. Decoding needs geometric points xi_i = alpha^i.

"""
import json
import logging
import os
from dataclasses import dataclass

from .codec import DecodingFailed, Mode, NotEncodableError, enumerate_subsequences, hamming_distance
from .field import ParameterError, Rational, format_rational, parse_rational
from .prony import NotACodewordError, recover_terms
from .sparse_poly import SparsePolynomial, evaluate_geometric

log = logging.getLogger(__name__)
if os.getenv('DEBUGSPARSECODE'):
    log.setLevel(logging.DEBUG)

DEFAULT_DEGREE_BOUND = 64


class NoUniqueDecodingError(DecodingFailed):
    """Raised when the sieve leaves no candidate or more than one
    """


@dataclass(frozen=True)
class RealCodeParameters:
    """Evaluation code over Q at positive points, geometric when alpha is set.

    degree_bound caps the exponents the decoder looks for.
    """
    points: tuple
    T: int
    degree_bound: int = DEFAULT_DEGREE_BOUND
    alpha: object = None

    def __post_init__(self):
        points = tuple(Rational(x) for x in self.points)
        if not points:
            raise ParameterError("no evaluation points")
        if any(x <= 0 for x in points):
            raise ParameterError("evaluation points must be positive")
        if len(set(points)) != len(points):
            raise ParameterError("evaluation points must be distinct")
        if self.T < 1:
            raise ParameterError("sparsity bound T must be >= 1, got %d" % self.T)
        if self.degree_bound < 0:
            raise ParameterError("degree bound must be >= 0, got %d" % self.degree_bound)
        object.__setattr__(self, "points", points)
        if self.alpha is not None:
            alpha = Rational(self.alpha)
            if alpha <= 0 or alpha == 1:
                raise ParameterError("alpha must be positive and != 1, got %s" % alpha)
            if points != tuple(alpha ** i for i in range(len(points))):
                raise ParameterError("points are not the powers of %s" % alpha)
            object.__setattr__(self, "alpha", alpha)

    @classmethod
    def geometric(cls, alpha, n, T, degree_bound=DEFAULT_DEGREE_BOUND):
        """ Points alpha^0, ..., alpha^(n-1) """
        alpha = Rational(alpha)
        return cls(tuple(alpha ** i for i in range(n)), T, degree_bound, alpha)

    @property
    def n(self):
        return len(self.points)

    @property
    def is_geometric(self):
        return self.alpha is not None


def minimum_distance(params):
    """ n - 2T + 1 """
    return params.n - 2 * params.T + 1


def sign_changes(f):
    """ Sign changes in the coefficients of f taken by increasing exponent;
    bounds the number of positive roots of f
    """
    changes = 0
    previous = None
    for c in f.coefficients:
        sign = c > 0
        if previous is not None and sign != previous:
            changes += 1
        previous = sign
    return changes


def encode_real(f, params):
    """ (f(xi_0), ..., f(xi_{n-1})) in exact arithmetic
    :raises: NotEncodableError: if f is not over Q, has more than T terms or
        exceeds the degree bound
    """
    if f.field is not None:
        raise NotEncodableError("%r is not a rational polynomial" % (f,))
    if f.sparsity > params.T:
        raise NotEncodableError("%r has %d > T=%d terms" % (f, f.sparsity, params.T))
    if f.degree > params.degree_bound:
        raise NotEncodableError("%r exceeds degree bound %d" % (f, params.degree_bound))
    return tuple(f(x) for x in params.points)


def word_to_json(values):
    return json.dumps({"p": None, "values": [format_rational(v) for v in values]})


def word_from_json(text):
    """ Rational word written by word_to_json (plain numbers are accepted too)
    :raises: ParameterError: if the text is not such a word
    """
    try:
        data = json.loads(text)
        raw = data["values"] if isinstance(data, dict) else data
        return tuple(parse_rational(v) for v in raw)
    except (ValueError, KeyError, TypeError):
        raise ParameterError("not a rational word: %r" % (text,))


def _interpolate(window, alpha, r, s, degree_bound):
    beta = alpha ** s
    log_table = {beta ** e: e for e in range(degree_bound + 1)}
    terms = recover_terms(window, log_table)
    f = SparsePolynomial([(e, d * alpha ** (-r * e)) for e, d in terms])
    if evaluate_geometric(f, alpha, r, s, len(window)) != tuple(window):
        raise NotACodewordError("recovered %r does not reproduce the window" % (f,))
    return f


def unique_decode_real(word, params, E, mode=Mode.AFFINE_ALL):
    """ Decode a word of a geometric rational code with at most E errors

    Every sub-sequence of length 2T of the mode is interpolated; the
    candidates within floor((delta - 1)/2) of the word are kept, and by the
    minimum distance at most one of them can be.

    :param word: sequence of rationals, length n
    :param params: geometric RealCodeParameters with n >= 2T + 2E
    :param E: error bound
    :return: SparsePolynomial over Q
    :raises: ParameterError: if the points are not geometric or n < 2T + 2E
    :raises: NoUniqueDecodingError: if no candidate, or more than one, survives
    """
    if not params.is_geometric:
        raise ParameterError("decoding needs geometric evaluation points")
    values = tuple(Rational(v) for v in word)
    n, k = params.n, 2 * params.T
    if len(values) != n:
        raise ParameterError("word of length %d for a code of length %d" % (len(values), n))
    if n < k + 2 * E:
        raise ParameterError("n=%d < 2T + 2E = %d" % (n, k + 2 * E))
    radius = (minimum_distance(params) - 1) // 2
    survivors = {}
    for r, s in enumerate_subsequences(n, k, mode):
        window = values[r:r + (k - 1) * s + 1:s]
        try:
            f = _interpolate(window, params.alpha, r, s, params.degree_bound)
        except NotACodewordError as e:
            log.debug("sub-sequence (r=%d, s=%d) rejected: %s", r, s, e)
            continue
        if f in survivors:
            continue
        distance = hamming_distance(encode_real(f, params), values)
        if distance <= radius:
            survivors[f] = distance
    if len(survivors) != 1:
        raise NoUniqueDecodingError(
            "%d candidates within distance %d" % (len(survivors), radius)
        )
    return next(iter(survivors))

# -*- coding: utf-8 -*-
"""
recurrence.py -- linear recurrences: Berlekamp-Massey synthesis, generator
checks and the sequence clean-up used to sieve decoding candidates

The routines only use +, -, *, / and comparison with 0, so they run over
F_p (FieldElement) and over the rationals (Rational) alike.

"""
import logging
from collections import namedtuple
from math import gcd

from .field import ParameterError

log = logging.getLogger(__name__)


class DegenerateGeneratorError(ValueError):
    """Raised when a generator with Lambda(0) = 0 must run backwards
    """


CleanUpResult = namedtuple('CleanUpResult', ['corrected', 'mismatches'])


class GeneratorPolynomial(object):
    """Monic Lambda(z) = z^t - sum_{i<t} lambda_i z^i.

    The sequence rule is a_{j+t} = sum_{i<t} lambda_i a_{j+i}. Degree 0
    (no lambdas) is Lambda = 1, the generator of the zero sequence.
    """
    def __init__(self, lambdas=()):
        self.lambdas = tuple(lambdas)

    @classmethod
    def from_roots(cls, roots):
        """ Expand prod_j (z - b_j) """
        roots = list(roots)
        if not roots:
            return cls(())
        zero = roots[0] * 0
        coeffs = [zero + 1]  # ascending
        for b in roots:
            shifted = [zero] + coeffs
            for i, c in enumerate(coeffs):
                shifted[i] = shifted[i] - b * c
            coeffs = shifted
        t = len(roots)
        return cls(-coeffs[i] for i in range(t))

    @property
    def degree(self):
        return len(self.lambdas)

    def coefficients(self):
        """ Ascending coefficients of Lambda, leading 1 included """
        one = (self.lambdas[0] * 0 + 1) if self.lambdas else 1
        return tuple(-lam for lam in self.lambdas) + (one,)

    def constant_term(self):
        """ Lambda(0) """
        if not self.lambdas:
            return 1
        return -self.lambdas[0]

    def __call__(self, z):
        value = z ** self.degree
        power = z * 0 + 1
        for lam in self.lambdas:
            value = value - lam * power
            power = power * z
        return value

    def next_value(self, window):
        """ a_{j+t} from the t values a_j .. a_{j+t-1} """
        total = window[0] * 0 if window else 0
        for lam, a in zip(self.lambdas, window):
            total = total + lam * a
        return total

    def __eq__(self, other):
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        return self.lambdas == other.lambdas

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.lambdas)

    def __repr__(self):
        return "GeneratorPolynomial(%r)" % (self.lambdas,)


def berlekamp_massey(window):
    """ Minimal-degree generating polynomial of a finite sequence
    :param window: non-empty sequence of field elements or rationals
    :return: GeneratorPolynomial of degree <= len(window)
    :raises: ParameterError: on an empty window
    """
    seq = list(window)
    if not seq:
        raise ParameterError("Berlekamp-Massey needs a non-empty window")
    zero = seq[0] * 0
    one = zero + 1
    conn = [one]     # connection polynomial C(x), ascending
    prev = [one]     # C before the last length change
    length = 0
    shift = 1
    last_d = one
    for n, a in enumerate(seq):
        if len(conn) < length + 1:
            conn.extend([zero] * (length + 1 - len(conn)))
        d = a
        for i in range(1, length + 1):
            d = d + conn[i] * seq[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / last_d
        saved = list(conn)
        if len(conn) < len(prev) + shift:
            conn.extend([zero] * (len(prev) + shift - len(conn)))
        for i, c in enumerate(prev):
            conn[i + shift] = conn[i + shift] - coef * c
        if 2 * length <= n:
            length = n + 1 - length
            prev = saved
            last_d = d
            shift = 1
        else:
            shift += 1
    if len(conn) < length + 1:
        conn.extend([zero] * (length + 1 - len(conn)))
    # a_j = -sum_{i=1..L} C_i a_{j-i}, hence lambda_i = -C_{L-i}
    return GeneratorPolynomial(-conn[length - i] for i in range(length))


def generates(generator, seq):
    """ True iff a_{j+t} = sum_i lambda_i a_{j+i} for 0 <= j <= len(seq)-t-1 """
    seq = list(seq)
    t = generator.degree
    for j in range(len(seq) - t):
        if seq[j + t] != generator.next_value(seq[j:j + t]):
            return False
    return True


def clean_up(generator, received, start, max_errors, step=1, period=None):
    """ Regenerate the whole word from a trusted window and count mismatches

    With step=1 the trusted window is received[start:start+t] and the
    recurrence runs forward and backward from it. With step > 1 the window
    is received[start + i*step], i < t; the recurrence runs forward along
    the progression for `period` terms and position q reads the term of
    index (q - start) * step^-1 mod period.

    :param generator: candidate GeneratorPolynomial of degree t
    :param received: received word
    :param start: index of the trusted window
    :param max_errors: error budget E
    :param step: progression step s
    :param period: order m of the evaluation root (needed when step > 1)
    :return: CleanUpResult(corrected, mismatches), or None when more than
        max_errors positions disagree
    :raises: DegenerateGeneratorError: if Lambda(0) = 0 and start > 0
    :raises: ParameterError: if the window does not fit or gcd(step, period) != 1
    """
    received = tuple(received)
    n = len(received)
    t = generator.degree
    if step < 1 or start < 0 or (t and start + (t - 1) * step >= n):
        raise ParameterError(
            "window start=%d step=%d degree=%d outside length %d" % (start, step, t, n)
        )
    if t == 0:
        zero = received[0] * 0
        corrected = (zero,) * n
    elif step == 1:
        corrected = _regenerate_contiguous(generator, received, start)
    else:
        if period is None or gcd(step, period) != 1:
            raise ParameterError("step %d needs a coprime period, got %r" % (step, period))
        corrected = _regenerate_progression(generator, received, start, step, period)
    mismatches = sum(1 for a, b in zip(corrected, received) if a != b)
    if mismatches > max_errors:
        log.debug("clean-up rejects %r: %d mismatches > %d", generator, mismatches, max_errors)
        return None
    return CleanUpResult(corrected, mismatches)


def _regenerate_contiguous(generator, received, start):
    n = len(received)
    t = generator.degree
    out = list(received)
    for j in range(start + t, n):
        out[j] = generator.next_value(out[j - t:j])
    if start > 0:
        lam0 = generator.lambdas[0]
        if lam0 == 0:
            raise DegenerateGeneratorError(
                "Lambda(0) = 0, cannot extend backward from %d" % start
            )
        for j in range(start - 1, -1, -1):
            acc = out[j + t]
            for i in range(1, t):
                acc = acc - generator.lambdas[i] * out[j + i]
            out[j] = acc / lam0
    return tuple(out)


def _regenerate_progression(generator, received, start, step, period):
    t = generator.degree
    terms = [received[start + i * step] for i in range(t)]
    while len(terms) < period:
        terms.append(generator.next_value(terms[-t:]))
    inverse_step = pow(step, -1, period)
    return tuple(
        terms[((q - start) * inverse_step) % period] for q in range(len(received))
    )

# -*- coding: utf-8 -*-
"""
prony.py -- sparse interpolation from a clean window of evaluations

Pipeline: Berlekamp-Massey -> roots of Lambda found by scanning the
candidate powers -> exponents read from a log table -> coefficients from a
transposed Vandermonde system.

"""
import logging
from math import gcd

from .field import ParameterError, discrete_log_table
from .recurrence import berlekamp_massey
from .sparse_poly import SparsePolynomial, evaluate_geometric

log = logging.getLogger(__name__)


class SingularSystemError(ValueError):
    """Raised when a Vandermonde system has repeated nodes
    """


class NotACodewordError(ValueError):
    """Raised when a window is not the evaluation of a sparse polynomial
    """


def solve_transposed_vandermonde(b, a):
    """ Solve sum_j c_j b_j^i = a_i for 0 <= i < t in O(t^2)

    With M(z) = prod_l (z - b_l) and q_j(z) = M(z) / (z - b_j),
    c_j = (sum_k q_{j,k} a_k) / q_j(b_j).

    :param b: t pairwise distinct nodes
    :param a: t right-hand side values
    :return: list of t coefficients
    :raises: SingularSystemError: if two nodes coincide
    """
    b = list(b)
    a = list(a)
    if len(a) != len(b):
        raise ParameterError("%d nodes but %d values" % (len(b), len(a)))
    if not b:
        return []
    if len(set(b)) != len(b):
        raise SingularSystemError("repeated Vandermonde node in %r" % (b,))
    zero = b[0] * 0
    one = zero + 1
    master = [one]  # ascending coefficients of M(z)
    for node in b:
        shifted = [zero] + master
        for i, c in enumerate(master):
            shifted[i] = shifted[i] - node * c
        master = shifted
    t = len(b)
    solution = []
    for node in b:
        # synthetic division of M(z) by (z - node)
        quotient = [zero] * t
        carry = master[t]
        for k in range(t - 1, -1, -1):
            quotient[k] = carry
            carry = master[k] + carry * node
        numerator = zero
        for q, value in zip(quotient, a):
            numerator = numerator + q * value
        denominator = zero
        power = one
        for q in quotient:
            denominator = denominator + q * power
            power = power * node
        solution.append(numerator / denominator)
    return solution


def recover_terms(window, log_table, generator=None):
    """ Terms (e_j, d_j) with window[i] = sum_j d_j root^(e_j i)

    :param window: clean window of length k
    :param log_table: mapping candidate root root^e -> e
    :param generator: the window's minimal generator, if already known
    :return: list of (exponent, coefficient), exponents ascending
    :raises: NotACodewordError: if Lambda has degree > k/2 or does not split
        into distinct roots of the table
    """
    window = list(window)
    if generator is None:
        generator = berlekamp_massey(window)
    t = generator.degree
    if 2 * t > len(window):
        raise NotACodewordError(
            "generator degree %d too large for a window of %d" % (t, len(window))
        )
    if t == 0:
        return []
    roots = sorted((e, b) for b, e in log_table.items() if generator(b) == 0)
    if len(roots) != t:
        raise NotACodewordError(
            "Lambda of degree %d has %d roots among the candidates" % (t, len(roots))
        )
    nodes = [b for _, b in roots]
    coefficients = solve_transposed_vandermonde(nodes, window[:t])
    return [(e, c) for (e, _), c in zip(roots, coefficients)]


def prony_interpolate(window, alpha, m, generator=None):
    """ Recover f from window = (f(alpha^0), ..., f(alpha^(k-1)))
    :param window: clean evaluations, k >= 2t
    :param alpha: FieldElement of order m
    :param m: order of alpha; exponents are recovered in [0, m)
    :raises: NotACodewordError: if the window is not a codeword window
    """
    return prony_interpolate_affine(window, alpha, 0, 1, m, generator)


def prony_interpolate_affine(window, alpha, r, s, m, generator=None):
    """ Recover f from window[i] = f(alpha^(r + i*s))

    g(z) = f(z alpha^r) is interpolated at powers of beta = alpha^s, then
    c_j = d_j alpha^(-r e_j).

    :param window: clean evaluations along the progression, length >= 2t
    :param alpha: FieldElement of order m
    :param r: offset of the progression
    :param s: step of the progression, gcd(s, m) = 1
    :param m: order of alpha
    :raises: ParameterError: if gcd(s, m) != 1
    :raises: NotACodewordError: if the window is not a codeword window
    """
    if s < 1 or gcd(s, m) != 1:
        raise ParameterError("step %d is not coprime to the order %d" % (s, m))
    window = tuple(window)
    field = alpha.field
    beta = alpha ** s
    terms = recover_terms(window, discrete_log_table(field, beta, m), generator)
    f = SparsePolynomial(
        [(e, d * alpha ** (-r * e)) for e, d in terms], field
    )
    if evaluate_geometric(f, alpha, r, s, len(window)) != window:
        raise NotACodewordError("recovered %r does not reproduce the window" % (f,))
    return f

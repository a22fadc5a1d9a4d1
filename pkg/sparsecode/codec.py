# -*- coding: utf-8 -*-
"""
codec.py -- sparse polynomial evaluation codes over F_p

Code words are (f(alpha^0), ..., f(alpha^(n-1))) for f with at most T terms
and degree < m, alpha a primitive m-th root of unity.

    params = CodeParameters.create(p=97, n=12, T=2)
    word = encode(f, params)
    outcome = list_decode(word, params, E=1, mode=Mode.AFFINE_ALL)

"""
import enum
import json
import logging
import os
from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy

from .field import ParameterError, PrimeField, find_primitive_root_of_unity, parse_json_number
from .prony import NotACodewordError, prony_interpolate_affine
from .recurrence import DegenerateGeneratorError, berlekamp_massey, clean_up
from .sparse_poly import SparsePolynomial, evaluate_geometric

log = logging.getLogger(__name__)
if os.getenv('DEBUGSPARSECODE'):
    log.setLevel(logging.DEBUG)

DEFAULT_SEED = 0


class NotEncodableError(ValueError):
    """Raised when a polynomial has too many terms or too high a degree for the code
    """


class DecodingFailed(RuntimeError):
    """Raised when a unique decoder cannot return a code word
    """


class AmbiguousDecodeError(DecodingFailed):
    """Raised when no generator holds a strict majority of the blocks
    """


class Mode(str, enum.Enum):
    """Which sub-sequences of the received word the list decoder inspects"""
    CONTIGUOUS_DISJOINT = 'contiguous_disjoint'
    CONTIGUOUS_ALL = 'contiguous_all'
    AFFINE_DISJOINT = 'affine_disjoint'
    AFFINE_ALL = 'affine_all'


@dataclass(frozen=True)
class CodeParameters:
    """(n, T) code evaluated at consecutive powers of alpha, alpha of order m.

    With strict=True (default) 2T must divide m. Relaxed parameters keep
    only m | p-1, n <= m and T >= 1, which leaves room for odd m and hence
    for even affine steps.
    """
    field: PrimeField
    alpha: object
    m: int
    n: int
    T: int
    strict: bool = True

    def __post_init__(self):
        if self.T < 1:
            raise ParameterError("sparsity bound T must be >= 1, got %d" % self.T)
        if self.m < 1 or (self.field.p - 1) % self.m:
            raise ParameterError("m=%d does not divide p-1=%d" % (self.m, self.field.p - 1))
        if not 1 <= self.n <= self.m:
            raise ParameterError("need 1 <= n <= m, got n=%d m=%d" % (self.n, self.m))
        if self.strict and self.m % (2 * self.T):
            raise ParameterError("2T=%d does not divide m=%d" % (2 * self.T, self.m))
        object.__setattr__(self, "alpha", self.field(self.alpha))
        if self.alpha.multiplicative_order() != self.m:
            raise ParameterError("alpha=%r is not of order %d" % (self.alpha, self.m))

    @classmethod
    def create(cls, p, n, T, m=None, strict=True):
        """ Build parameters, picking alpha as a primitive m-th root of unity
        :param p: prime modulus
        :param n: code length
        :param T: sparsity bound
        :param m: order of alpha, p-1 by default
        :param strict: require 2T | m
        """
        field = PrimeField(p)
        m = field.p - 1 if m is None else m
        alpha = find_primitive_root_of_unity(field, m)
        return cls(field, alpha, m, n, T, strict)

    @property
    def window(self):
        """ Length 2T of the windows handed to Berlekamp-Massey """
        return 2 * self.T


@dataclass(frozen=True)
class ReceivedWord:
    """A length-n vector of field elements, possibly corrupted"""
    values: tuple

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def to_dict(self):
        p = self.values[0].field.p if self.values else None
        return {"p": p, "values": [int(v) for v in self.values]}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data, field=None):
        """
        :raises: ParameterError: if the dict is malformed or the moduli disagree
        """
        try:
            p = data.get("p")
            raw = list(data["values"])
        except (AttributeError, KeyError, TypeError):
            raise ParameterError("malformed word: %r" % (data,))
        if p is not None:
            p = parse_json_number(p)
        if field is None:
            if p is None:
                raise ParameterError("word has no modulus")
            field = PrimeField(p)
        elif p is not None and p != field.p:
            raise ParameterError("word is over F_%s, expected F_%d" % (p, field.p))
        return cls(tuple(field(parse_json_number(v)) for v in raw))

    @classmethod
    def from_json(cls, text, field=None):
        try:
            data = json.loads(text)
        except ValueError:
            raise ParameterError("word is not JSON: %r" % (text,))
        return cls.from_dict(data, field)


@dataclass(frozen=True)
class Candidate:
    """A decoded polynomial and where it came from"""
    polynomial: SparsePolynomial
    mismatches: int
    r: int
    s: int


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of list decoding, ordered by (mismatches, s, r)"""
    candidates: tuple
    mode: Mode
    sieved: bool = True

    @property
    def polynomials(self):
        return tuple(c.polynomial for c in self.candidates)

    def __contains__(self, polynomial):
        return polynomial in self.polynomials

    def __len__(self):
        return len(self.candidates)

    def to_dict(self):
        return {
            "mode": self.mode.value,
            "sieve": self.sieved,
            "candidates": [
                {
                    "polynomial": c.polynomial.to_dict(),
                    "mismatches": c.mismatches,
                    "r": c.r,
                    "s": c.s,
                }
                for c in self.candidates
            ],
        }


def hamming_distance(u, v):
    """ Number of positions where u and v differ
    :raises: ParameterError: on different lengths
    """
    if len(u) != len(v):
        raise ParameterError("lengths %d and %d differ" % (len(u), len(v)))
    return sum(1 for a, b in zip(u, v) if a != b)


def _check_encodable(f, params):
    if f.field != params.field:
        raise NotEncodableError("%r is not over F_%d" % (f, params.field.p))
    if f.sparsity > params.T:
        raise NotEncodableError("%r has %d > T=%d terms" % (f, f.sparsity, params.T))
    if f.degree >= params.m:
        raise NotEncodableError("%r has degree %d >= m=%d" % (f, f.degree, params.m))


def encode(f, params):
    """ Code word of f: values[i] = f(alpha^i)
    :raises: NotEncodableError: if f has more than T terms or degree >= m
    """
    _check_encodable(f, params)
    return ReceivedWord(evaluate_geometric(f, params.alpha, 0, 1, params.n))


def make_rng(seed=DEFAULT_SEED, *keys):
    """ PCG64 generator seeded from SeedSequence([seed, *keys]) """
    return numpy.random.Generator(numpy.random.PCG64(numpy.random.SeedSequence([seed, *keys])))


def random_support(n, E, rng):
    """ E distinct positions of [0, n), drawn uniformly """
    if not 0 <= E <= n:
        raise ParameterError("cannot pick %d positions out of %d" % (E, n))
    return tuple(sorted(int(i) for i in rng.choice(n, size=E, replace=False)))


def random_polynomial(params, rng, sparsity=None):
    """ Polynomial with `sparsity` (default T) terms, exponents < m, nonzero coefficients """
    t = params.T if sparsity is None else sparsity
    exponents = rng.choice(params.m, size=t, replace=False)
    return SparsePolynomial(
        [(int(e), int(rng.integers(1, params.field.p))) for e in exponents], params.field
    )


def corrupt(word, support, rng):
    """ Add a uniformly random nonzero offset at every position of support
    :param word: ReceivedWord
    :param support: positions to corrupt, all in [0, n)
    :param rng: numpy.random.Generator
    :raises: ParameterError: if a position is out of range
    """
    values = list(word.values)
    positions = sorted(set(int(i) for i in support))
    if positions and (positions[0] < 0 or positions[-1] >= len(values)):
        raise ParameterError("support %r outside [0, %d)" % (positions, len(values)))
    for i in positions:
        field = values[i].field
        values[i] = values[i] + int(rng.integers(1, field.p))
    return ReceivedWord(tuple(values))


def worst_case_pair(params):
    """ Two T-sparse polynomials whose code words are closest

    f_x = (1/T) sum_i z^(i m/T) and f_y = (-1/T) sum_i z^((2i+1) m/(2T)).
    Their words differ at the positions = 0 mod 2T; when 2T does not divide
    n both are composed with z -> alpha z so the differences sit at
    2T-1 mod 2T, which gives exactly floor(n/2T) of them.

    :raises: ParameterError: if 2T does not divide m
    """
    T, m, field = params.T, params.m, params.field
    if m % (2 * T):
        raise ParameterError("2T=%d does not divide m=%d" % (2 * T, m))
    inv_t = field(T).inverse()
    exps_x = [i * (m // T) for i in range(T)]
    exps_y = [(2 * i + 1) * (m // (2 * T)) for i in range(T)]
    if params.n % (2 * T) == 0:
        twist = field.one
    else:
        twist = params.alpha
    f_x = SparsePolynomial([(e, inv_t * twist ** e) for e in exps_x], field)
    f_y = SparsePolynomial([(e, -inv_t * twist ** e) for e in exps_y], field)
    return f_x, f_y


def unique_decode_majority(word, params, E):
    """ Majority-rule decoding on the floor(n/2T) disjoint blocks

    Correct whenever at most E errors occurred and n >= 2T(2E+1).

    :raises: AmbiguousDecodeError: if no generator holds a strict majority
    :raises: DecodingFailed: if no majority block survives clean-up and
        interpolation
    """
    values = tuple(word.values)
    k = params.window
    blocks = len(values) // k
    generators = [berlekamp_massey(values[i * k:(i + 1) * k]) for i in range(blocks)]
    tally = Counter(generators)
    log.debug("majority tally over %d blocks: %r", blocks, tally.most_common(3))
    if not tally:
        raise AmbiguousDecodeError("word of length %d has no block of %d" % (len(values), k))
    winner, votes = tally.most_common(1)[0]
    if 2 * votes <= blocks:
        raise AmbiguousDecodeError("best generator holds %d of %d blocks" % (votes, blocks))
    for i, generator in enumerate(generators):
        if generator != winner:
            continue
        start = i * k
        try:
            if clean_up(generator, values, start, E) is None:
                continue
            return prony_interpolate_affine(
                values[start:start + k], params.alpha, start, 1, params.m, generator
            )
        except (NotACodewordError, DegenerateGeneratorError) as e:
            log.debug("majority block %d rejected: %s", i, e)
    raise DecodingFailed("majority generator %r does not give a code word" % (winner,))


def enumerate_subsequences(n, k, mode):
    """ (r, s) pairs of the length-k sub-sequences inspected in a mode

    contiguous modes fix s = 1, affine modes take s up to (n-1)//(k-1).
    Disjoint modes cut each residue class mod s into consecutive blocks of
    k terms; the "all" modes take every valid r. Pairs come sorted by (s, r).
    """
    mode = Mode(mode)
    if k < 1 or k > n:
        raise ParameterError("window %d does not fit length %d" % (k, n))
    if mode in (Mode.CONTIGUOUS_DISJOINT, Mode.CONTIGUOUS_ALL) or k == 1:
        steps = [1]
    else:
        steps = range(1, (n - 1) // (k - 1) + 1)
    disjoint = mode in (Mode.CONTIGUOUS_DISJOINT, Mode.AFFINE_DISJOINT)
    pairs = []
    for s in steps:
        last = n - 1 - (k - 1) * s
        if disjoint:
            starts = sorted(
                c + j * k * s
                for c in range(s)
                for j in range((last - c) // (k * s) + 1 if c <= last else 0)
            )
        else:
            starts = range(last + 1)
        pairs.extend((r, s) for r in starts)
    return pairs


def list_decode(word, params, E, mode=Mode.AFFINE_ALL, sieve=True):
    """ List decoding from error-free sub-sequences of length 2T

    For every (r, s) of the mode with gcd(s, m) = 1: Berlekamp-Massey on
    the sub-sequence, optional clean-up sieve with budget E, then
    interpolation. If at most E errors occurred and one inspected
    sub-sequence is clean, the sent polynomial is in the list.

    :return: DecodeOutcome, possibly empty
    """
    mode = Mode(mode)
    values = tuple(word.values)
    n, k, m = len(values), params.window, params.m
    found = {}
    if k > n:
        return DecodeOutcome((), mode, sieve)
    for r, s in enumerate_subsequences(n, k, mode):
        if gcd(s, m) != 1:
            continue
        window = values[r:r + (k - 1) * s + 1:s]
        generator = berlekamp_massey(window)
        try:
            if sieve and clean_up(generator, values, r, E, step=s, period=m) is None:
                continue
            f = prony_interpolate_affine(window, params.alpha, r, s, m, generator)
        except (NotACodewordError, DegenerateGeneratorError) as e:
            log.debug("sub-sequence (r=%d, s=%d) rejected: %s", r, s, e)
            continue
        if f in found:
            continue
        mismatches = hamming_distance(evaluate_geometric(f, params.alpha, 0, 1, n), values)
        found[f] = Candidate(f, mismatches, r, s)
    candidates = sorted(found.values(), key=lambda c: (c.mismatches, c.s, c.r))
    log.debug("%s list decoding kept %d candidates", mode.value, len(candidates))
    return DecodeOutcome(tuple(candidates), mode, sieve)

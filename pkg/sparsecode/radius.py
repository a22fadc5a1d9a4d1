# -*- coding: utf-8 -*-
"""
radius.py -- worst-case radius of affine sub-sequence list decoding

n_{k,E} is the least n such that every set of E error positions in [0, n)
misses some k-term arithmetic progression. It is computed as a minimum
hitting set problem over the progressions, by branch and bound on bit masks.

"""
import logging
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import log as _ln

import sympy

from .field import ParameterError

log = logging.getLogger(__name__)
if os.getenv('DEBUGSPARSECODE'):
    log.setLevel(logging.DEBUG)


class SearchTimeout(RuntimeError):
    """Raised when a radius search runs past its deadline
    """


@dataclass(frozen=True)
class ErrorSupport:
    """Sorted error positions inside [0, n)"""
    positions: tuple
    n: int

    def __post_init__(self):
        positions = tuple(sorted(set(int(i) for i in self.positions)))
        if positions and (positions[0] < 0 or positions[-1] >= self.n):
            raise ParameterError("support %r outside [0, %d)" % (positions, self.n))
        object.__setattr__(self, "positions", positions)

    @classmethod
    def from_mask(cls, mask, n):
        return cls(tuple(i for i in range(n) if mask >> i & 1), n)

    @property
    def mask(self):
        return sum(1 << i for i in self.positions)

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)


@dataclass(frozen=True)
class RadiusResult:
    """n_{k,E} with a weight-E support hitting every k-AP of [0, n_{k,E}-1)"""
    k: int
    E: int
    n_kE: int
    witness: ErrorSupport


@lru_cache(maxsize=256)
def progressions(n, k):
    """ All (r, s, mask) with r + (k-1)s <= n-1, sorted by (s, r) """
    if k < 1:
        raise ParameterError("progression length must be >= 1, got %d" % k)
    if n < k:
        return ()
    steps = range(1, (n - 1) // (k - 1) + 1) if k > 1 else [1]
    found = []
    for s in steps:
        for r in range(n - (k - 1) * s):
            mask = 0
            for i in range(k):
                mask |= 1 << (r + i * s)
            found.append((r, s, mask))
    return tuple(found)


def _as_mask(S):
    if isinstance(S, ErrorSupport):
        return S.mask
    return sum(1 << int(i) for i in set(S))


def surviving_progression(S, n, k):
    """ First (r, s), in (s, r) order, whose progression avoids S, else None """
    hit = _as_mask(S)
    for r, s, mask in progressions(n, k):
        if not mask & hit:
            return r, s
    return None


def hits_all_aps(S, n, k):
    """ True iff every k-term progression inside [0, n-1] meets S """
    return surviving_progression(S, n, k) is None


class _HittingSearch(object):
    """Decide whether `budget` positions can hit every progression.

    Branches on the unhit progression with the fewest allowed positions;
    the i-th branch takes its i-th position and forbids the earlier ones.
    A greedy packing of disjoint unhit progressions bounds from below.
    """
    def __init__(self, n, k, deadline=None):
        self.n = n
        self.masks = [mask for _, _, mask in progressions(n, k)]
        self.full = (1 << n) - 1
        self.deadline = deadline
        self.nodes = 0

    def find(self, budget):
        """ Mask of a hitting set of size <= budget, or None """
        return self._search(0, 0, budget)

    def _search(self, chosen, forbidden, budget):
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout("n=%d after %d nodes" % (self.n, self.nodes))
        allowed = self.full & ~forbidden
        unhit = [mask & allowed for mask in self.masks if not mask & chosen]
        if not unhit:
            return chosen
        if budget == 0:
            return None
        unhit.sort(key=int.bit_count)
        if not unhit[0]:
            return None
        used = 0
        packed = 0
        for mask in unhit:
            if not mask & used:
                used |= mask
                packed += 1
                if packed > budget:
                    return None
        pivot = unhit[0]
        positions = [i for i in range(self.n) if pivot >> i & 1]
        positions.sort(key=lambda i: -sum(1 for mask in unhit if mask >> i & 1))
        for i in positions:
            bit = 1 << i
            found = self._search(chosen | bit, forbidden, budget - 1)
            if found is not None:
                return found
            forbidden |= bit
        return None


def minimum_hitting_support(n, k, deadline=None):
    """ A smallest support hitting every k-progression in [0, n) """
    search = _HittingSearch(n, k, deadline)
    budget = 0
    while True:
        found = search.find(budget)
        if found is not None:
            return ErrorSupport.from_mask(found, n)
        budget += 1


def min_ap_hitting_number(n, k):
    """ Size of the smallest S with hits_all_aps(S, n, k); equals n - r(k, n) """
    return len(minimum_hitting_support(n, k))


def radius_profile(k, E_max, deadline=None):
    """ Yield RadiusResult for E = 0 .. E_max in one ascent over n

    The hitting number h(n) never decreases and grows by at most one per
    step, so each n only asks whether h(n-1) positions still suffice.

    :raises: SearchTimeout: past the deadline (results already yielded stand)
    """
    if k < 2 or E_max < 0:
        raise ParameterError("need k >= 2 and E >= 0, got k=%d E=%d" % (k, E_max))
    witness = 0      # hitting set for length n-1
    level = 0        # h(n-1)
    n = k
    while level <= E_max:
        search = _HittingSearch(n, k, deadline)
        found = search.find(level)
        log.debug("k=%d n=%d: %d positions %s (%d nodes)", k, n, level,
                  "suffice" if found is not None else "fall short", search.nodes)
        if found is not None:
            witness = found
        else:
            log.info("n_{%d,%d} = %d", k, level, n)
            yield RadiusResult(k, level, n, ErrorSupport.from_mask(witness, n - 1))
            witness |= 1 << (n - 1)
            level += 1
        n += 1


def compute_n_kE(k, E, deadline=None):
    """ n_{k,E} with its witness for length n_{k,E} - 1
    :raises: SearchTimeout: past the deadline
    """
    result = None
    for result in radius_profile(k, E, deadline):
        pass
    return result


def worst_case_vector(k, i):
    """ Recursive error vectors v_i, w_i with their length n_i and weight E_i

    v_1 = 0^(k-1), v_{i+1} = (v_i, 1^(k^(i-1))) repeated k-1 times, and w_i
    is v_i without its trailing k^(i-2) + ... + 1 ones.

    :return: (v_i, w_i, n_i, E_i)
    :raises: ParameterError: if k < 3 or i < 1
    """
    if k < 3 or i < 1:
        raise ParameterError("need k >= 3 and i >= 1, got k=%d i=%d" % (k, i))
    v = (0,) * (k - 1)
    for level in range(1, i):
        v = (v + (1,) * k ** (level - 1)) * (k - 1)
    n_i = ((k - 2) * k ** i + 1) // (k - 1)
    w = v[:n_i]
    return v, w, n_i, n_i - (k - 1) ** i


@lru_cache(maxsize=None)
def _ap_free_sizes(k, n):
    """ (r(k, 0), ..., r(k, n)) """
    if n == 0:
        return (0,)
    sizes = _ap_free_sizes(k, n - 1)
    previous = sizes[-1]
    if n < k:
        return sizes + (n,)
    target = previous + 1
    grows = _ap_free_set_exists(k, n, target, sizes)
    return sizes + (target if grows else previous,)


def _ap_free_set_exists(k, n, target, sizes):
    # a set of size r(k, n-1) + 1 must use both 0 and n-1
    def closes_progression(chosen, x):
        for s in range(1, x // (k - 1) + 1):
            if all(chosen >> (x - j * s) & 1 for j in range(1, k)):
                return True
        return False

    def extend(chosen, count, x):
        if x == n - 1:
            return count + 1 >= target and not closes_progression(chosen, x)
        if count + sizes[n - x] < target:
            return False
        if not closes_progression(chosen, x) and extend(chosen | 1 << x, count + 1, x + 1):
            return True
        return extend(chosen, count, x + 1)

    return extend(1, 1, 1)


def erdos_turan_r(k, n):
    """ Largest size of a subset of [0, n) without k terms in progression """
    if k < 1 or n < 0:
        raise ParameterError("need k >= 1 and n >= 0, got k=%d n=%d" % (k, n))
    if k == 1:
        return 0
    for length in range(n + 1):
        _ap_free_sizes(k, length)
    return _ap_free_sizes(k, n)[n]


def _log_upper(x, base, bits=12):
    """ Rational a/2^bits >= log_base(x), for a rational x >= 1 """
    x = Fraction(x)
    scale = 2 ** bits
    num, den = x.numerator ** scale, x.denominator ** scale
    a = max(0, int(scale * _ln(x) / _ln(base)) - 1)
    while base ** a * den < num:
        a += 1
    return Fraction(a, scale)


def upper_bound_E(k, n):
    """ Upper bound on the correctable E at length n:
    n/(k-2) (log_k(n/(k-2)) - 1/k) - (k-2)/k, with the log rounded up
    :raises: ParameterError: unless k >= 3 and n >= k
    """
    if k < 3 or n < k:
        raise ParameterError("need k >= 3 and n >= k, got k=%d n=%d" % (k, n))
    x = Fraction(n, k - 2)
    return x * (_log_upper(x, k) - Fraction(1, k)) - Fraction(k - 2, k)


def disjoint_bound_is_tight(k, E):
    """ True iff n_{k,E} = k(E+1), i.e. E + 2 <= smallest prime factor of k """
    return E + 2 <= min(sympy.primefactors(k))


def lower_bound_n(k, E):
    """ (k+1)/2 (E+1) + 1, a lower bound on n_{k,E} for E < (k+1)/2 """
    return Fraction((k + 1) * (E + 1), 2) + 1

# -*- coding: utf-8 -*-
"""
cli.py -- command line front end and the experiment drivers behind it

    sparsecode encode --p 97 --n 12 -T 2 --poly '{"p": 97, "terms": [[3, 5], [40, 1]]}'
    sparsecode simulate --k 4 --n 24 --emax 8 --mode affine_all
    sparsecode radius --kmax 5 --emax 5

Run `sparsecode COMMAND --help` for the options. Monte Carlo trials and
radius rows go to a process pool of SPARSECODE_WORKERS workers.

"""
import csv
import functools
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import click

from .charzero import (
    DEFAULT_DEGREE_BOUND,
    NoUniqueDecodingError,
    RealCodeParameters,
    unique_decode_real,
    word_from_json,
)
from .codec import (
    DEFAULT_SEED,
    CodeParameters,
    DecodingFailed,
    Mode,
    NotEncodableError,
    ReceivedWord,
    corrupt,
    encode,
    enumerate_subsequences,
    list_decode,
    make_rng,
    random_support,
    unique_decode_majority,
)
from .field import FieldConstructionError, ParameterError, parse_rational
from .radius import SearchTimeout, hits_all_aps, radius_profile
from .sparse_poly import SparsePolynomial

log = logging.getLogger(__name__)
if os.getenv('DEBUGSPARSECODE'):
    log.setLevel(logging.DEBUG)

DEFAULT_TRIALS = 10000
DEFAULT_BUDGET = 300
MAJORITY = 'majority'
SIMULATION_MODES = [mode.value for mode in Mode] + [MAJORITY]
TIMEOUT = 'timeout'


def worker_count():
    """ Pool size from SPARSECODE_WORKERS, 1 (in-process) by default """
    raw = os.getenv('SPARSECODE_WORKERS', '1')
    try:
        workers = int(raw)
    except ValueError:
        log.warning("ignoring SPARSECODE_WORKERS=%r", raw)
        return 1
    return max(1, workers)


def _run_pool(task, jobs, workers):
    """ [task(*job) for job in jobs], in order, on `workers` processes """
    if workers <= 1 or len(jobs) <= 1:
        return [task(*job) for job in jobs]
    log.info("dispatching %d jobs to %d workers", len(jobs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(task, *job) for job in jobs]
        return [future.result() for future in futures]


def _inspected_masks(n, k, mode):
    if mode == MAJORITY:
        return [((1 << k) - 1) << (b * k) for b in range(n // k)]
    masks = []
    for r, s in enumerate_subsequences(n, k, mode):
        masks.append(sum(1 << (r + i * s) for i in range(k)))
    return masks


def _simulate_chunk(k, n, mode, E_max, seed, first, last):
    """ Successes per E over trials first .. last-1 """
    masks = _inspected_masks(n, k, mode)
    successes = [0] * (E_max + 1)
    for trial in range(first, last):
        order = make_rng(seed, trial).permutation(n)
        support = 0
        for E in range(E_max + 1):
            if E:
                support |= 1 << int(order[E - 1])
            clean = sum(1 for mask in masks if not mask & support)
            if mode == MAJORITY:
                ok = 2 * clean > len(masks)
            else:
                ok = clean > 0
            successes[E] += ok
    return successes


def simulate_success_rate(k, E_max, trials, mode, n, seed=DEFAULT_SEED, workers=1):
    """ Fraction of random weight-E supports that leave an inspected window clean

    Trial i draws one permutation of [0, n) from SeedSequence([seed, i]) and
    its first E positions are the weight-E support, so supports are nested
    in E and the result does not depend on the number of workers. The
    majority strategy instead needs more than half of the n // k disjoint
    blocks clean.

    :return: list of (E, success_fraction) for E = 0 .. E_max
    :raises: ParameterError: on k > n, E_max > n or trials < 1
    """
    if mode != MAJORITY:
        mode = Mode(mode).value
    if trials < 1 or not 1 <= k <= n or not 0 <= E_max <= n:
        raise ParameterError(
            "need trials >= 1, 1 <= k <= n and 0 <= E_max <= n (got %d, %d, %d, %d)"
            % (trials, k, n, E_max)
        )
    chunks = max(1, min(workers, trials))
    bounds = [trials * c // chunks for c in range(chunks + 1)]
    jobs = [(k, n, mode, E_max, seed, bounds[c], bounds[c + 1]) for c in range(chunks)]
    totals = [0] * (E_max + 1)
    for counts in _run_pool(_simulate_chunk, jobs, workers):
        totals = [a + b for a, b in zip(totals, counts)]
    return [(E, totals[E] / trials) for E in range(E_max + 1)]


def _radius_row(k, E_max, time_budget):
    deadline = time.monotonic() + time_budget
    results = []
    try:
        for result in radius_profile(k, E_max, deadline):
            results.append(result)
    except SearchTimeout as e:
        log.warning("k=%d timed out after E=%d: %s", k, len(results) - 1, e)
    return results


def radius_table(k_range, E_range, time_budget=DEFAULT_BUDGET, workers=1):
    """ Rows (k, E, n_kE, witness) of the worst-case radius table

    Each k is one ascent with its own time budget in seconds; cells it did
    not reach are marked "timeout". Every witness is checked again with
    hits_all_aps before it is reported.

    :raises: RuntimeError: if a witness fails the check
    """
    k_range, E_range = list(k_range), list(E_range)
    if not k_range or not E_range:
        raise ParameterError("empty k or E range")
    E_max = max(E_range)
    jobs = [(k, E_max, time_budget) for k in k_range]
    rows = []
    for k, results in zip(k_range, _run_pool(_radius_row, jobs, workers)):
        by_E = {result.E: result for result in results}
        for E in E_range:
            result = by_E.get(E)
            if result is None:
                rows.append((k, E, TIMEOUT, ""))
                continue
            witness = result.witness
            if len(witness) != E or not hits_all_aps(witness, result.n_kE - 1, k):
                raise RuntimeError("witness %r fails for k=%d E=%d" % (witness.positions, k, E))
            rows.append((k, E, result.n_kE, " ".join(str(i) for i in witness)))
            log.debug("k=%d E=%d: witness checked", k, E)
    return rows


def _usage_errors(command):
    """ Report bad parameters as click usage errors (exit status 2) """
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ParameterError, FieldConstructionError, NotEncodableError) as e:
            raise click.UsageError(str(e))
    return wrapper


def _polynomial_over(text, field):
    try:
        return SparsePolynomial(SparsePolynomial.from_json(text).terms, field)
    except ZeroDivisionError:
        raise ParameterError("a coefficient denominator vanishes mod %d" % field.p)


def _positions(text):
    try:
        return [int(i) for i in text.split(',') if i.strip()]
    except ValueError:
        raise click.BadParameter("expected comma separated positions, got %r" % text)


def _json(data):
    return json.dumps(data, sort_keys=True)


def _write_csv(header, rows):
    writer = csv.writer(sys.stdout, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)


def _code_options(command):
    command = click.option('--strict/--relaxed', default=True,
                           help='Require 2T to divide m')(command)
    command = click.option('--m', 'm', type=int, default=None,
                           help='Order of the evaluation root (default p-1)')(command)
    command = click.option('-T', 'T', type=int, required=True, help='Sparsity bound')(command)
    return command


@click.group()
@click.option('-v', '--verbose', count=True, help='-v for progress, -vv for debug output')
def main(verbose):
    """Sparse polynomial evaluation codes: encode, corrupt, decode, experiment."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(name)s: %(message)s')


@main.command('encode')
@click.option('--p', 'p', type=int, required=True, help='Prime modulus')
@click.option('--n', 'n', type=int, required=True, help='Code length')
@click.option('--poly', default=None, help='Polynomial as JSON {"p": p, "terms": [[e, c], ...]}')
@click.option('--poly-file', type=click.File('r'), default=None, help='File holding the polynomial JSON')
@_code_options
@_usage_errors
def encode_command(p, n, poly, poly_file, T, m, strict):
    """Print the code word of a polynomial as JSON."""
    if (poly is None) == (poly_file is None):
        raise click.UsageError("give exactly one of --poly and --poly-file")
    params = CodeParameters.create(p, n, T, m, strict)
    text = poly if poly is not None else poly_file.read()
    click.echo(encode(_polynomial_over(text, params.field), params).to_json())


@main.command('corrupt')
@click.option('--word', required=True, help='Word as JSON {"p": p, "values": [...]}')
@click.option('--positions', default=None, help='Comma separated positions to corrupt')
@click.option('--errors', type=int, default=None, help='Number of random positions to corrupt')
@click.option('--seed', type=int, default=DEFAULT_SEED, help='Random seed')
@_usage_errors
def corrupt_command(word, positions, errors, seed):
    """Add random nonzero errors to a word."""
    if (positions is None) == (errors is None):
        raise click.UsageError("give exactly one of --positions and --errors")
    received = ReceivedWord.from_json(word)
    rng = make_rng(seed)
    support = _positions(positions) if positions is not None else \
        random_support(len(received), errors, rng)
    click.echo(corrupt(received, support, rng).to_json())


def _decode(received, params, E, mode, sieve, unique):
    """ (decoded polynomials, report dict) """
    if unique:
        try:
            f = unique_decode_majority(received, params, E)
        except DecodingFailed as e:
            log.info("unique decoding failed: %s", e)
            return [], {"unique": True, "error": str(e), "polynomial": None}
        return [f], {"unique": True, "polynomial": f.to_dict()}
    outcome = list_decode(received, params, E, mode, sieve)
    return list(outcome.polynomials), outcome.to_dict()


@main.command('decode')
@click.option('--word', required=True, help='Received word as JSON')
@click.option('-E', 'E', type=int, required=True, help='Error bound')
@click.option('--mode', type=click.Choice([mode.value for mode in Mode]),
              default=Mode.AFFINE_ALL.value, help='Sub-sequences inspected by the list decoder')
@click.option('--sieve/--no-sieve', default=True, help='Run the clean-up sieve')
@click.option('--unique', is_flag=True, help='Majority-rule unique decoding instead of a list')
@_code_options
@_usage_errors
def decode_command(word, E, mode, sieve, unique, T, m, strict):
    """Decode a received word; exit status 1 when nothing is decoded."""
    received = ReceivedWord.from_json(word)
    if not len(received):
        raise click.UsageError("empty word")
    params = CodeParameters.create(received[0].field.p, len(received), T, m, strict)
    decoded, report = _decode(received, params, E, mode, sieve, unique)
    click.echo(_json(report))
    if not decoded:
        sys.exit(1)


@main.command('roundtrip')
@click.option('--p', 'p', type=int, required=True, help='Prime modulus')
@click.option('--n', 'n', type=int, required=True, help='Code length')
@click.option('--poly', required=True, help='Polynomial as JSON')
@click.option('--errors', type=int, required=True, help='Number of random errors')
@click.option('--seed', type=int, default=DEFAULT_SEED, help='Random seed')
@click.option('--mode', type=click.Choice([mode.value for mode in Mode]),
              default=Mode.AFFINE_ALL.value, help='Sub-sequences inspected by the list decoder')
@click.option('--unique', is_flag=True, help='Majority-rule unique decoding instead of a list')
@_code_options
@_usage_errors
def roundtrip_command(p, n, poly, errors, seed, mode, unique, T, m, strict):
    """Encode, corrupt and decode; exit status 1 unless the polynomial comes back."""
    params = CodeParameters.create(p, n, T, m, strict)
    f = _polynomial_over(poly, params.field)
    rng = make_rng(seed)
    support = random_support(n, errors, rng)
    received = corrupt(encode(f, params), support, rng)
    decoded, report = _decode(received, params, errors, mode, True, unique)
    success = f in decoded
    report.update({"sent": f.to_dict(), "support": list(support), "success": success})
    click.echo(_json(report))
    if not success:
        sys.exit(1)


@main.command('simulate')
@click.option('--k', 'k', type=int, required=True, help='Window length 2T')
@click.option('--n', 'n', type=int, required=True, help='Code length')
@click.option('--emax', type=int, default=None, help='Largest error weight (default n - k)')
@click.option('--trials', type=int, default=DEFAULT_TRIALS, help='Trials per error weight')
@click.option('--mode', type=click.Choice(SIMULATION_MODES), default=Mode.AFFINE_ALL.value,
              help='Decoding strategy')
@click.option('--seed', type=int, default=DEFAULT_SEED, help='Random seed')
@_usage_errors
def simulate_command(k, n, emax, trials, mode, seed):
    """Print the Monte Carlo success rate per error weight as CSV."""
    emax = n - k if emax is None else emax
    rows = simulate_success_rate(k, emax, trials, mode, n, seed, worker_count())
    _write_csv(['E', 'success_rate'], [(E, '%.6f' % rate) for E, rate in rows])


@click.command('radius')
@click.option('--kmin', type=int, default=3, help='Smallest window length')
@click.option('--kmax', type=int, required=True, help='Largest window length')
@click.option('--emax', type=int, required=True, help='Largest error weight')
@click.option('--budget', type=float, default=DEFAULT_BUDGET, help='Seconds allowed per window length')
@_usage_errors
def radius(kmin, kmax, emax, budget):
    """Print n_{k,E} with a witness support for each k and E as CSV."""
    rows = radius_table(range(kmin, kmax + 1), range(emax + 1), budget, worker_count())
    _write_csv(['k', 'E', 'n_kE', 'witness'], rows)


main.add_command(radius)


@main.command('charzero-decode')
@click.option('--word', required=True, help='Rational word as JSON {"values": ["num/den", ...]}')
@click.option('--alpha', required=True, help='Ratio of the geometric points, e.g. 2 or 3/2')
@click.option('-T', 'T', type=int, required=True, help='Sparsity bound')
@click.option('-E', 'E', type=int, required=True, help='Error bound')
@click.option('--degree-bound', type=int, default=DEFAULT_DEGREE_BOUND, help='Largest exponent searched')
@_usage_errors
def charzero_decode_command(word, alpha, T, E, degree_bound):
    """Uniquely decode a word of a rational code at the points alpha^i."""
    values = word_from_json(word)
    params = RealCodeParameters.geometric(parse_rational(alpha), len(values), T, degree_bound)
    try:
        f = unique_decode_real(values, params, E)
    except NoUniqueDecodingError as e:
        click.echo(_json({"polynomial": None, "error": str(e)}))
        sys.exit(1)
    click.echo(_json({"polynomial": f.to_dict()}))


if __name__ == '__main__':
    main()

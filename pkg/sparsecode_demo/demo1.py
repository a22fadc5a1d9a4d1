#!/usr/bin/env python

"""
demo1 -- simple demo of sparsecode library: encode, corrupt, decode

"""
from sparsecode.codec import (CodeParameters, corrupt, encode, list_decode, make_rng,
                              unique_decode_majority)
from sparsecode.sparse_poly import SparsePolynomial

params = CodeParameters.create(97, 20, 2)
print("field F_%d, alpha = %s of order %d, n = %d, T = %d" %
      (params.field.p, params.alpha, params.m, params.n, params.T))

f = SparsePolynomial([(3, 5), (40, 11)], params.field)
print("sending " + f.to_json())

word = encode(f, params)
received = corrupt(word, [1, 12], make_rng(7))
print("corrupted positions 1 and 12")

print("majority decoder says: %s" % unique_decode_majority(received, params, 2))

outcome = list_decode(received, params, 2)
print("list decoder found %d candidate(s)" % len(outcome))
for candidate in outcome.candidates:
    print("  %s  mismatches=%d  from r=%d s=%d" %
          (candidate.polynomial, candidate.mismatches, candidate.r, candidate.s))

print("done")

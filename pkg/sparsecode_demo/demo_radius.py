#!/usr/bin/env python

"""
demo_radius -- shortest words that always leave an error-free progression

"""
import sys

from sparsecode.radius import SearchTimeout, hits_all_aps, radius_profile

k = int(sys.argv[1]) if len(sys.argv) > 1 else 5
E_max = int(sys.argv[2]) if len(sys.argv) > 2 else 4

print("windows of %d, up to %d errors" % (k, E_max))
try:
    for result in radius_profile(k, E_max):
        print("  E=%d  n=%d  blocking support on n-1: %s" %
              (result.E, result.n_kE, list(result.witness)))
        assert hits_all_aps(result.witness, result.n_kE - 1, k)
except SearchTimeout:
    print("search timed out")
    sys.exit(1)

print("done")

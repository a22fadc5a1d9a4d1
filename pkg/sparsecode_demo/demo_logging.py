#!/usr/bin/env python

"""
demo_logging -- simple demo of sparsecode library with logging

run with:
DEBUGSPARSECODE=1 python3 ./sparsecode_demo/demo_logging.py

"""
from sparsecode.codec import CodeParameters, corrupt, encode, list_decode, make_rng, random_polynomial

import logging

logging.basicConfig(format='%(name)s: %(message)s')
#logging.basicConfig(format='%(asctime)s %(message)s', level=logging.INFO)
log = logging.getLogger(__name__)
log.setLevel(logging.DEBUG)

params = CodeParameters.create(101, 11, 2, m=25, strict=False)
rng = make_rng(3)
f = random_polynomial(params, rng)
log.info("sending %s", f)

received = corrupt(encode(f, params), [2, 9], rng)
outcome = list_decode(received, params, 2)
if f in outcome:
    log.info("recovered among %d candidate(s)", len(outcome))
else:
    log.error("sent polynomial not recovered")

log.info("done")

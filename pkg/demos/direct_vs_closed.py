"""
The zeta integral two ways
==========================

znaive_direct sums the defining triple sum; znaive_closed uses the closed
form built from L-factors.  Each carries a certified tail bound, so the
comparison is |direct - closed| <= tail_direct + tail_closed.
"""
import random

from trizeta.zeta import (compare_direct_closed, random_tempered_params, sample_cone_point, znaive_closed,
                          znaive_direct)

rng = random.Random(1)
r = (3, 3, 3)
s_vec, s = sample_cone_point(rng, r, margin=1.0)
print("cone point: s_i =", s_vec, " s =", s)

for q in (25.0, 5.0):   # 25 is a square, 5 is not
    p = random_tempered_params(rng, r, q, s_vec, s)
    d = znaive_direct(p, tol=1e-10)
    c = znaive_closed(p, tol=1e-10)
    print(f"q={q:g}: direct {d.value:.12f} (tail {d.tail:.1e}, {d.terms} terms)")
    print(f"      closed {c.value:.12f} (tail {c.tail:.1e})")
    print("     ", compare_direct_closed(p, tol=1e-10).line())

"""Check the 22 coefficient recursions, first by probing then exactly.

Run with ``python3 demos/verify_recursions.py``. The symbolic pass takes
under a minute on a laptop.
"""

import time

from g2clasp import verify_all

start = time.perf_counter()
probed = verify_all("numeric", points=5, seed=0)
print(f"numeric: {sum(r.passed for r in probed)}/22 pass in {time.perf_counter() - start:.1f} s")
print("probe points for recursion 1 (q, A, B):", probed[0].probes[0])

start = time.perf_counter()
exact = verify_all("symbolic")
print(f"symbolic: {sum(r.passed for r in exact)}/22 residuals are exactly zero in {time.perf_counter() - start:.1f} s")

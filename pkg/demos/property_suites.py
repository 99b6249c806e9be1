"""Run the seeded randomized property suites and print a one-line summary each.

``python demos/property_suites.py [samples]``.  Set ``HOMOGGB_SEED`` to vary
the random streams; the same seed reproduces the same logs.
"""

import sys
import time

from homoggb import properties
from homoggb.sampling import seed_from_env

seed = seed_from_env()
samples = int(sys.argv[1]) if len(sys.argv) > 1 else 300

t0 = time.perf_counter()
for suite in properties.INVARIANT_SUITES:
    print(suite(seed, samples=samples).summary())
for suite in (properties.gb_transfer_central, properties.dehomogenized_basis,
              properties.homogeneous_union_basis, properties.gb_transfer_free):
    print(suite(seed, 30).summary())
print(properties.normal_correspondence(seed, count=10).summary())
print(f"done in {time.perf_counter() - t0:.1f}s")

#!/usr/bin/env python3
"""Sweep the case trichotomy and confirm every closed form against computation.

For each n up to the chosen limit: classify by the sign of 2*phi(P) - P,
evaluate the exact formula where one exists, the upper bound where it does
not, and compare everything to the weighted class cut.
"""

import sys
from collections import Counter

from pgk import (
    build_quotient,
    classify,
    factorize,
    kappa_class,
    kappa_formula,
    optimal_Z,
    totient,
    upper_bound_ii,
)

limit = int(sys.argv[1]) if len(sys.argv) > 1 else 400

tags = Counter()
floor_hits = []
mismatches = []
for n in range(2, limit + 1):
    f = factorize(n)
    c = classify(f)
    tags[c.tag] += 1
    hint = optimal_Z(f).classes if f.r >= 2 else None
    computed = kappa_class(build_quotient(n), certified_hint=hint).kappa
    formula = kappa_formula(f)
    if formula is not None and formula != computed:
        mismatches.append(n)
    if f.r >= 2 and 2 * c.phiP < c.P:
        assert computed <= upper_bound_ii(f), n
    if f.r >= 2 and computed == totient(n) + 1:
        floor_hits.append(n)

print(f"n <= {limit} by case: {dict(sorted(tags.items()))}")
print(f"closed-form mismatches: {mismatches or 'none'}")
print(f"kappa at its floor phi(n)+1 exactly on the squarefree biprimes:")
print(f"  {floor_hits[:15]} ...")
assert all(
    factorize(n).r == 2 and factorize(n).exponents == (1, 1) for n in floor_hits
)

print("\nspot values:")
for n in (36, 45, 105, 150):
    print(f"  kappa({n}) = {kappa_formula(factorize(n))}")

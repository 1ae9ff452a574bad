#!/usr/bin/env python3
"""Minimum separators: the layer family, exhaustive enumeration, and n = 2310.

Shows Z(r, k) for a few n, proves the counts by exhaustive search (unique in
the 2*phi(P) > P and r = 3 cases, one per top exponent for n = 2^a p^b), and
prints the hand-built 2310 certificate that beats the general upper bound.
"""

from pgk import (
    build_quotient,
    build_Z,
    check_disconnects,
    enumerate_min_separators,
    example_2310,
    factorize,
    kappa_class,
    totient,
    upper_bound_ii,
)

for n in (45, 36, 150):
    f = factorize(n)
    g = build_quotient(n)
    kappa = kappa_class(g).kappa
    print(f"n = {n}: kappa = {kappa}")
    for k in range(f.exponents[-1]):
        z = build_Z(f, k)
        w = check_disconnects(z)
        print(
            f"  {z.label}: remove {sorted(z.classes)} (weight {z.weight}); "
            f"splits off {sorted(w.block_a)}"
        )
    seps = enumerate_min_separators(g, kappa)
    print(f"  exhaustive search finds {len(seps)} minimum separator(s): "
          f"{[s.label for s in seps]}")
    print()

print("n = 2310 = 2*3*5*7*11: no exact formula is known, only a bound.")
sep = example_2310()
phi = totient(2310)
bound = upper_bound_ii(factorize(2310))
print(f"  bound: kappa <= {bound} = phi(n) + {bound - phi}")
print(f"  but removing {sorted(sep.classes)}")
print(f"  disconnects at weight {sep.weight} = phi(n) + {sep.weight - phi}")
assert sep.witness is not None
print(f"  witness: class {sorted(sep.witness.block_a)} separates from the rest")
kappa = kappa_class(build_quotient(2310), certified_hint=sep.classes).kappa
print(f"  and the class cut shows this is optimal: kappa(P(C_2310)) = {kappa}")

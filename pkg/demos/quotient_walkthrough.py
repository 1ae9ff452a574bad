#!/usr/bin/env python3
"""A tour of the divisor-class model of P(C_n) and the two kappa routes.

Walks through n = 36: the quotient graph, its weights, a pairwise minimum
cut, and the agreement between the class-level computation, the element-level
brute force, and the closed form.
"""

from pgk import (
    build_quotient,
    expand_to_elements,
    factorize,
    kappa_class,
    kappa_element_oracle,
    kappa_formula,
    min_cut_between,
    subgroup_classes,
)

n = 36
g = build_quotient(n)

print(f"n = {n}: the power graph has {n} vertices, but only {len(g.divisors)}")
print("kinds of vertex -- one per divisor (element order), weighted by phi:")
for cls in g.classes:
    members = sorted(expand_to_elements(n, {cls.d}))
    print(f"  order {cls.d:>2}: {cls.weight} element(s) {members}")

print("\nClasses are adjacent when one order divides the other, e.g.")
print(f"  4 ~ 12: {g.adjacent(4, 12)},   4 ~ 6: {g.adjacent(4, 6)}")
print(f"incomparable divisor pairs: {g.non_adjacent_pairs()}")

print(f"\nsubgroup of order 6 = classes {sorted(subgroup_classes(n, 6))}")

weight, cut = min_cut_between(g, 4, 6)
print(f"\ncheapest class set separating order-4 from order-6 elements:")
print(f"  remove {sorted(cut)} at total weight {weight}")

print("\nkappa three ways:")
print(f"  weighted class cut : {kappa_class(g).kappa}")
print(f"  element brute force: {kappa_element_oracle(n).kappa}")
print(f"  closed form        : {kappa_formula(factorize(n))}")

"""Explicit separator constructions and exhaustive minimum-separator search.

The layered family Z(r, k), defined for 0 <= k <= e_r - 1, removes

  * the generator class of n,
  * the classes of alpha_j = p_1^e_1 ... p_{r-1}^e_{r-1} * p_r^j for
    k < j < e_r, and
  * the full subgroups of order beta_{k,i} = alpha_k / p_i for each of the
    r - 1 smaller primes.

What survives splits into the remaining alpha layer (orders divisible by
alpha_0) and everything else, so Z(r, k) always disconnects the quotient.
Its element count has a closed form (size_Z_formula), minimized at
k = e_r - 1 when 2*phi(P) > P and at k = 0 when 2*phi(P) < P, with all k
tied at equality. In the exactly-solved cases the optimum is not just small
but IS the minimum separator: unique when 2*phi(P) > P and when r = 3 with
2*phi(p_1 p_2) < p_1 p_2, and for n = 2^e_1 p^e_2 the e_2 sets Z(2, k) are
precisely the minimum separators. enumerate_min_separators machine-checks
statements of that kind by exhaustive subset search.

The layer sets are not always optimal: for n = 2310 a hand-built separator
mixing the order classes of 210 and 330 with the subgroups of order 6, 10
and 15 has 630 = phi(n) + 150 elements, beating the k = 0 layer set's 642.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import prod

from .arith import Factorization, alpha_beta, divisors, factorize, totient
from .connectivity import SeparationWitness
from .formulas import classify
from .quotient import QuotientGraph, build_quotient, components_without


@dataclass(frozen=True)
class ClassSeparator:
    """A divisor-class set proposed as a separator, with its total weight."""

    n: int
    classes: frozenset[int]
    weight: int
    witness: SeparationWitness | None = None
    label: str = ""
    note: str = ""


def build_Z(f: Factorization, k: int) -> ClassSeparator:
    """The layer separator Z(r, k) as a divisor-class set."""
    if f.r < 2:
        raise ValueError("Z(r, k) requires at least two distinct primes")
    e_r = f.exponents[-1]
    if not 0 <= k <= e_r - 1:
        raise ValueError(f"k must satisfy 0 <= k <= {e_r - 1}, got {k}")
    classes = {f.n}
    for j in range(k + 1, e_r):
        classes.add(alpha_beta(f, j))
    for i in range(1, f.r):
        classes.update(divisors(alpha_beta(f, k, {i})))
    return ClassSeparator(
        n=f.n,
        classes=frozenset(classes),
        weight=sum(totient(d) for d in classes),
        label=f"Z({f.r},{k})",
    )


def size_Z_formula(f: Factorization, k: int) -> int:
    """Closed form for |Z(r, k)|:

        phi(n) + B * (p_r^(e_r-1) * phi(P) + p_r^k * (P - 2*phi(P)))

    with P the product of the smaller primes and B = prod p_i^(e_i - 1) over
    them. Always equals the expanded size of build_Z(f, k).
    """
    if f.r < 2:
        raise ValueError("Z(r, k) requires at least two distinct primes")
    e_r = f.exponents[-1]
    if not 0 <= k <= e_r - 1:
        raise ValueError(f"k must satisfy 0 <= k <= {e_r - 1}, got {k}")
    c = classify(f)
    p_r = f.primes[-1]
    B = prod(p ** (e - 1) for p, e in f.factors[:-1])
    return totient(f.n) + B * (p_r ** (e_r - 1) * c.phiP + p_r**k * (c.P - 2 * c.phiP))


def optimal_Z(f: Factorization) -> ClassSeparator:
    """The weight-minimizing member of the Z family.

    k = e_r - 1 when 2*phi(P) > P, k = 0 when 2*phi(P) < P; at equality every
    k gives the same weight and k = 0 is returned with a note saying so.
    """
    if f.r < 2:
        raise ValueError("Z(r, k) requires at least two distinct primes")
    c = classify(f)
    gap = 2 * c.phiP - c.P
    if gap > 0:
        return build_Z(f, f.exponents[-1] - 1)
    sep = build_Z(f, 0)
    if gap == 0:
        sep = replace(sep, note="all k in the Z family tie at this weight")
    return sep


def example_2310() -> ClassSeparator:
    """The hand-built separator for n = 2310 that beats the Z family.

    Removes the order classes of 2310, 210 and 330 plus the subgroups of
    order 6, 10 and 15: 630 = phi(2310) + 150 elements. Carries a verified
    witness whose small side is the single class of order 30.
    """
    n = 2310
    classes = {n, 210, 330}
    for d in (6, 10, 15):
        classes.update(divisors(d))
    sep = ClassSeparator(
        n=n,
        classes=frozenset(classes),
        weight=sum(totient(d) for d in classes),
        label="example-2310",
    )
    return replace(sep, witness=check_disconnects(sep))


def check_disconnects(s: ClassSeparator) -> SeparationWitness:
    """Certify that removing s.classes disconnects the quotient of P(C_n).

    Returns a two-block witness: block_a is the component holding the
    smallest surviving alpha-layer divisor (one divisible by alpha_0) when
    such a survivor exists, else the smallest component; block_b merges the
    rest. Raises if the remainder is connected, empty, or a single class.
    """
    g = build_quotient(s.n)
    for d in s.classes:
        if not g.has_divisor(d):
            raise ValueError(f"{d} does not divide {s.n}")
    survivors = [d for d in g.divisors if d not in s.classes]
    if len(survivors) < 2:
        raise ValueError(
            f"only {len(survivors)} class(es) survive removal; no separation exists"
        )
    comps = components_without(g, s.classes)
    if len(comps) < 2:
        raise ValueError(f"removing {sorted(s.classes)} leaves the quotient connected")
    f = factorize(s.n)
    block_a: frozenset[int] | None = None
    if f.r >= 2:
        alpha0 = alpha_beta(f, 0)
        layered = [d for d in survivors if d % alpha0 == 0]
        if layered:
            anchor = min(layered)
            block_a = next(c for c in comps if anchor in c)
    if block_a is None:
        block_a = min(comps, key=lambda c: (len(c), sorted(c)))
    block_b = frozenset().union(*(c for c in comps if c is not block_a))
    return SeparationWitness(
        removed=frozenset(s.classes), block_a=block_a, block_b=block_b
    )


def _kept_side_locked(g: QuotientGraph, kept: list[int], undecided: list[int]) -> bool:
    # Optimistic connectivity prune: if the classes already committed to
    # survive are mutually connected and every undecided class attaches to
    # them, no way of finishing the subset can disconnect the quotient.
    if not kept:
        return False
    seen = {kept[0]}
    todo = [kept[0]]
    while todo:
        d = todo.pop()
        for e in kept:
            if e not in seen and (e % d == 0 or d % e == 0):
                seen.add(e)
                todo.append(e)
    if len(seen) != len(kept):
        return False
    return all(
        any(x % d == 0 or d % x == 0 for d in kept) for x in undecided
    )


def enumerate_min_separators(
    g: QuotientGraph, kappa: int, *, max_divisors: int = 24, force: bool = False
) -> list[ClassSeparator]:
    """All class sets of total weight exactly kappa that disconnect the quotient.

    With kappa the true connectivity these are exactly the minimum separators
    of P(C_n). Every result contains the classes 1 and n (the universal
    vertices must go), carries a verified witness, and is labelled Z(r, k)
    when it coincides with a layer set. Output is lexicographic by divisor
    set. Guarded to tau(n) <= max_divisors unless force=True.
    """
    n = g.n
    if g.is_complete:
        raise ValueError("complete quotient has no separator; kappa = n - 1")
    tau = len(g.divisors)
    if tau > max_divisors and not force:
        raise ValueError(
            f"tau(n) = {tau} exceeds the enumeration guard {max_divisors}; "
            "pass force=True to search anyway"
        )
    base_weight = g.weight(1) + g.weight(n)
    if kappa < base_weight:
        return []
    budget = kappa - base_weight
    cands = [d for d in g.divisors if d != 1 and d != n]
    wts = [g.weight(d) for d in cands]
    m = len(cands)

    # suffix subset-sum feasibility bitsets over the extra weight still needed
    mask = (1 << (budget + 1)) - 1
    reach = [0] * (m + 1)
    reach[m] = 1
    for i in range(m - 1, -1, -1):
        r = reach[i + 1]
        reach[i] = (r | (r << wts[i])) & mask

    found: list[frozenset[int]] = []
    chosen: list[int] = []
    kept: list[int] = []

    def dfs(i: int, spent: int) -> None:
        if spent == budget:
            removed = frozenset(chosen) | {1, n}
            if len(components_without(g, removed)) >= 2:
                found.append(removed)
            return
        if i == m:
            return
        if not (reach[i] >> (budget - spent)) & 1:
            return
        if _kept_side_locked(g, kept, cands[i:]):
            return
        if spent + wts[i] <= budget:
            chosen.append(cands[i])
            dfs(i + 1, spent + wts[i])
            chosen.pop()
        kept.append(cands[i])
        dfs(i + 1, spent)
        kept.pop()

    dfs(0, 0)

    f = factorize(n)
    z_labels = {
        frozenset(build_Z(f, k).classes): f"Z({f.r},{k})"
        for k in range(f.exponents[-1])
    }
    results = []
    for classes in sorted(found, key=lambda s: tuple(sorted(s))):
        sep = ClassSeparator(
            n=n,
            classes=classes,
            weight=kappa,
            label=z_labels.get(classes, "enumerated"),
        )
        results.append(replace(sep, witness=check_disconnects(sep)))
    return results

"""The divisor-class quotient of the power graph of a cyclic group.

In the power graph of C_n two elements are adjacent iff one generates a
subgroup containing the other, which for a cyclic group depends only on the
two element orders: d-order and e-order elements are adjacent exactly when
d | e or e | d. Elements of equal order share their closed neighbourhood, so
the whole graph is the blow-up of a small quotient: one node per divisor d of
n (the class of elements of order d, of size phi(d)), nodes joined by proper
divisibility, each class expanding to a clique with complete joins along
quotient edges. Minimum vertex cuts respect this structure -- a smallest
disconnecting set always consists of whole order classes -- which is what
makes connectivity questions tractable at class level.

QuotientGraph is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

from .arith import divisors, totient


@dataclass(frozen=True)
class DivisorClass:
    """One quotient node: the elements of order d, phi(d) of them."""

    d: int
    weight: int


@dataclass(frozen=True)
class QuotientGraph:
    n: int
    divisors: tuple[int, ...]
    weights: tuple[int, ...]

    @cached_property
    def _index(self) -> dict[int, int]:
        return {d: i for i, d in enumerate(self.divisors)}

    @cached_property
    def classes(self) -> tuple[DivisorClass, ...]:
        return tuple(DivisorClass(d, w) for d, w in zip(self.divisors, self.weights))

    def weight(self, d: int) -> int:
        return self.weights[self._index[d]]

    def index(self, d: int) -> int:
        """Position of divisor d in the ascending divisor list."""
        return self._index[d]

    def has_divisor(self, d: int) -> bool:
        return d in self._index

    def adjacent(self, d: int, e: int) -> bool:
        """True iff the classes of d and e are joined: d != e and one divides the other."""
        if d not in self._index or e not in self._index:
            raise ValueError(f"{d} and {e} must both divide {self.n}")
        return d != e and (e % d == 0 or d % e == 0)

    @cached_property
    def is_complete(self) -> bool:
        """Complete iff the divisors form a chain, i.e. n is 1 or a prime power."""
        ds = self.divisors
        return all(ds[i + 1] % ds[i] == 0 for i in range(len(ds) - 1))

    def non_adjacent_pairs(self) -> list[tuple[int, int]]:
        """All incomparable divisor pairs (u, v) with u < v, lexicographic."""
        ds = self.divisors
        return [
            (u, v)
            for i, u in enumerate(ds)
            for v in ds[i + 1 :]
            if v % u != 0
        ]


def build_quotient(n: int) -> QuotientGraph:
    """Quotient graph of P(C_n): nodes are divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    ds = tuple(divisors(n))
    return QuotientGraph(n=n, divisors=ds, weights=tuple(totient(d) for d in ds))


def subgroup_classes(n: int, d: int) -> frozenset[int]:
    """Divisor classes making up the unique subgroup of order d: all e | d.

    The class weights over the result sum to d, the subgroup's size.
    """
    if n < 1 or d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    return frozenset(divisors(d))


def expand_to_elements(n: int, classes: Iterable[int]) -> frozenset[int]:
    """Residues x in Z_n whose order n/gcd(n, x) lies in the given classes."""
    chosen = set(classes)
    for d in chosen:
        if d < 1 or n % d != 0:
            raise ValueError(f"{d} does not divide {n}")
    return frozenset(x for x in range(n) if n // gcd(n, x) in chosen)


def components_without(g: QuotientGraph, removed: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the quotient after deleting the given classes.

    Components are returned sorted by their smallest divisor.
    """
    gone = set(removed)
    for d in gone:
        if not g.has_divisor(d):
            raise ValueError(f"{d} does not divide {g.n}")
    survivors = [d for d in g.divisors if d not in gone]
    components: list[frozenset[int]] = []
    unseen = set(survivors)
    for start in survivors:
        if start not in unseen:
            continue
        stack = [start]
        unseen.discard(start)
        comp = {start}
        while stack:
            d = stack.pop()
            for e in list(unseen):
                if e % d == 0 or d % e == 0:
                    unseen.discard(e)
                    comp.add(e)
                    stack.append(e)
        components.append(frozenset(comp))
    return sorted(components, key=min)

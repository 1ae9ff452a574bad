"""Exact integer arithmetic underlying the divisor-class model.

Plain number theory only: prime-power factorization by trial division,
Euler's totient, divisor enumeration, and the two derived integer families
used by the separator constructions (cofree divisors n / (p_i1 * ... * p_ik),
and the alpha/beta ladder built from the largest prime factor).

Python integers never overflow, so there is no wraparound to defend against;
bad inputs are rejected up front instead (every operation requires n >= 1).
All functions are pure and all values immutable, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition n = p_1^e_1 * ... * p_r^e_r, p_1 < ... < p_r.

    The factor list is empty exactly when n = 1. Invariants are enforced at
    construction time, so a Factorization in hand is always consistent.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            previous = p
            product *= p**e
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")

    @property
    def r(self) -> int:
        """Number of distinct prime divisors (0 for n = 1)."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by deterministic trial division."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    remaining = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n, tuple(factors))


def totient(n: int) -> int:
    """Euler's totient: the number of 1 <= k <= n coprime to n."""
    phi = 1
    for p, e in factorize(n).factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def cofree_divisor(f: Factorization, indices: Iterable[int]) -> int:
    """n with one copy of each indexed prime divided out: n / prod(p_i).

    Positions are 1-based into the sorted prime list. The empty index set
    returns n itself (empty product convention).
    """
    index_set = set(indices)
    for i in index_set:
        if not 1 <= i <= f.r:
            raise ValueError(f"prime position {i} out of range 1..{f.r}")
    result = f.n
    for i in index_set:
        result //= f.primes[i - 1]
    return result


def alpha_beta(f: Factorization, k: int, drop: Iterable[int] = ()) -> int:
    """The layered separator integers alpha_k and beta_{k, drop}.

    alpha_k carries every prime except the largest at full multiplicity and
    the largest prime p_r at exponent k:

        alpha_k = p_1^e_1 * ... * p_{r-1}^e_{r-1} * p_r^k,   0 <= k <= e_r - 1.

    A nonempty ``drop`` (1-based positions among the first r-1 primes) divides
    one copy of each dropped prime out of alpha_k, giving beta_{k, drop}.
    """
    if f.r < 2:
        raise ValueError("alpha/beta require at least two distinct primes")
    e_r = f.exponents[-1]
    if not 0 <= k <= e_r - 1:
        raise ValueError(f"k must satisfy 0 <= k <= {e_r - 1}, got {k}")
    drop_set = set(drop)
    for i in drop_set:
        if not 1 <= i <= f.r - 1:
            raise ValueError(f"drop position {i} out of range 1..{f.r - 1}")
    value = f.n // f.primes[-1] ** (e_r - k)
    for i in drop_set:
        value //= f.primes[i - 1]
    return value

"""Small integer helpers: factorization, totients, divisors, unit lists."""

from __future__ import annotations

import math
from functools import lru_cache


def prime_factors(n: int) -> dict[int, int]:
    """Factor n >= 1 by trial division; returns {prime: exponent}."""
    if n < 1:
        raise ValueError("prime_factors needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = 1
    for p, a in prime_factors(n).items():
        result *= (p - 1) * p ** (a - 1)
    return result


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    out = [1]
    for p, a in prime_factors(n).items():
        out = [d * p**e for d in out for e in range(a + 1)]
    return tuple(sorted(out))


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == {n: 1}


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    """Residues coprime to n, ascending.  For n = 1 this is (1,)."""
    if n < 1:
        raise ValueError("units needs n >= 1")
    if n == 1:
        return (1,)
    return tuple(k for k in range(1, n) if math.gcd(k, n) == 1)

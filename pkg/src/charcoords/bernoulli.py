"""Exact Bernoulli numbers, Bernoulli polynomials, and their twists by
Dirichlet characters (generalized Bernoulli numbers).

Convention: B_1 = -1/2 throughout.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import units
from .characters import DirichletCharacter
from .cyclotomic import CycElem

_B_CACHE: list[Fraction] = [Fraction(1)]
_B_LOCK = threading.Lock()  # growth must be serialized; reads are index-safe


def bernoulli_number(m: int) -> Fraction:
    """B_m, exact, with B_1 = -1/2.

    Computed from the recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 and
    memoized.
    """
    if m < 0:
        raise ValueError("bernoulli_number needs m >= 0")
    if len(_B_CACHE) <= m:
        with _B_LOCK:
            while len(_B_CACHE) <= m:
                k = len(_B_CACHE)
                s = sum(
                    (math.comb(k + 1, i) * _B_CACHE[i] for i in range(k)),
                    Fraction(0),
                )
                _B_CACHE.append(-s / (k + 1))
    return _B_CACHE[m]


@dataclass(frozen=True)
class BernoulliPolynomial:
    """B_r(x) with exact coefficients, ascending powers of x."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> tuple[Fraction, ...]:
        return tuple(i * c for i, c in enumerate(self.coeffs) if i)


@lru_cache(maxsize=None)
def bernoulli_polynomial(r: int) -> BernoulliPolynomial:
    """B_r(x) = sum_k C(r, k) B_k x^(r-k)."""
    if r < 0:
        raise ValueError("bernoulli_polynomial needs r >= 0")
    coeffs = [Fraction(0)] * (r + 1)
    for k in range(r + 1):
        coeffs[r - k] = math.comb(r, k) * bernoulli_number(k)
    return BernoulliPolynomial(r, tuple(coeffs))


def generalized_bernoulli(r: int, chi: DirichletCharacter) -> CycElem:
    """B_{r,chi} = f^(r-1) * sum_{k=1}^{f} B_r(k/f) chi(k), chi primitive mod f.

    The value lies in Q(zeta_m) for m the order of chi and is rational for
    real characters.  Imprimitive characters are rejected; coordinate
    formulas route through primitive_part plus Euler factors instead.
    """
    if r < 1:
        raise ValueError("generalized_bernoulli needs r >= 1")
    f = chi.modulus
    if chi.conductor() != f:
        raise ValueError("generalized_bernoulli needs a primitive character")
    m = chi.order
    poly = bernoulli_polynomial(r)
    acc = [Fraction(0)] * m
    for k in units(f):
        acc[chi.value_exponent(k)] += poly(Fraction(k, f))
    return CycElem.from_polynomial(m, acc) * Fraction(f) ** (r - 1)

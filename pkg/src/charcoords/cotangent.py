"""Exact cotangent powers and cotangent numbers at pi/n.

Everything runs inside Q(zeta_n) through the identity
i*cot(pi*k/n) = (1 + zeta_n^k) / (1 - zeta_n^k); no floating trigonometry
appears on the exact path.  The ``cotangent number`` of index j is
i^j * cot_(j-1)(pi/n), where cot_l is the l-th derivative of cot; it is
rewritten as a rational combination of powers of i*cot before evaluation,
so the result is an exact cyclotomic number (real for even j, purely
imaginary for odd j).

n = 2 is admitted everywhere: i*cot(pi/2) = 0 and all values degenerate
gracefully.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .cyclotomic import CycElem

_COT_POLYS: list[tuple[int, ...]] = [(0, 1)]  # p_0(y) = y, ascending coefficients
_COT_LOCK = threading.Lock()


@dataclass(frozen=True)
class CotDerivPoly:
    """cot_l written as a polynomial in y = cot.

    Satisfies p_0 = y and p_(l+1) = -(1 + y^2) * dp_l/dy, so p_l has degree
    l + 1 and only terms of degree congruent to l + 1 mod 2.
    """

    order: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def cot_derivative_poly(l: int) -> CotDerivPoly:
    """Polynomial giving the l-th derivative of cot in terms of cot."""
    if l < 0:
        raise ValueError("cot_derivative_poly needs l >= 0")
    if len(_COT_POLYS) <= l:
        with _COT_LOCK:
            while len(_COT_POLYS) <= l:
                p = _COT_POLYS[-1]
                dp = [i * c for i, c in enumerate(p)][1:]  # p'
                nxt = [0] * (len(dp) + 2)
                for i, c in enumerate(dp):  # -(1 + y^2) p'
                    nxt[i] -= c
                    nxt[i + 2] -= c
                _COT_POLYS.append(tuple(nxt))
    return CotDerivPoly(l, _COT_POLYS[l])


_ICOT_CACHE: dict[tuple[int, int], CycElem] = {}
_ICOT_POWERS: dict[tuple[int, int], CycElem] = {}


def icot_value(n: int, k: int = 1) -> CycElem:
    """i*cot(pi*k/n) = (1 + zeta_n^k)/(1 - zeta_n^k), exact in Q(zeta_n)."""
    if n < 2:
        raise ValueError("icot_value needs n >= 2")
    if math.gcd(k, n) != 1:
        raise ValueError("k = %d is not coprime to n = %d" % (k, n))
    key = (n, k % n)
    val = _ICOT_CACHE.get(key)
    if val is None:
        z = CycElem.zeta(n, k)
        one = CycElem.one(n)
        val = (one + z) * (one - z).inverse()
        _ICOT_CACHE[key] = val
    return val


def icot_power(r: int, n: int) -> CycElem:
    """(i*cot(pi/n))^r, exact."""
    if r < 1:
        raise ValueError("icot_power needs r >= 1")
    if n < 2:
        raise ValueError("icot_power needs n >= 2")
    val = _ICOT_POWERS.get((n, r))
    if val is None:
        val = icot_value(n) if r == 1 else icot_power(r - 1, n) * icot_value(n)
        _ICOT_POWERS[(n, r)] = val
    return val


def cotangent_number(j: int, n: int) -> CycElem:
    """i^j * cot_(j-1)(pi/n) as an exact element of Q(zeta_n).

    Writing cot_(j-1) = sum_m a_m y^m with m = j mod 2, the value is
    sum_m a_m * (-1)^((j-m)/2) * (i*cot(pi/n))^m.
    """
    if j < 1:
        raise ValueError("cotangent_number needs j >= 1")
    if n < 2:
        raise ValueError("cotangent_number needs n >= 2")
    poly = cot_derivative_poly(j - 1)
    total = CycElem.zero(n)
    for m, c in enumerate(poly.coeffs):
        if c:
            if (j - m) % 2:
                raise ArithmeticError("parity violation in cotangent polynomial")
            term = CycElem.one(n) if m == 0 else icot_power(m, n)
            total = total + term * (c * (-1) ** ((j - m) // 2))
    return total

"""Truncated formal Laurent series over exact rationals, and series-level
verification of the identities behind the cotangent-power expansion.

The series here act as an oracle that is independent of all cyclotomic
arithmetic: the expansion coefficients produced by
:mod:`charcoords.combinatorics` are checked against truncated-series
identities in the variable t, with every i-power carried as an explicit
rational sign.

A :class:`LaurentSeries` knows its coefficients for exponents
``low .. prec-1`` and refuses to answer beyond ``prec`` (raising
:class:`TruncationError`), so truncation is never exceeded silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import cot_power_coeff, stirling_first_unsigned


class TruncationError(ValueError):
    """A coefficient beyond the known truncation order was requested."""


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    """Coefficients for exponents low..prec-1; unknown from prec onward."""

    low: int
    coeffs: tuple[Fraction, ...]
    prec: int

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        low = self.low
        if low + len(coeffs) != self.prec:
            raise ValueError("inconsistent truncation bookkeeping")
        while coeffs and not coeffs[0]:
            coeffs = coeffs[1:]
            low += 1
        if not coeffs:
            low = self.prec
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "low", low)

    @classmethod
    def from_terms(cls, low: int, coeffs) -> "LaurentSeries":
        coeffs = tuple(coeffs)
        return cls(low, coeffs, low + len(coeffs))

    @property
    def known_through(self) -> int:
        return self.prec - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int) -> Fraction:
        if e >= self.prec:
            raise TruncationError(
                "coefficient of t^%d requested, series known through t^%d"
                % (e, self.prec - 1)
            )
        if e < self.low:
            return Fraction(0)
        return self.coeffs[e - self.low]

    def shift(self, d: int) -> "LaurentSeries":
        """Multiply by t^d."""
        return LaurentSeries(self.low + d, self.coeffs, self.prec + d)

    def _scalar(self, q) -> "LaurentSeries":
        q = Fraction(q)
        return LaurentSeries(self.low, tuple(c * q for c in self.coeffs), self.prec)

    def __neg__(self):
        return self._scalar(-1)

    def _cast(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            # constants are exact, but inherit this series' horizon
            return LaurentSeries(0, (Fraction(other),) + (Fraction(0),) * max(self.prec - 1, 0), max(self.prec, 1))
        return None

    def __add__(self, other):
        o = self._cast(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        low = min(self.low, o.low, prec)
        out = [Fraction(0)] * (prec - low)
        for s in (self, o):
            for i, c in enumerate(s.coeffs):
                e = s.low + i
                if e < prec:
                    out[e - low] += c
        return LaurentSeries(low, tuple(out), prec)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._cast(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scalar(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.is_zero or other.is_zero:
            prec = min(self.low + other.prec, other.low + self.prec)
            return LaurentSeries(prec, (), prec)
        low = self.low + other.low
        prec = min(self.low + other.prec, other.low + self.prec)
        out = [Fraction(0)] * (prec - low)
        for i, a in enumerate(self.coeffs):
            if a:
                ea = self.low + i
                for j, b in enumerate(other.coeffs):
                    if b:
                        e = ea + other.low + j
                        if e < prec:
                            out[e - low] += a * b
        return LaurentSeries(low, tuple(out), prec)

    __rmul__ = __mul__

    def power(self, e: int) -> "LaurentSeries":
        if e < 1:
            raise ValueError("power needs e >= 1")
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def derivative(self) -> "LaurentSeries":
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            e = self.low + i
            if e:
                out[i] = e * c
        return LaurentSeries(self.low - 1, tuple(out), self.prec - 1)

    def inverse(self) -> "LaurentSeries":
        """Inverse of a series whose lowest known coefficient is nonzero."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of a series with no known terms")
        c0 = self.coeffs[0]
        rel = len(self.coeffs)
        inv = [Fraction(0)] * rel
        inv[0] = Fraction(1) / c0
        for k in range(1, rel):
            s = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    s += self.coeffs[i] * inv[k - i]
            inv[k] = -s / c0
        return LaurentSeries(-self.low, tuple(inv), -self.low + rel)

    def agrees_through(self, other: "LaurentSeries", e_max: int) -> bool:
        """Exact coefficient agreement for all exponents <= e_max."""
        if e_max >= self.prec or e_max >= other.prec:
            raise TruncationError("comparison window exceeds known precision")
        start = min(self.low, other.low)
        return all(
            self.coefficient(e) == other.coefficient(e) for e in range(start, e_max + 1)
        )

    def __repr__(self):
        inner = ", ".join(
            "t^%d: %s" % (self.low + i, c) for i, c in enumerate(self.coeffs)
        )
        return "LaurentSeries({%s}, O(t^%d))" % (inner, self.prec)


def series_one_minus_exp_inv(M: int) -> LaurentSeries:
    """Laurent expansion of 1/(1 - e^t) around t = 0, known through t^M.

    Built from the exponential series and series inversion: the function
    has a simple pole with residue -1, constant term 1/2 and t-coefficient
    -1/12 (matching -B_2/2!).
    """
    if M < 2:
        raise ValueError("need M >= 2")
    w = LaurentSeries.from_terms(
        0, (Fraction(1, math.factorial(k + 1)) for k in range(M + 2))
    )
    # 1 - e^t = -t * w  =>  1/(1 - e^t) = -t^(-1) * w^(-1)
    return -(w.inverse().shift(-1))


def series_icot_half(M: int) -> LaurentSeries:
    """i*cot(-i*t/2) = 2/(1 - e^t) - 1, an odd series with leading term -2/t."""
    if M < 2:
        raise ValueError("need M >= 2")
    return series_one_minus_exp_inv(M) * 2 - 1


def _cot_derivative_series(j: int, base: LaurentSeries) -> LaurentSeries:
    """i^j cot_(j-1)(-i*t/2) written rationally from derivatives of ``base``
    = 1/(1 - e^t); for j = 1 the constant 1/2 must be removed by hand."""
    if j == 1:
        return base * 2 - 1
    d = base
    for _ in range(j - 1):
        d = d.derivative()
    return d * Fraction((-1) ** (j - 1) * 2**j)


def verify_stirling_identity(k: int, M: int) -> bool:
    """Check 1/(1-e^t)^k = (1/(k-1)!) sum_j S(k, j) d^(j-1)/dt^(j-1) 1/(1-e^t)
    as Laurent series, exactly through t^M."""
    if k < 1:
        raise ValueError("need k >= 1")
    if M < k + 2:
        raise TruncationError("truncation order too small; need M >= k + 2")
    g = series_one_minus_exp_inv(M + k + 2)
    lhs = g.power(k)
    rhs = LaurentSeries(M + 1, (), M + 1)  # zero with a generous horizon
    d = g
    for j in range(1, k + 1):
        s = stirling_first_unsigned(k, j)
        if s:
            rhs = rhs + d * Fraction(s, math.factorial(k - 1))
        if j < k:
            d = d.derivative()
    return lhs.agrees_through(rhs, M)


def verify_power_decomposition(r: int, M: int) -> bool:
    """Check (i cot)^r = ((-1)^r + 1)/2 + sum_j c_{r,j} i^j cot_(j-1) as
    Laurent series in t (evaluated along cot(-i*t/2)), exactly through t^M.

    The coefficients c_{r,j} are taken from
    :func:`charcoords.combinatorics.cot_power_coeff`, so this is an oracle
    for that module that never touches cyclotomic arithmetic.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if M < r + 3:
        raise TruncationError("truncation order too small; need M >= r + 3")
    g = series_one_minus_exp_inv(M + r + 3)
    ic = g * 2 - 1
    lhs = ic.power(r)
    rhs = LaurentSeries(M + 1, (), M + 1) + Fraction((-1) ** r + 1, 2)
    for j in range(1, r + 1):
        c = cot_power_coeff(r, j)
        if c:
            rhs = rhs + _cot_derivative_series(j, g) * c
    return lhs.agrees_through(rhs, M)


def bernoulli_conv_coeff_from_series(r: int, j: int) -> Fraction:
    """Recover the Bernoulli-convolution coefficient from the t^(-j)
    coefficient of the r-th power of the i*cot(-i*t/2) series.

    Uses sum_m B_{2m} t^(2m)/(2m)! = -(t/2) * i*cot(-i*t/2), so the value
    equals (-1/2)^r [t^(-j)] (i*cot(-i*t/2))^r.  Cross-oracle for
    :func:`charcoords.combinatorics.bernoulli_conv_coeff`.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if j < 1 or j > r or (r - j) % 2:
        return Fraction(0)
    ic = series_icot_half(r + 4)
    return Fraction(-1, 2) ** r * ic.power(r).coefficient(-j)

"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as the canonical residue of a polynomial in zeta_N
modulo the N-th cyclotomic polynomial Phi_N: a vector of phi(N) rationals,
the coefficients of 1, zeta_N, ..., zeta_N^(phi(N)-1).  The residue is
unique, so structural equality of coefficient vectors is equality of field
elements.  All values are immutable and every operation is a pure function.

Orders are never coerced silently: combining two CycElem values of
different orders raises; use :func:`to_common_order` (which embeds both
into Q(zeta_lcm)) first.  Plain ``int``/``Fraction`` scalars are the one
exception, since the rationals sit inside every cyclotomic field.

Module-level caches (cyclotomic polynomials, subfield solver data) are
plain dicts/lru_caches; under CPython's GIL they are safe to share across
threads, at worst recomputing an entry.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .arith import divisors, euler_phi

# All rational scalars in this package are arbitrary-precision fractions
# in lowest terms with positive denominator, which is exactly what the
# standard library type guarantees.
Rat = Fraction

Scalar = Union[int, Fraction]


class FieldMembershipError(RuntimeError):
    """A value expected to lie in a subfield Q(zeta_m) does not.

    Raised by the subfield projection used in coordinate computations;
    it signals an internal inconsistency, not bad user input.
    """


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, ascending powers)

def _exact_div_int(num: list[int], den: Sequence[int]) -> list[int]:
    """Divide by a monic integer polynomial, asserting zero remainder."""
    num = list(num)
    dd = len(den) - 1
    if den[dd] != 1:
        raise ValueError("divisor must be monic")
    out = [0] * (len(num) - dd)
    for e in range(len(num) - 1, dd - 1, -1):
        c = num[e]
        if c:
            out[e - dd] = c
            for i in range(dd + 1):
                num[e - dd + i] -= c * den[i]
    if any(num):
        raise ArithmeticError("division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, ascending powers, monic of degree phi(N).

    Computed by exact division of x^N - 1 by the product of Phi_d over the
    proper divisors d of N, and memoized per process.
    """
    if N < 1:
        raise ValueError("cyclotomic_polynomial needs N >= 1")
    if N == 1:
        return (-1, 1)
    poly = [-1] + [0] * (N - 1) + [1]
    for d in divisors(N)[:-1]:
        poly = _exact_div_int(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_mod_phi(coeffs: Sequence, N: int) -> list:
    """Reduce a coefficient list (ints or Fractions) modulo Phi_N.

    Accepts any length; returns a list of length exactly phi(N).
    """
    phi = cyclotomic_polynomial(N)
    d = len(phi) - 1
    v = list(coeffs)
    if len(v) > d:
        nz = [(i, q) for i, q in enumerate(phi[:-1]) if q]
        for e in range(len(v) - 1, d - 1, -1):
            c = v[e]
            if c:
                v[e] = 0
                base = e - d
                for i, q in nz:
                    v[base + i] -= c * q
        del v[d:]
    if len(v) < d:
        v.extend([0] * (d - len(v)))
    return v


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = den[dd]
    q = [Fraction(0)] * max(len(num) - dd, 0)
    for e in range(len(num) - 1, dd - 1, -1):
        c = num[e]
        if c:
            c = c / lead
            q[e - dd] = c
            for i in range(dd + 1):
                num[e - dd + i] -= c * den[i]
    while num and not num[-1]:
        num.pop()
    return q, num


def _poly_inverse_mod_phi(res: Sequence[Fraction], N: int) -> list[Fraction]:
    """Inverse of a residue modulo Phi_N by the extended Euclidean algorithm."""
    r0 = [Fraction(c) for c in cyclotomic_polynomial(N)]
    r1 = [Fraction(c) for c in res]
    while r1 and not r1[-1]:
        r1.pop()
    if not r1:
        raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % N)
    u0: list[Fraction] = []
    u1: list[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        # u_next = u0 - q*u1
        qu = [Fraction(0)] * (len(q) + len(u1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, uj in enumerate(u1):
                    qu[i + j] += qi * uj
        nxt = [Fraction(0)] * max(len(u0), len(qu))
        for i, c in enumerate(u0):
            nxt[i] += c
        for i, c in enumerate(qu):
            nxt[i] -= c
        r0, r1 = r1, rem
        u0, u1 = u1, nxt
    g = r1[0]  # nonzero constant: Phi_N is irreducible over Q
    return _reduce_mod_phi([c / g for c in u1], N)


def _scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    """Clear denominators: returns (integer vector, common denominator)."""
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


# ---------------------------------------------------------------------------
# subfield recognition: solve embed(y, L) == value for y in Q(zeta_m)

@lru_cache(maxsize=None)
def _embedding_monomials(L: int, m: int):
    """Exponents j*L/m for the basis of Q(zeta_m) inside Q(zeta_L), or None
    if some basis power needs reduction modulo Phi_L."""
    stride = L // m
    exps = tuple(j * stride for j in range(euler_phi(m)))
    if exps[-1] < euler_phi(L):
        return exps
    return None


def _mat_inv(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _embedding_solver(L: int, m: int):
    """Pivot rows and inverted pivot submatrix for the general projection."""
    dm, dL = euler_phi(m), euler_phi(L)
    stride = L // m
    cols = []
    for j in range(dm):
        e = j * stride
        cols.append(tuple(_reduce_mod_phi([0] * e + [1], L)))
    chosen: list[int] = []
    echelon: list[tuple[int, list[Fraction]]] = []
    for i in range(dL):
        v = [Fraction(cols[j][i]) for j in range(dm)]
        for pos, b in echelon:
            if v[pos]:
                f = v[pos]
                v = [a - f * c for a, c in zip(v, b)]
        pivot = next((p for p, c in enumerate(v) if c), None)
        if pivot is not None:
            inv = Fraction(1) / v[pivot]
            echelon.append((pivot, [c * inv for c in v]))
            chosen.append(i)
            if len(chosen) == dm:
                break
    if len(chosen) < dm:
        raise ArithmeticError("embedding basis unexpectedly dependent")
    m0 = [[Fraction(cols[j][i]) for j in range(dm)] for i in chosen]
    return tuple(cols), tuple(chosen), tuple(tuple(r) for r in _mat_inv(m0))


def _solve_embedding(vec: Sequence[int], L: int, m: int):
    """Find y in Q(zeta_m) with embed(y, L) equal to the canonical integer
    vector ``vec``, or None if no such y exists."""
    dm, dL = euler_phi(m), euler_phi(L)
    if not any(vec):
        return [Fraction(0)] * dm
    exps = _embedding_monomials(L, m)
    if exps is not None:
        support = set(exps)
        if any(vec[i] for i in range(dL) if i not in support):
            return None
        return [Fraction(vec[e]) for e in exps]
    cols, rows, inv = _embedding_solver(L, m)
    t = [vec[i] for i in rows]
    y = [sum((inv[a][b] * t[b] for b in range(dm)), Fraction(0)) for a in range(dm)]
    den = 1
    for c in y:
        den = math.lcm(den, c.denominator)
    nums = [c.numerator * (den // c.denominator) for c in y]
    for i in range(dL):
        s = 0
        for j in range(dm):
            cj = cols[j][i]
            if cj:
                s += nums[j] * cj
        if s != den * vec[i]:
            return None
    return y


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycElem:
    """An element of Q(zeta_N) in canonical residue form.

    ``coeffs`` has length exactly phi(N) and lists the coefficients of
    ascending powers of zeta_N.  Instances are immutable and hashable.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.coeffs)
        if len(coeffs) != euler_phi(self.order):
            raise ValueError(
                "need exactly phi(%d) = %d coefficients, got %d"
                % (self.order, euler_phi(self.order), len(coeffs))
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_polynomial(cls, order: int, coeffs: Iterable[Scalar]) -> "CycElem":
        """Element given by an arbitrary polynomial in zeta_N (any length)."""
        return cls(order, tuple(_reduce_mod_phi([Fraction(c) for c in coeffs], order)))

    @classmethod
    def from_rational(cls, value: Scalar, order: int = 1) -> "CycElem":
        v = [Fraction(value)] + [Fraction(0)] * (euler_phi(order) - 1)
        return cls(order, tuple(v))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycElem":
        """zeta_N^power."""
        power %= order
        return cls.from_polynomial(order, [0] * power + [1])

    @classmethod
    def zero(cls, order: int = 1) -> "CycElem":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CycElem":
        return cls.from_rational(1, order)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycElem):
            if other.order != self.order:
                raise ValueError(
                    "order mismatch (%d vs %d): embed into a common field first,"
                    " e.g. via to_common_order" % (self.order, other.order)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycElem.from_rational(other, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElem(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycElem(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycElem(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycElem(self.order, tuple(c * q for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, da = _scaled_ints(self.coeffs)
        b, db = _scaled_ints(o.coeffs)
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        red = _reduce_mod_phi(prod, self.order)
        den = da * db
        return CycElem(self.order, tuple(Fraction(c, den) for c in red))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycElem.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "CycElem":
        """Multiplicative inverse, by the extended Euclidean algorithm
        against Phi_N over the rationals."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return CycElem(self.order, tuple(_poly_inverse_mod_phi(self.coeffs, self.order)))

    # -- field maps --------------------------------------------------------

    def galois(self, k: int) -> "CycElem":
        """Image under the automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1."""
        N = self.order
        k %= N
        if math.gcd(k, N) != 1:
            raise ValueError("galois exponent %d is not coprime to %d" % (k, N))
        if k == 1 or N == 1:
            return self
        v = [Fraction(0)] * N
        for i, c in enumerate(self.coeffs):
            if c:
                v[(i * k) % N] += c
        return CycElem(N, tuple(_reduce_mod_phi(v, N)))

    def conjugate(self) -> "CycElem":
        """Complex conjugation; equals galois(N-1) for N >= 3."""
        if self.order <= 2:
            return self
        return self.galois(self.order - 1)

    def embed(self, M: int) -> "CycElem":
        """Image in Q(zeta_M) under zeta_N -> zeta_M^(M/N); needs N | M."""
        N = self.order
        if M % N:
            raise ValueError("cannot embed order %d into order %d" % (N, M))
        if M == N:
            return self
        stride = M // N
        v = [Fraction(0)] * ((len(self.coeffs) - 1) * stride + 1)
        for i, c in enumerate(self.coeffs):
            v[i * stride] = c
        return CycElem(M, tuple(_reduce_mod_phi(v, M)))

    # -- numeric evaluation -------------------------------------------------

    def complex_eval(self, precision: int = 53):
        """Evaluate the residue polynomial at exp(2*pi*i/N).

        With the default precision the result is a Python complex computed
        in double arithmetic; the error is bounded by roughly
        4 * phi(N) * sum(|coeffs|) * 2**(1 - precision).  For precision > 53
        the evaluation runs in mpmath at the requested number of bits and
        returns an mpmath ``mpc``.
        """
        if precision <= 53:
            root = cmath.exp(2j * math.pi / self.order)
            acc = 0j
            for c in reversed(self.coeffs):
                acc = acc * root + complex(c.numerator / c.denominator)
            return acc
        import mpmath

        with mpmath.workprec(precision + 10):
            root = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * root + mpmath.mpf(c.numerator) / c.denominator
            return acc

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: {"order": N, "coeffs": ["p/q", ...]}."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "CycElem":
        return cls(int(data["order"]), tuple(Fraction(s) for s in data["coeffs"]))

    def __repr__(self):
        return "CycElem(order=%d, coeffs=(%s))" % (
            self.order,
            ", ".join(str(c) for c in self.coeffs),
        )


def to_common_order(a: CycElem, b: CycElem) -> tuple[CycElem, CycElem]:
    """Embed both elements into Q(zeta_lcm(orders))."""
    L = math.lcm(a.order, b.order)
    return a.embed(L), b.embed(L)


def project_to_subfield(a: CycElem, m: int) -> CycElem:
    """Write a as an element of Q(zeta_m) for m | order, or raise
    FieldMembershipError if a does not lie in that subfield."""
    L = a.order
    if L % m:
        raise ValueError("%d does not divide the order %d" % (m, L))
    if m == L:
        return a
    ints, den = _scaled_ints(a.coeffs)
    y = _solve_embedding(ints, L, m)
    if y is None:
        raise FieldMembershipError("value does not lie in Q(zeta_%d)" % m)
    return CycElem(m, tuple(c / den for c in y))

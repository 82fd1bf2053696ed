"""Dirichlet characters mod n: enumeration, evaluation, conductors, Gauss sums.

A character is represented by its exponent vector on a fixed list of CRT
generators of the unit group (Z/n)*.  The generator convention, which also
fixes the character indexing used by the CLI, is:

* components are ordered by prime, the 2-part first;
* for an odd prime power p^a the generator is the smallest primitive root
  mod p^a;
* for modulus 4 the generator is 3; for 2^a with a >= 3 the two generators
  are -1 (order 2) and 5 (order 2^(a-2)), in that order;
* modulus 2 contributes no generators (its unit group is trivial).

The index of a character is the lexicographic rank of its exponent vector,
so the principal character always has index 0.

Character values are exact roots of unity in Q(zeta_m), where m is the
multiplicative order of the character.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, euler_phi, prime_factors, units
from .cyclotomic import CycElem


@dataclass(frozen=True)
class CrtComponent:
    prime_power: int
    generator: int        # residue mod prime_power
    order: int
    generator_mod_n: int  # CRT lift: generator mod prime_power, 1 elsewhere


def _smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo an odd prime power q."""
    phi = euler_phi(q)
    targets = prime_factors(phi)
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in targets):
            return g
    raise ArithmeticError("no primitive root mod %d" % q)


def _crt_lift(g: int, q: int, n: int) -> int:
    rest = n // q
    if rest == 1:
        return g % n
    return (g * rest * pow(rest, -1, q) + q * pow(q, -1, rest)) % n


class CharacterGroup:
    """The group of Dirichlet characters mod n, with its CRT generators.

    Instances are immutable after construction; obtain them through
    :func:`character_group` so they are shared and hash cheaply.
    """

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        self.modulus = modulus
        self.phi = euler_phi(modulus)
        comps: list[CrtComponent] = []
        for p, a in sorted(prime_factors(modulus).items()):
            q = p**a
            if p == 2:
                if a == 1:
                    continue
                if a == 2:
                    comps.append(CrtComponent(q, 3, 2, _crt_lift(3, q, modulus)))
                else:
                    comps.append(CrtComponent(q, q - 1, 2, _crt_lift(q - 1, q, modulus)))
                    comps.append(CrtComponent(q, 5, 2 ** (a - 2), _crt_lift(5, q, modulus)))
            else:
                g = _smallest_primitive_root(q)
                comps.append(CrtComponent(q, g, euler_phi(q), _crt_lift(g, q, modulus)))
        self.components = tuple(comps)
        self._log_table: dict[int, tuple[int, ...]] | None = None

    @property
    def log_table(self) -> dict[int, tuple[int, ...]]:
        """unit residue -> exponent tuple on the generators (built lazily)."""
        if self._log_table is None:
            table: dict[int, tuple[int, ...]] = {}
            for exps in itertools.product(*(range(c.order) for c in self.components)):
                u = 1 % self.modulus
                for comp, e in zip(self.components, exps):
                    u = (u * pow(comp.generator_mod_n, e, self.modulus)) % self.modulus
                table[u] = exps
            if len(table) != self.phi:
                raise ArithmeticError("generators do not generate (Z/%d)*" % self.modulus)
            self._log_table = table
        return self._log_table

    def __eq__(self, other):
        return isinstance(other, CharacterGroup) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("CharacterGroup", self.modulus))

    def __repr__(self):
        return "CharacterGroup(%d)" % self.modulus


@lru_cache(maxsize=None)
def character_group(n: int) -> CharacterGroup:
    return CharacterGroup(n)


class DirichletCharacter:
    """A Dirichlet character mod n, given by exponents on the CRT generators.

    chi(generator_i) = zeta_{d_i}^{exponents_i} where d_i is the component
    order.  Values lie in Q(zeta_m) with m the order of the character.
    """

    def __init__(self, group: CharacterGroup, exponents):
        self.group = group
        exponents = tuple(exponents)
        if len(exponents) != len(group.components):
            raise ValueError("need one exponent per generator")
        self.exponents = tuple(
            e % c.order for e, c in zip(exponents, group.components)
        )
        m = 1
        for comp, e in zip(group.components, self.exponents):
            if e:
                m = math.lcm(m, comp.order // math.gcd(comp.order, e))
        self.order = m
        # chi(generator_i) = zeta_m ** _weights[i]
        self._weights = tuple(
            (e * m) // comp.order
            for comp, e in zip(group.components, self.exponents)
        )
        self._conductor: int | None = None
        self._primitive: DirichletCharacter | None = None

    # value_order is a synonym: values generate Q(zeta_order)
    @property
    def value_order(self) -> int:
        return self.order

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    @property
    def index(self) -> int:
        """Lexicographic rank of the exponent vector."""
        rank = 0
        for comp, e in zip(self.group.components, self.exponents):
            rank = rank * comp.order + e
        return rank

    def value_exponent(self, k: int):
        """e with chi(k) = zeta_m^e, or None when gcd(k, n) > 1."""
        t = self.group.log_table.get(k % self.modulus)
        if t is None:
            return None
        return sum(w * ti for w, ti in zip(self._weights, t)) % self.order

    def eval(self, k: int) -> CycElem:
        """chi(k) as an exact element of Q(zeta_m); zero off the units."""
        e = self.value_exponent(k)
        if e is None:
            return CycElem.zero(self.order)
        return CycElem.zeta(self.order, e)

    def parity(self) -> int:
        """chi(-1), i.e. +1 for even characters and -1 for odd ones."""
        e = self.value_exponent(self.modulus - 1)
        if e == 0:
            return 1
        if 2 * e != self.order:
            raise ArithmeticError("chi(-1) is not +-1")
        return -1

    def conjugate(self) -> "DirichletCharacter":
        """The complex-conjugate character (negated exponent vector)."""
        return DirichletCharacter(self.group, tuple(-e for e in self.exponents))

    def conductor(self) -> int:
        """Smallest f | n with chi trivial on units congruent to 1 mod f."""
        if self._conductor is None:
            n = self.modulus
            for f in divisors(n):
                if all(
                    self.value_exponent(k) == 0
                    for k in units(n)
                    if k % f == 1 % f
                ):
                    self._conductor = f
                    break
        return self._conductor

    def primitive_part(self) -> "DirichletCharacter":
        """The primitive character mod conductor(chi) inducing chi."""
        if self._primitive is None:
            f = self.conductor()
            gf = character_group(f)
            exps = []
            for comp in gf.components:
                g = comp.generator_mod_n
                k = next(
                    k for k in range(g, g + self.modulus + 1, f)
                    if math.gcd(k, self.modulus) == 1
                )
                e = self.value_exponent(k)
                if (e * comp.order) % self.order:
                    raise ArithmeticError("incompatible component order")
                exps.append((e * comp.order // self.order) % comp.order)
            self._primitive = DirichletCharacter(gf, tuple(exps))
        return self._primitive

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and other.modulus == self.modulus
            and other.exponents == self.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return "DirichletCharacter(modulus=%d, exponents=%s)" % (
            self.modulus,
            self.exponents,
        )


def enumerate_characters(n: int) -> list[DirichletCharacter]:
    """All phi(n) characters mod n, in lexicographic exponent order.

    Index 0 is the principal character.
    """
    if n < 2:
        raise ValueError("character enumeration needs n >= 2")
    g = character_group(n)
    return [
        DirichletCharacter(g, exps)
        for exps in itertools.product(*(range(c.order) for c in g.components))
    ]


@lru_cache(maxsize=None)
def gauss_sum(chi: DirichletCharacter) -> CycElem:
    """tau(chi) = sum_{k=1}^{f} chi(k) zeta_f^k for chi primitive mod f.

    The result lives in Q(zeta_lcm(f, m)).  Non-primitive characters are
    rejected; pass primitive_part() first.
    """
    f = chi.modulus
    if chi.conductor() != f:
        raise ValueError("gauss_sum needs a primitive character")
    m = chi.order
    J = math.lcm(f, m)
    vec = [0] * J
    for k in units(f):
        e = chi.value_exponent(k)
        vec[((J // m) * e + (J // f) * k) % J] += 1
    return CycElem.from_polynomial(J, vec)

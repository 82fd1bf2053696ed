import math

import pytest

from charcoords.arith import units
from charcoords.characters import (
    character_group,
    enumerate_characters,
    gauss_sum,
)
from charcoords.cyclotomic import CycElem, to_common_order


def test_enumeration_counts():
    assert len(enumerate_characters(4)) == 2
    assert len(enumerate_characters(2)) == 1
    assert sorted(chi.order for chi in enumerate_characters(5)) == [1, 2, 4, 4]
    for n in range(2, 31):
        chars = enumerate_characters(n)
        assert len(chars) == len(set(chars)) == len(units(n))
        assert chars[0].is_principal
        assert [chi.index for chi in chars] == list(range(len(chars)))
    with pytest.raises(ValueError):
        enumerate_characters(1)


def test_eval_basics():
    for n in (4, 5, 12):
        for chi in enumerate_characters(n):
            assert chi.eval(1) == CycElem.one(chi.order)
    chi = enumerate_characters(4)[1]
    assert chi.eval(3) == CycElem.from_rational(-1, 2)
    assert chi.eval(2).is_zero
    assert chi.eval(7) == chi.eval(3)  # periodic mod n


def test_multiplicativity():
    for n in range(2, 31):
        for chi in enumerate_characters(n):
            for k in units(n):
                for l in units(n):
                    lhs = chi.eval(k) * chi.eval(l)
                    assert lhs == chi.eval((k * l) % n)


def test_value_order():
    for n in (5, 7, 8, 12):
        for chi in enumerate_characters(n):
            m = chi.order
            assert chi.value_order == m
            for k in units(n):
                assert chi.eval(k) ** m == CycElem.one(m)


def test_orthogonality():
    # sum over all chi of chi(k) is phi(n) at k = 1 mod n, else 0
    for n in range(2, 21):
        chars = enumerate_characters(n)
        L = math.lcm(*[chi.order for chi in chars])
        for k in units(n):
            total = CycElem.zero(L)
            for chi in chars:
                total = total + chi.eval(k).embed(L)
            if k % n == 1 % n:
                assert total == CycElem.from_rational(len(chars), L)
            else:
                assert total.is_zero


def test_parity():
    for n in range(2, 25):
        assert enumerate_characters(n)[0].parity() == 1
    assert enumerate_characters(4)[1].parity() == -1
    quad = enumerate_characters(5)[2]
    assert quad.order == 2 and quad.parity() == 1


def test_conductor():
    for n in (4, 6, 9, 12, 30):
        assert enumerate_characters(n)[0].conductor() == 1
    assert enumerate_characters(4)[1].conductor() == 4
    # mod 8 character with chi(5) = 1, chi(7) = -1 factors through mod 4
    for chi in enumerate_characters(8):
        values = (chi.eval(5), chi.eval(7))
        if values == (CycElem.one(chi.order), CycElem.from_rational(-1, chi.order)):
            assert chi.conductor() == 4


def test_primitive_part():
    triv = enumerate_characters(6)[0].primitive_part()
    assert triv.modulus == 1 and triv.order == 1
    assert triv.eval(17) == CycElem.one(1)
    chi4 = enumerate_characters(4)[1]
    assert chi4.primitive_part() == chi4
    for n in (8, 12, 15, 24):
        for chi in enumerate_characters(n):
            part = chi.primitive_part()
            f = chi.conductor()
            assert part.modulus == f
            assert part.conductor() == f  # primitive
            assert part.order == chi.order
            # values agree on residues coprime to n
            for k in units(n):
                assert part.eval(k) == chi.eval(k)


def test_conjugate_character():
    for n in (5, 7, 12):
        for chi in enumerate_characters(n):
            bar = chi.conjugate()
            for k in units(n):
                assert bar.eval(k) == chi.eval(k).conjugate()


def test_gauss_sum_examples():
    triv = enumerate_characters(4)[0].primitive_part()
    assert gauss_sum(triv) == CycElem.one(1)
    chi4 = enumerate_characters(4)[1]
    assert gauss_sum(chi4) == CycElem.from_polynomial(4, [0, 2])  # 2i
    quad5 = enumerate_characters(5)[2]
    tau = gauss_sum(quad5)
    # zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4, embedded into the field of tau
    expected = CycElem.from_polynomial(5, [0, 1, -1, -1, 1])
    a, b = to_common_order(tau, expected)
    assert a == b
    assert tau.complex_eval() == pytest.approx(math.sqrt(5), abs=1e-12)


def test_gauss_sum_rejects_imprimitive():
    with pytest.raises(ValueError):
        gauss_sum(enumerate_characters(4)[0])


def test_gauss_sum_conjugate_product():
    # tau(chi) tau(conj chi) = chi(-1) f for primitive chi, here f <= 15
    for f in range(1, 16):
        if f > 2 and f % 4 == 2:
            continue
        chars = enumerate_characters(f) if f >= 2 else []
        prims = [chi for chi in chars if chi.conductor() == f]
        for chi in prims:
            prod = gauss_sum(chi) * gauss_sum(chi.conjugate())
            assert prod == CycElem.from_rational(chi.parity() * f, prod.order)


def test_mod8_group_convention():
    g = character_group(8)
    assert [c.prime_power for c in g.components] == [8, 8]
    assert g.components[0].generator == 7  # -1 first
    assert g.components[1].generator == 5
    g9 = character_group(9)
    assert g9.components[0].generator == 2  # smallest primitive root mod 9


def test_principal_mod_2():
    chi = enumerate_characters(2)[0]
    assert chi.order == 1
    assert chi.eval(1) == CycElem.one(1)
    assert chi.eval(2).is_zero
    assert chi.parity() == 1
    assert chi.conductor() == 1

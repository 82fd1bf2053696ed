import math
from fractions import Fraction as F

import pytest

from charcoords.arith import euler_phi, units
from charcoords.characters import enumerate_characters, gauss_sum
from charcoords.coordinates import (
    CoordReport,
    coord_cotangent_closed,
    coord_definitional,
    coord_one,
    coord_power_closed,
    coord_power_primitive,
    direct_sum_float,
    reconstruct,
)
from charcoords.cotangent import cotangent_number, icot_power, icot_value
from charcoords.cyclotomic import CycElem, to_common_order


def test_definitional_of_one_is_phi_for_principal():
    for n in (3, 4, 6, 10, 12):
        chi0 = enumerate_characters(n)[0]
        assert coord_definitional(chi0, CycElem.one(n)) == CycElem.from_rational(
            euler_phi(n), 1
        )


def test_definitional_mod4_icot():
    chi = enumerate_characters(4)[1]
    assert coord_definitional(chi, icot_value(4)) == CycElem.one(2)


def test_definitional_vanishes_for_odd_chi_on_reals():
    for n in (4, 5, 8, 12):
        for chi in enumerate_characters(n):
            if chi.parity() == -1:
                assert coord_definitional(chi, CycElem.one(n)).is_zero


def test_definitional_complex_character_regression():
    # order-4 character mod 5 with chi(2) = zeta_4; the coordinate of
    # i*cot(pi/5) is (6 + 2*zeta_4)/5, fixed by an independent hand
    # computation of the defining sum and of tau
    chi = enumerate_characters(5)[1]
    assert chi.eval(2) == CycElem.zeta(4)
    y = coord_definitional(chi, icot_value(5))
    assert y == CycElem(4, (F(6, 5), F(2, 5)))
    ybar = coord_definitional(chi.conjugate(), icot_value(5))
    assert ybar == CycElem(4, (F(6, 5), F(-2, 5)))


def test_definitional_rejects_order_mismatch():
    chi = enumerate_characters(4)[1]
    with pytest.raises(ValueError):
        coord_definitional(chi, CycElem.one(8))


def test_gauss_inverse_shortcut_matches_euclid():
    # the definitional path multiplies by inverse(embed(tau(conj(chi)_f), L)),
    # realized as chi(-1)/f * tau(chi_f); pin that against the extended
    # Euclid inverse of the embedded Gauss sum
    for n, idx in ((4, 1), (5, 1), (5, 2), (7, 3), (12, 2)):
        chi = enumerate_characters(n)[idx]
        chif = chi.primitive_part()
        f = chif.modulus
        taubar = gauss_sum(chif.conjugate())
        tau = gauss_sum(chif)
        L = math.lcm(n, chi.order, taubar.order)
        assert taubar.embed(L).inverse() == tau.embed(L) * F(chi.parity(), f)


def test_definitional_is_linear():
    chi = enumerate_characters(5)[1]
    a = icot_value(5)
    b = icot_power(3, 5)
    lhs = coord_definitional(chi, a + b * F(2, 3))
    assert lhs == coord_definitional(chi, a) + coord_definitional(chi, b) * F(2, 3)


def test_definitional_galois_equivariance():
    # y(chi | sigma_k(a)) = chi(k) y(chi | a)
    for n in range(2, 21):
        a = icot_value(n)
        for chi in enumerate_characters(n):
            base = coord_definitional(chi, a)
            for k in units(n):
                assert coord_definitional(chi, a.galois(k)) == chi.eval(k) * base


def test_coord_one():
    assert coord_one(enumerate_characters(6)[0]) == CycElem.from_rational(2, 1)
    assert coord_one(enumerate_characters(4)[0]) == CycElem.from_rational(2, 1)
    for chi in enumerate_characters(12)[1:]:
        assert coord_one(chi).is_zero


def test_cotangent_closed_examples():
    chi = enumerate_characters(4)[1]
    # parity mismatch: even chi with odd j and vice versa give exact zero
    chi0 = enumerate_characters(4)[0]
    assert coord_cotangent_closed(chi0, 1).is_zero
    assert coord_cotangent_closed(chi, 2).is_zero
    # chi nontrivial mod 4, j = 1: chi(-1) (2n)/f * B_{1,chi} = (-1)*2*(-1/2) = 1
    assert coord_cotangent_closed(chi, 1) == CycElem.one(2)
    # quadratic character mod 5, j = 2: matches the definitional path
    quad = enumerate_characters(5)[2]
    assert coord_cotangent_closed(quad, 2) == coord_definitional(
        quad, cotangent_number(2, 5)
    )


def test_power_closed_examples():
    chi = enumerate_characters(4)[1]
    assert coord_power_closed(chi, 1) == coord_definitional(chi, icot_power(1, 4))
    assert coord_power_closed(chi, 1) == CycElem.one(2)
    chi0 = enumerate_characters(4)[0]
    # i^2 cot^2(pi/4) = -1, so the definitional value is -phi(4) = -2
    assert coord_definitional(chi0, icot_power(2, 4)) == CycElem.from_rational(-2, 1)
    assert coord_power_closed(chi0, 2) == CycElem.from_rational(-2, 1)
    assert coord_power_closed(chi0, 3).is_zero  # parity mismatch


def test_power_primitive_examples():
    chi = enumerate_characters(4)[1]
    assert coord_power_primitive(chi, 1) == CycElem.one(2)
    assert coord_power_primitive(chi, 3) == coord_definitional(chi, icot_power(3, 4))
    assert coord_power_primitive(chi, 2).is_zero  # parity mismatch
    chi0 = enumerate_characters(4)[0]
    with pytest.raises(ValueError):
        coord_power_primitive(chi0, 2)  # imprimitive


def test_imprimitive_euler_factors():
    # conductor-4 characters mod 12 exercise the Euler product over 2 and 3
    for chi in enumerate_characters(12):
        if chi.conductor() == 4:
            for j in (1, 3):
                closed = coord_cotangent_closed(chi, j)
                assert closed == coord_definitional(chi, cotangent_number(j, 12))
                if j == 1:
                    # chi(-1)*(24/4)*(1 - chibar_f(3)/3)*(-1/2) with chi(3)=-1
                    assert closed == CycElem.from_rational(4, 2)


def test_reconstruct_round_trip():
    for n in (4, 5, 12):
        chars = enumerate_characters(n)
        for a in (CycElem.one(n), icot_value(n), icot_power(2, n)):
            coords = {chi: coord_definitional(chi, a) for chi in chars}
            assert reconstruct(coords, n) == a


def test_reconstruct_rejects_missing():
    chars = enumerate_characters(5)
    coords = {chi: CycElem.zero(chi.order) for chi in chars[:-1]}
    with pytest.raises(ValueError):
        reconstruct(coords, 5)


def test_direct_sum_float():
    # matches complex_eval(y(conj chi | .) * tau(chi_f)) in double precision
    for n in (2, 4, 5, 7, 12):
        for r in (1, 2, 3):
            a = icot_power(r, n)
            for chi in enumerate_characters(n):
                left = direct_sum_float(chi, r)
                y = coord_definitional(chi.conjugate(), a)
                tau = gauss_sum(chi.primitive_part())
                yl, tl = to_common_order(y, tau)
                right = (yl * tl).complex_eval()
                assert abs(left - right) < 1e-8
    # even chi, odd power: the sum itself is (numerically) zero
    quad = enumerate_characters(5)[2]
    assert abs(direct_sum_float(quad, 1)) < 1e-9
    principal2 = enumerate_characters(2)[0]
    assert abs(direct_sum_float(principal2, 1)) < 1e-12


def test_direct_sum_float_high_precision():
    chi = enumerate_characters(5)[1]
    lo = direct_sum_float(chi, 2)
    hi = direct_sum_float(chi, 2, precision=100)
    assert abs(lo - complex(hi)) < 1e-12


def test_coord_report():
    chi = enumerate_characters(4)[1]
    value = coord_definitional(chi, icot_value(4))
    report = CoordReport(4, 1, 1, "definitional", value, value.complex_eval())
    data = report.to_json_dict()
    assert data["value"] == {"order": 2, "coeffs": ["1"]}
    assert data["float"]["re"] == pytest.approx(1.0)
    # the value lies in the field of values: its order divides the character order
    assert chi.order % data["value"]["order"] == 0
    with pytest.raises(ValueError):
        CoordReport(4, 1, 1, "bogus", value)

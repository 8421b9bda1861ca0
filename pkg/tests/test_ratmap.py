from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from critfilt.errors import ConstantMap, DegenerateParameter, OutOfRange
from critfilt.exactnum import Poly, RatFunc, Surd
from critfilt.ratmap import (
    Moebius,
    RatMap,
    critical_data,
    deg3_family,
    deg4_involution,
    deg4_normal_form,
    deg4_weight_action,
    degree,
    divisor,
    filtration_level,
    hurwitz_dims,
    moebius_post,
    moebius_pre,
    oo,
)

z = Poly([0, 1])


def crit_set(R):
    return set(critical_data(R).values())


def test_degree_examples():
    assert degree(RatMap(z ** 5)) == 5
    assert degree(deg3_family()) == 3
    n = Poly([8, 20, 15, 7])
    assert degree(RatMap(n * n, Poly([1, 1]) ** 5 * 64)) == 6
    with pytest.raises(ConstantMap):
        RatMap(z * z, z * z)


def test_power_map_has_two_critical_values():
    for d in range(2, 7):
        assert crit_set(RatMap(z ** d)) == {Fraction(0), oo}
    assert filtration_level(RatMap(z)) == 0


def test_belyi_member_of_cubic_family():
    R9 = deg3_family(9)
    assert crit_set(R9) == {Fraction(0), Fraction(-1, 27), oo}
    assert filtration_level(R9) == 3
    # R9 + 1/27 = (3z+1)^3 / (27 (9z+1))
    assert RatMap(R9.num + R9.den * Fraction(1, 27), R9.den) == RatMap(Poly([1, 3]) ** 3, Poly([1, 9]) * 27)


def test_generic_cubic_family_quadratic():
    lam = RatFunc.gen("l")
    cd = critical_data(deg3_family(lam))
    quad = Poly([4, lam * lam + 18 * lam - 27, 4 * lam ** 3])
    assert cd.finite_poly == (z * quad).monic()
    assert cd.infinity


def test_fried_level_at_five():
    assert filtration_level(deg3_family(5)) == 4


def test_degenerate_parameters():
    with pytest.raises(DegenerateParameter):
        deg3_family(1)
    with pytest.raises(DegenerateParameter):
        deg3_family(0)


def test_moebius_actions():
    T = Moebius(0, 1, 1, 0)
    assert moebius_post(T, RatMap(z * z)) == RatMap(Poly([1]), z * z)
    R9 = deg3_family(9)
    shift = Moebius(1, -1, 0, 1)
    moved = moebius_post(shift, R9)
    assert crit_set(moved) == {shift(v) for v in crit_set(R9)}
    pre = moebius_pre(R9, Moebius(1, 1, 1, -2))
    assert crit_set(pre) == crit_set(R9)


def test_divisor_of_genus0_base_function():
    n = Poly([1125, -700, 108])
    beta = RatMap(Poly([0, -1]) * n * n, Poly([-3, 1]) ** 3 * 50000)
    D = divisor(beta).as_dict()
    r = Surd(Fraction(175, 54), Fraction(5, 54), 10)
    assert D == {Fraction(0): 1, r: 2, r.conjugate(): 2, Fraction(3): -3, oo: -2}
    D1 = divisor(RatMap(beta.num - beta.den, beta.den)).as_dict()
    assert D1 == {Fraction(5, 2): 4, Fraction(80, 27): 1, Fraction(3): -3, oo: -2}


def test_weight_action_and_involution():
    assert deg4_weight_action(1, (1, 2, 3, 4)) == (1, 2, 3, 4)
    assert deg4_involution(deg4_involution((1, 2, 3, 4))) == (1, 2, 3, 4)
    mu = Fraction(2)
    new = deg4_weight_action(mu, (1, 1, 1, 1))
    assert new == (2, 4, Fraction(1, 4), Fraction(1, 2))
    R = deg4_normal_form(1, 1, 1, 1)
    # mu^4 R(z / mu)
    scaled = RatMap(R.num.compose(z * (1 / mu)) * mu ** 4, R.den.compose(z * (1 / mu)))
    assert deg4_normal_form(*new) == scaled
    inv = deg4_normal_form(*deg4_involution((1, 2, 3, 4)))
    R = deg4_normal_form(1, 2, 3, 4)
    flipped = RatMap(R.den.reverse(4), R.num.reverse(4))  # 1 / R(1/z)
    assert inv == flipped


def test_hurwitz_dims():
    assert hurwitz_dims(3, 0) == (4, 1)
    assert hurwitz_dims(4, 0) == (6, 3)
    assert hurwitz_dims(3, 1) == (6, 3)
    with pytest.raises(OutOfRange):
        hurwitz_dims(2, 0)
    with pytest.raises(OutOfRange):
        hurwitz_dims(4, 2)


# -- properties ---------------------------------------------------------------

coef = st.integers(-4, 4)


@st.composite
def maps(draw):
    dn = draw(st.integers(0, 3))
    dd = draw(st.integers(0, 3))
    num = Poly(draw(st.lists(coef, min_size=dn, max_size=dn)) + [draw(coef.filter(bool))])
    den = Poly(draw(st.lists(coef, min_size=dd, max_size=dd)) + [draw(coef.filter(bool))])
    R = RatMap(num, den, allow_constant=True)
    assume(not R.is_constant())
    return R


@settings(max_examples=200, deadline=None)
@given(maps())
def test_count_is_never_one(R):
    n = critical_data(R).count
    assert n != 1
    assert (n == 0) == (R.degree == 1)


@settings(max_examples=200, deadline=None)
@given(maps())
def test_two_values_means_total_ramification(R):
    cd = critical_data(R)
    if cd.count == 2:
        parts = [p for _, p in cd.factors] + ([cd.infinity_partition] if cd.infinity else [])
        assert all(p == (R.degree,) for p in parts)


@settings(max_examples=200, deadline=None)
@given(maps(), st.integers(1, 7))
def test_rescaling_keeps_critical_data(R, k):
    cd1 = critical_data(R)
    cd2 = critical_data(RatMap(R.num * k, R.den * k))
    assert cd1.finite_poly == cd2.finite_poly and cd1.infinity == cd2.infinity


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4), st.lists(st.integers(-6, 6), max_size=4),
       st.integers(1, 5))
def test_divisor_sums_to_zero(zeros, poles, scale):
    num = Poly([scale])
    for r in zeros:
        num = num * (z - r)
    den = Poly([1])
    for r in poles:
        den = den * (z - r)
    R = RatMap(num, den, allow_constant=True)
    assume(not R.is_constant())
    D = divisor(R)
    assert D.degree() == 0
    assert sum(m for _, m in D.positive_part()) == R.degree

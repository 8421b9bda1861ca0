import random
from fractions import Fraction

import pytest

from critfilt.errors import DegenerateParameter, DegreeMismatch, VZeroPath
from critfilt.exactnum import Poly, RatFunc
from critfilt.friedbase import family_critical_data
from critfilt.hypercurve import (
    HyperCurve,
    HyperMap,
    birch_pair,
    builtin_families,
    critical_values,
    d3g1,
    d5g2,
    fermat_hyper,
    fiber_polynomial,
    legendre,
    passport,
    riemann_hurwitz_check,
    riemann_hurwitz_from,
)
from critfilt.ratmap import oo

x = Poly([0, 1])


def values(phi):
    return set(critical_values(phi).values())


def test_fiber_polynomial_cubic_family():
    k = RatFunc.gen("k")
    fd = fiber_polynomial(d3g1(k))
    c = Fraction(5, 3)
    # c^2 + 2c(kx + 1) - x^3/27
    expected = Poly([c * c + 2 * c, 2 * c * k, 0, Fraction(-1, 27)])
    assert fd.at(c) == expected
    assert fd.generic_degree == 3 and fd.infinity_bookkeeping == 0


def test_fiber_polynomial_fermat_g1():
    fd = fiber_polynomial(fermat_hyper(1))
    c = Fraction(7)
    assert fd.at(c) == Poly([c * c - 1, 0, 0, 1])
    assert fd.generic_degree == 3


def test_fiber_polynomial_genus2_family_cancels():
    phi = d5g2(Fraction(3))
    fd = fiber_polynomial(phi)
    assert fd.generic_degree == 5
    assert (phi.u * phi.u).degree == 10  # the x^10 and x^6 * x^4 terms cancel


def test_v_zero_path():
    with pytest.raises(VZeroPath):
        fiber_polynomial(legendre(Fraction(5)))


def test_degree_mismatch_reported():
    with pytest.raises(DegreeMismatch):
        fiber_polynomial(HyperMap(HyperCurve(Poly([1, 0, 0, -1])), Poly(), Poly([1]), declared_degree=4))


def test_cubic_family_generic_values():
    k = RatFunc.gen("k")
    cd = critical_values(d3g1(k))
    assert cd.infinity
    assert cd.finite_poly == (x * Poly([4, -(32 * k ** 3 - 4), 1])).monic()


def test_legendre_values():
    t = Fraction(5)
    assert values(legendre(t)) == {Fraction(0), Fraction(1), t, oo}


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_fermat_family(g):
    phi = fermat_hyper(g)
    assert phi.degree == 2 * g + 1
    assert values(phi) == {Fraction(1), Fraction(-1), oo}
    rep = riemann_hurwitz_check(phi)
    assert rep.passed
    assert 2 * g + 1 == 2 * g - 2 + sum(rep.alphas)


def test_fermat_g1_passport():
    pp = passport(fermat_hyper(1))
    assert pp[Fraction(1)] == (3,) and pp[Fraction(-1)] == (3,) and pp[oo] == (3,)
    assert pp["generic"] == (1, 1, 1)


def test_cubic_family_at_zero_is_belyi():
    phi = d3g1(Fraction(0))
    pp = passport(phi)
    assert pp[Fraction(0)] == (3,)
    assert len(pp) - 1 == 3
    assert riemann_hurwitz_check(phi).passed


def test_power_map_riemann_hurwitz():
    # two totally ramified values: -2 = -2d + 2(d - 1), genus 0
    for d in range(2, 6):
        assert riemann_hurwitz_from(d, 0, [(d,), (d,)]).passed


def test_birch_pair_and_family_point():
    phi = birch_pair()
    assert phi.degree == 5
    cd = critical_values(phi)
    assert cd.count == 3
    assert riemann_hurwitz_check(phi).passed
    member = builtin_families()["d5g2"].at(-2)
    assert critical_values(member).count == 3
    assert riemann_hurwitz_check(member).passed


def test_registry_domains():
    fams = builtin_families()
    assert isinstance(fams["d3g1"].at(1), HyperMap)
    for k in range(-20, 21):
        fams["d3g1"].at(Fraction(k, 3))  # 4k^3 = 1 has no rational root
    with pytest.raises(DegenerateParameter):
        fams["sekividu"].at(3)
    with pytest.raises(DegenerateParameter):
        fams["legendre"].at(1)


@pytest.mark.parametrize("name", ["d3g0", "d3g1", "sekividu", "legendre"])
def test_members_are_fried(name):
    fam = builtin_families()[name]
    rng = random.Random(7)
    seen = 0
    while seen < 20:
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        try:
            member = fam.at(a)
        except DegenerateParameter:
            continue
        cd = family_critical_data(member)
        assert cd.count <= 4
        seen += 1


def test_genus2_members_are_fried():
    fam = builtin_families()["d5g2"]
    for a in (Fraction(1), Fraction(3), Fraction(-1, 2), Fraction(7, 3)):
        assert family_critical_data(fam.at(a)).count <= 4

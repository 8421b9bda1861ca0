from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critfilt.errors import MixedRadicand, ZeroPolynomial
from critfilt.exactnum import (
    AlgExt,
    Poly,
    RatFunc,
    Surd,
    discriminant,
    locate_roots,
    over_each_root,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    sylvester_matrix,
)
from critfilt.exactnum.algext import zero_test

x = Poly([0, 1])


def det(rows):
    """Cofactor expansion: slow, but shares no code with the library."""
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * a * det(minor)
    return total


small = st.integers(-5, 5)


@st.composite
def polys(draw, min_deg=0, max_deg=4):
    deg = draw(st.integers(min_deg, max_deg))
    cs = draw(st.lists(small, min_size=deg, max_size=deg))
    lead = draw(st.integers(-4, 4).filter(bool))
    return Poly(cs + [lead])


# -- gcd ------------------------------------------------------------------


def test_gcd_examples():
    assert poly_gcd(x * x - 1, x - 1) == x - 1
    assert poly_gcd(x * x + 1, x - 1) == Poly([1])
    assert poly_gcd((x - 2) ** 3 * (x + 1), (x - 2) * (x + 5)) == x - 2
    assert poly_gcd(Poly(), Poly()) == Poly()


@settings(max_examples=200)
@given(polys(0, 4), polys(0, 4), polys(1, 3))
def test_gcd_contains_common_factor(p, q, r):
    g = poly_gcd(p * r, q * r)
    assert (g % r.monic()).is_zero()
    assert g.lc == 1


# -- squarefree -----------------------------------------------------------


def test_squarefree_examples():
    assert squarefree_decomposition((x - 1) ** 2 * (x + 2)) == [(x + 2, 1), (x - 1, 2)]
    assert squarefree_decomposition(x ** 3) == [(x, 3)]
    R = Poly([1, 54, 729])
    assert squarefree_decomposition(R) == [(Poly([Fraction(1, 27), 1]), 2)]
    with pytest.raises(ZeroPolynomial):
        squarefree_decomposition(Poly())


@settings(max_examples=200)
@given(st.lists(st.tuples(polys(1, 2), st.integers(1, 3)), min_size=1, max_size=3))
def test_squarefree_reassembles(parts):
    p = Poly([1])
    for f, m in parts:
        p = p * f ** m
    rebuilt = Poly([1])
    for f, m in squarefree_decomposition(p):
        assert f.lc == 1
        assert poly_gcd(f, f.derivative()).degree == 0
        rebuilt = rebuilt * f ** m
    assert rebuilt == p.monic()


@settings(max_examples=200)
@given(polys(1, 5))
def test_discriminant_zero_iff_repeated_factor(p):
    repeated = any(m >= 2 for _, m in squarefree_decomposition(p))
    assert (discriminant(p) == 0) == repeated


# -- resultant and discriminant ------------------------------------------


def test_resultant_examples():
    a, b = Fraction(3), Fraction(-7, 2)
    assert resultant(x - a, x - b) == a - b
    assert resultant(x * x - 2, x * x - 3) == 1
    c = RatFunc.gen("c")
    assert resultant(Poly([-c, 0, 1]), Poly([0, 2])) == -4 * c


def test_discriminant_examples():
    a, b, c = (RatFunc.gen("a"), Fraction(5), Fraction(-3))
    assert discriminant(Poly([c, b, a])) == b * b - 4 * a * c
    p, q = Fraction(2, 3), Fraction(-5)
    assert discriminant(Poly([q, p, 0, 1])) == -4 * p ** 3 - 27 * q ** 2
    lam = Fraction(9)
    quad = Poly([4, lam * lam + 18 * lam - 27, 4 * lam ** 3])
    assert discriminant(quad) == 0


@settings(max_examples=200)
@given(polys(1, 4), polys(1, 4))
def test_resultant_matches_sylvester_determinant(p, q):
    assert resultant(p, q) == det(sylvester_matrix(p, q))


@settings(max_examples=200)
@given(polys(1, 4), polys(1, 4), polys(1, 3))
def test_resultant_identities(p, q, r):
    assert resultant(p, q) == (-1) ** (p.degree * q.degree) * resultant(q, p)
    assert resultant(p, q * r) == resultant(p, q) * resultant(p, r)
    assert (resultant(p, q) == 0) == (poly_gcd(p, q).degree >= 1)


@settings(max_examples=200)
@given(polys(1, 5))
def test_discriminant_definition(p):
    n = p.degree
    assert resultant(p, p.derivative()) == (-1) ** (n * (n - 1) // 2) * p.lc * discriminant(p)


# -- roots ----------------------------------------------------------------


def test_locate_roots_examples():
    s = Poly([1125, -700, 108])
    rep = locate_roots(s)
    assert not rep.unresolved
    pts = {r for r, _ in rep.points}
    assert pts == {Surd(Fraction(175, 54), Fraction(5, 54), 10), Surd(Fraction(175, 54), Fraction(-5, 54), 10)}
    assert locate_roots((x - 3) ** 3).points == [(Fraction(3), 3)]
    rep = locate_roots(x ** 3 - 2)
    assert rep.points == [] and rep.unresolved[0][0].degree == 3


@settings(max_examples=200)
@given(polys(1, 6))
def test_locate_roots_account_for_degree(p):
    rep = locate_roots(p)
    assert rep.total_degree() == p.degree
    for r, _ in rep.points:
        assert p(r) == 0


# -- surds and fields -----------------------------------------------------


def test_surd_arithmetic():
    r = Surd(1, 1, 2)
    assert r * r.conjugate() == -1
    assert (r * r) == Surd(3, 2, 2)
    assert (1 / r) * r == 1
    assert Surd.sqrt(Fraction(8, 9)) == Surd(0, Fraction(2, 3), 2)
    with pytest.raises(MixedRadicand):
        Surd(0, 1, 2) + Surd(0, 1, 3)


def test_ratfunc_normalisation():
    t = RatFunc.gen("t")
    r = (t * t - 1) / (t - 1)
    assert r == t + 1
    assert r.den == Poly([1])
    zero = t - t
    assert zero.num.is_zero() and zero.den == Poly([1])


def test_over_each_root_splits_when_fn_needs_it():
    # x^2 - 1 is reducible: asking whether the generic root is 1 forces a split
    calls = over_each_root(x * x - 1, lambda a: zero_test(a - 1))
    assert sorted((str(f), r) for f, r in calls) == [("x + 1", False), ("x - 1", True)]
    # an irreducible factor stays whole
    assert over_each_root(x * x - 2, lambda a: zero_test(a - 1)) == [(x * x - 2, False)]


def test_algext_inverse():
    a = AlgExt.generator(x * x - 2)
    assert (a * a) == 2
    assert (1 / (a + 1)) * (a + 1) == 1

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from critfilt.errors import CoincidentPoints, DegenerateSample, DegreeBudgetExceeded
from critfilt.exactnum import RatFunc
from critfilt.friedbase import (
    BOXED,
    Quadruple,
    beta_bas_exact,
    beta_bas_is_belyi,
    beta_bas_sampled_verify,
    cross_ratio,
    cross_ratio_exact,
    cross_ratio_orbit,
    exact_cost_estimate,
    fiber_levels_at_critical_points,
    j_at,
    j_inf_zero_pair,
    j_of_quadruple,
    j_of_s,
    j_of_t,
    k3_dependence,
    normalize_pair,
    sample_bound,
)
from critfilt.ratmap import Moebius, oo

F = Fraction


def test_cross_ratio_examples():
    assert cross_ratio(F(2), F(1), F(0), oo) == 2
    assert cross_ratio(oo, F(1), F(0), F(3)) == cross_ratio(F(0), F(3), oo, F(1))
    with pytest.raises(CoincidentPoints):
        cross_ratio(F(1), F(1), F(0), oo)


def test_cross_ratio_orbits():
    assert sorted(cross_ratio_orbit(F(-1))) == [F(-1), F(1, 2), F(2)]
    assert len(cross_ratio_orbit(F(3))) == 6
    assert len(set(j_of_t(t) for t in cross_ratio_orbit(F(3)))) == 1


def test_j_special_values():
    assert j_of_t(F(-1)) == 1728
    assert j_of_t(F(1, 2)) == 1728
    assert j_of_t(F(0)) is oo
    # primitive sixth root of unity is not rational; j = 0 appears via the s-form at s = 1
    assert j_of_s(F(1)) == 0


def test_s_formula_matches_t_formula():
    for t in (F(3), F(-2, 7), F(5, 4), F(11)):
        assert j_of_s(t + 1 / t) == j_of_t(t)


def test_quadruple_j_agrees_with_cross_ratio():
    t = F(7, 3)
    assert j_of_quadruple([t, F(1), F(0), oo]) == j_of_t(t)
    q = Quadruple([oo, F(0)], pair=(F(5), F(3)))
    assert q.j() == j_inf_zero_pair(F(5), F(3))


def test_pair_with_lambda_three_gives_j_zero():
    # critical values of the cubic family at l = 3: oo, 0 and the pair e1 = -1/3, e2 = 1/27
    assert j_inf_zero_pair(F(-1, 3), F(1, 27)) == 0
    assert j_at("d3g0", F(3))[0] == 0


def test_normalize_pair():
    # send 1 -> oo, 2 -> 0; the pair roots 3 and 5 go to 1/2 and 3/4
    e1, e2 = normalize_pair(F(1), F(2), F(8), F(15))
    assert (e1, e2) == (F(1, 2) + F(3, 4), F(1, 2) * F(3, 4))


points = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@settings(max_examples=200, deadline=None)
@given(st.lists(points, min_size=4, max_size=4, unique=True), st.integers(-3, 3), st.integers(-3, 3),
       st.integers(-3, 3), st.integers(-3, 3))
def test_j_is_moebius_invariant(pts, a, b, c, d):
    assume(a * d - b * c != 0)
    T = Moebius(a, b, c, d)
    assert j_of_quadruple(pts) == j_of_quadruple([T(p) for p in pts])


@settings(max_examples=200, deadline=None)
@given(st.lists(points, min_size=4, max_size=4, unique=True), st.permutations(range(4)))
def test_j_is_symmetric(pts, perm):
    assert j_of_quadruple(pts) == j_of_quadruple([pts[i] for i in perm])


@settings(max_examples=200, deadline=None)
@given(points)
def test_orbit_shares_j(t):
    assume(t not in (0, 1))
    assert {j_of_t(u) for u in cross_ratio_orbit(t)} == {j_of_t(t)}


# -- boxed formulas -----------------------------------------------------------


def test_legendre_exact_matches_boxed():
    res = beta_bas_exact("legendre")
    assert res.value == BOXED["legendre"].value


def test_d3g0_exact_matches_boxed_and_pair_route():
    res = beta_bas_exact("d3g0")
    assert res.value == BOXED["d3g0"].value
    assert res.routes_agree


def test_d3g1_exact_is_four_times_boxed():
    res = beta_bas_exact("d3g1")
    assert res.value == 4 * BOXED["d3g1"].value
    assert res.routes_agree


def test_sekividu_boxed_is_a_cross_ratio():
    cr = cross_ratio_exact("sekividu")
    assert cr == BOXED["sekividu"].value
    assert beta_bas_exact("sekividu").value == j_of_t(cr)


def test_cost_estimates_and_budget():
    assert exact_cost_estimate("d5g2") == 40
    assert exact_cost_estimate("d3g0") == 4
    with pytest.raises(DegreeBudgetExceeded):
        beta_bas_exact("d5g2", budget=10)


def test_legendre_base_is_belyi():
    rep = beta_bas_is_belyi(BOXED["legendre"])
    assert rep.is_belyi
    assert set(rep.values) == {F(0), F(1728), oo}


def test_k3_dependence():
    assert k3_dependence(BOXED["d3g1"])
    k = RatFunc.gen("k")
    assert not k3_dependence(BOXED["d3g1"].value * k)
    with pytest.raises(ValueError):
        k3_dependence(BOXED["d3g0"])


def test_genus2_critical_point_levels():
    rows = {r["point"]: r for r in fiber_levels_at_critical_points("d5g2", BOXED["d5g2"])}
    assert rows[F(-2)]["level"] == 3
    for p in (F(-5, 2), F(0), F(2)):
        assert rows[p]["status"].startswith("excluded")


def test_sample_bound():
    b = sample_bound("d5g2", BOXED["d5g2"].value)
    assert (b["n"], b["e"], b["delta"]) == (5, 5, 45)
    assert b["required"] == 571


def test_sampled_verify_rejects_perturbed_candidate():
    wrong = BOXED["legendre"].value + 1
    rep = beta_bas_sampled_verify("legendre", wrong, N=5)
    assert not rep.passed
    assert rep.failure is not None and rep.samples == 0


def test_sampled_verify_sekividu_cross_ratio():
    rep = beta_bas_sampled_verify("sekividu", BOXED["sekividu"], quantity="cross-ratio")
    assert rep.passed and rep.samples == rep.required


def test_degenerate_sample_reported():
    with pytest.raises(DegenerateSample):
        j_at("legendre", F(1))

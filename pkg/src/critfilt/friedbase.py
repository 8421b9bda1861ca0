"""Cross-ratios, j-invariants of four points, and the base Belyi function.

For a Fried family the four critical values of each member are a point
configuration on P1. Its j-invariant (the j of the double cover of P1
branched at the four points) is a single-valued rational function of the
parameter; that is the base function ``beta_bas`` computed here.
Nothing here extracts square roots: a four-point set is handled through
its binary quartic form, whose coefficients stay in Q(param).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    CoincidentPoints,
    DegenerateParameter,
    DegenerateSample,
    DegenerateValue,
    DegreeBudgetExceeded,
    NotFourValues,
)
from .exactnum import Poly, RatFunc, locate_roots, squarefree_decomposition
from .exactnum.ratfunc import common_denominator, sample_points
from .expr import to_ratfunc
from .hypercurve import Family, HyperMap, builtin_families, critical_values
from .ratmap import CriticalData, RatMap, critical_data, is_inf, oo

J_CONST = 256


# ---------------------------------------------------------------------------
# cross-ratio


def _distinct(points) -> None:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i], points[j]
            if is_inf(a) and is_inf(b):
                raise CoincidentPoints("two points at infinity")
            if not is_inf(a) and not is_inf(b) and a == b:
                raise CoincidentPoints(f"repeated point {a}")


def cross_ratio(a, b, c, d):
    """<a,b,c,d> = (a-c)/(b-c) * (b-d)/(a-d); the factors with an infinite argument cancel."""
    _distinct([a, b, c, d])
    if is_inf(a):
        return (b - d) / (b - c)
    if is_inf(b):
        return (a - c) / (a - d)
    if is_inf(c):
        return (b - d) / (a - d)
    if is_inf(d):
        return (a - c) / (b - c)
    return (a - c) / (b - c) * (b - d) / (a - d)


def cross_ratio_orbit(t) -> list:
    """The distinct values among t, 1/t, 1-t, 1/(1-t), t/(t-1), (t-1)/t."""
    if is_inf(t) or t == 0 or t == 1:
        raise DegenerateValue(f"cross-ratio {t} is degenerate")
    vals = [t, 1 / t, 1 - t, 1 / (1 - t), t / (t - 1), (t - 1) / t]
    out = []
    for v in vals:
        if v not in out:
            out.append(v)
    return out


def j_of_t(t):
    """256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2)."""
    if not is_inf(t) and (t == 0 or t == 1):
        return oo
    if is_inf(t):
        return oo
    return J_CONST * (t * t - t + 1) ** 3 / (t * t * (t - 1) ** 2)


def j_of_s(s):
    """256 (s - 1)^3 / (s - 2) where s = t + 1/t."""
    return J_CONST * (s - 1) ** 3 / (s - 2)


# ---------------------------------------------------------------------------
# four-point configurations


@dataclass
class Quadruple:
    """Four distinct points of P1: explicit points plus at most one conjugate pair.

    A conjugate pair r1, r2 (roots of x^2 - e1 x + e2) is kept as (e1, e2).
    """

    points: list = field(default_factory=list)
    pair: tuple | None = None

    def __post_init__(self):
        n = len(self.points) + (2 if self.pair else 0)
        if n != 4:
            raise NotFourValues(f"{n} points")
        _distinct(list(self.points))
        if self.pair is not None:
            e1, e2 = self.pair
            if e1 * e1 - 4 * e2 == 0:
                raise CoincidentPoints("the conjugate pair is a double point")
            for p in self.points:
                if not is_inf(p) and p * p - e1 * p + e2 == 0:
                    raise CoincidentPoints(f"{p} is a root of the pair")

    def binary_form(self) -> tuple:
        """(a, b, c, d, e) with a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4."""
        form = Poly([1])  # in x with y = 1; degree deficit = points at infinity
        for p in self.points:
            if not is_inf(p):
                form = form * Poly([-p, 1])
        if self.pair is not None:
            e1, e2 = self.pair
            form = form * Poly([e2, -e1, 1])
        cs = [form.coeff(i) for i in range(5)]
        return tuple(reversed(cs))

    def j(self):
        return j_of_binary_quartic(*self.binary_form())

    @classmethod
    def from_form(cls, form: Poly, infinity: bool) -> "Quadruple":
        """From the squarefree polynomial with the finite points as roots."""
        if form.degree + (1 if infinity else 0) != 4:
            raise NotFourValues(f"finite degree {form.degree}, infinity={infinity}")
        q = cls.__new__(cls)
        q.points, q.pair = ([oo] if infinity else []), None
        q._form = form.monic()
        return q


def j_of_binary_quartic(a, b, c, d, e):
    """j = 6912 I^3 / (4 I^3 - J^2) for the quartic's classical invariants."""
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3
    den = 4 * I ** 3 - J * J
    if den == 0:
        raise CoincidentPoints("the quartic has a repeated root")
    return 6912 * I ** 3 / den


def j_of_quadruple(q) -> object:
    """j-invariant of a Quadruple, or of a list of four P1 points."""
    if isinstance(q, (list, tuple)):
        q = Quadruple(list(q))
    form = getattr(q, "_form", None)
    if form is not None:
        cs = [form.coeff(i) for i in range(5)]
        return j_of_binary_quartic(*reversed(cs))
    return q.j()


def j_inf_zero_pair(e1, e2):
    """j of {oo, 0, r1, r2} with r1 + r2 = e1, r1 r2 = e2, via s = e1^2/e2 - 2."""
    if e2 == 0:
        raise CoincidentPoints("a root of the pair is 0")
    s = e1 * e1 / e2 - 2
    if s == 2:
        raise CoincidentPoints("the pair is a double root")
    return j_of_s(s)


def normalize_pair(a, b, e1, e2):
    """Send a -> oo and b -> 0 by z -> (z - b)/(z - a); return the image pair (e1', e2')."""
    den = e2 - a * e1 + a * a
    if den == 0:
        raise CoincidentPoints(f"{a} is a root of the pair")
    e1n = (2 * e2 - (a + b) * e1 + 2 * a * b) / den
    e2n = (e2 - b * e1 + b * b) / den
    return e1n, e2n


def quadruple_from_critical(cd: CriticalData) -> Quadruple:
    if cd.count != 4:
        raise NotFourValues(f"{cd.count} critical values")
    return Quadruple.from_form(cd.finite_poly, cd.infinity)


def symmetric_data(cd: CriticalData):
    """Critical data as (explicit points, pair) whenever the finite part splits as linear factors and one quadratic."""
    pts = [oo] if cd.infinity else []
    pair = None
    for f, _ in cd.factors:
        f = f.monic()
        if f.degree > 1 and f.coeff(0) == 0:
            pts.append(Fraction(0))
            f = Poly(f.coeffs[1:])
        if f.degree == 1:
            pts.append(-f.coeff(0))
        elif f.degree == 2 and pair is None:
            pair = (-f.coeff(1), f.coeff(0))
        else:
            return None
    return pts, pair


def j_via_pair_route(cd: CriticalData):
    """Independent j route: Moebius-normalise two explicit points to oo, 0 and use the s-formula."""
    sd = symmetric_data(cd)
    if sd is None or sd[1] is None or len(sd[0]) != 2:
        return None
    (p1, p2), (e1, e2) = sd
    if is_inf(p1) or is_inf(p2):
        a = p2 if is_inf(p1) else p1
        e1n, e2n = e1 - 2 * a, e2 - a * e1 + a * a  # shift a -> 0
        return j_inf_zero_pair(e1n, e2n)
    return j_inf_zero_pair(*normalize_pair(p1, p2, e1, e2))


# ---------------------------------------------------------------------------
# the families and their boxed formulas


@dataclass
class BoxedFormula:
    name: str
    symbol: str
    text: str
    excluded: str = ""
    normalization: str = "j"  # "j" or "cross-ratio"

    @property
    def value(self) -> RatFunc:
        return to_ratfunc(self.text, self.symbol)


_N32 = "(p^10-40*p^8-80*p^7+320*p^6+1088*p^5+320*p^4-1440*p^3+720*p^2+5120*p+4096)"

BOXED = {
    "d3g0": BoxedFormula("d3g0", "l", "(l-3)^3*(l^3-9*l^2+243*l-243)^3/((l-1)*(l-9)^3*l^6)", "l in {0, 1}"),
    "d3g1": BoxedFormula("d3g1", "k", "(256*k^6-64*k^3+1)^3/(k^3*(4*k^3-1))", "4k^3 = 1"),
    "d5g2": BoxedFormula("d5g2", "p", f"{_N32}^3/(p^4*(2*p+5)^6*(p^2-4*p-16)*(p-2)^3*(p+2)^5)"),
    "sekividu": BoxedFormula("sekividu", "s", "-s*(108*s^2-700*s+1125)^2/(50000*(s-3)^3)", "s = 3", "cross-ratio"),
    "legendre": BoxedFormula("legendre", "t", "256*(t^2-t+1)^3/(t^2*(t-1)^2)", "t in {0, 1}"),
}


def _family(family) -> Family:
    return builtin_families()[family] if isinstance(family, str) else family


def family_critical_data(member) -> CriticalData:
    if isinstance(member, HyperMap):
        return critical_values(member)
    return critical_data(member)


def _coeff_polys(member) -> list[Poly]:
    if isinstance(member, HyperMap):
        return [member.u, member.v, member.f]
    return [member.num, member.den]


def elimination_degrees(family) -> tuple[int, int]:
    """(n, e): generic fiber degree and the parameter degree of the fiber polynomial's coefficients."""
    fam = _family(family)
    g = fam.generic()
    if isinstance(g, HyperMap):
        E = g.u * g.u - g.v * g.v * g.f
        polys = [E, g.u * -2]
    else:
        polys = [g.num, g.den]
    sym = fam.symbol
    L = common_denominator(polys, sym)
    e = 0
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, RatFunc):
                scaled = c * RatFunc(L, symbol=sym)
                e = max(e, scaled.num.degree)
    e = max(e, L.degree)
    return g.degree, e


def exact_cost_estimate(family) -> int:
    """Parameter-degree estimate (2n - 2) e of the generic discriminant."""
    n, e = elimination_degrees(family)
    return (2 * n - 2) * e


def default_budget() -> int:
    return int(os.environ.get("CRITFILT_EXACT_BUDGET", "24"))


@dataclass
class BetaBasResult:
    family: str
    value: RatFunc
    critical: CriticalData
    estimate: int
    pair_route: object = None  # j from the s-formula route, when applicable

    @property
    def routes_agree(self) -> bool | None:
        return None if self.pair_route is None else self.pair_route == self.value


def beta_bas_exact(family, budget: int | None = None) -> BetaBasResult:
    """j(CritVal(Phi_param)) as an exact rational function of the parameter."""
    fam = _family(family)
    budget = default_budget() if budget is None else budget
    est = exact_cost_estimate(fam)
    if est > budget:
        raise DegreeBudgetExceeded(f"{fam.name}: estimated parameter degree {est} exceeds budget {budget}")
    cd = family_critical_data(fam.generic())
    if cd.count != 4:
        raise NotFourValues(f"{fam.name}: generic member has {cd.count} critical values")
    j = j_of_quadruple(quadruple_from_critical(cd))
    j = _as_ratfunc(j, fam.symbol)
    pr = j_via_pair_route(cd)
    return BetaBasResult(fam.name, j, cd, est, None if pr is None else _as_ratfunc(pr, fam.symbol))


def _as_ratfunc(x, symbol) -> RatFunc:
    if isinstance(x, RatFunc):
        return x if x.symbol == symbol or not x.is_constant() else RatFunc(x.num, x.den, symbol)
    return RatFunc(Poly([x]), symbol=symbol)


def j_at(family, value):
    """Exact j of the critical values of the member at a rational parameter value."""
    fam = _family(family)
    try:
        member = fam.at(value)
        cd = family_critical_data(member)
    except (DegenerateParameter, ZeroDivisionError) as exc:
        raise DegenerateSample(f"{fam.symbol}={value}: {exc}") from exc
    if cd.count != 4:
        raise DegenerateSample(f"{fam.symbol}={value}: {cd.count} critical values")
    return j_of_quadruple(quadruple_from_critical(cd)), cd


def cross_ratio_at(family, value):
    """<c, 1, 0, oo> for the member's critical value c outside {0, 1, oo}."""
    _, cd = j_at(family, value)
    others = [v for v in cd.values() if is_inf(v) or v not in (0, 1)]
    extra = [v for v in others if not is_inf(v)]
    if not cd.infinity or len(extra) != 1:
        raise NotFourValues("critical values are not {0, 1, oo, c}")
    return cross_ratio(extra[0], Fraction(1), Fraction(0), oo)


def cross_ratio_exact(family) -> RatFunc:
    """<c0, 1, 0, oo> for a family whose generic critical values are {0, 1, oo, c0(param)}."""
    fam = _family(family)
    cd = family_critical_data(fam.generic())
    roots = [-f.monic().coeff(0) for f, _ in cd.factors if f.degree == 1]
    if len(cd.factors) != 3 or len(roots) != 3 or not cd.infinity:
        raise NotFourValues(f"{fam.name}: generic critical values are not {{0, 1, oo, c0}}")
    fixed = [r for r in roots if _as_ratfunc(r, fam.symbol).is_constant()
             and _as_ratfunc(r, fam.symbol).constant_value() in (0, 1)]
    moving = [r for r in roots if all(r is not x for x in fixed)]
    if len(fixed) != 2 or len(moving) != 1:
        raise NotFourValues(f"{fam.name}: generic critical values are not {{0, 1, oo, c0}}")
    return _as_ratfunc(cross_ratio(moving[0], Fraction(1), Fraction(0), oo), fam.symbol)


@dataclass
class SampleReport:
    family: str
    candidate: str
    passed: bool
    samples: int
    required: int
    bound: dict
    skipped: list = field(default_factory=list)
    failure: object = None
    quantity: str = "j"


def sample_bound(family, candidate: RatFunc) -> dict:
    """Agreeing samples needed to certify j(param) = candidate.

    The generic critical-value polynomial divides disc_x(G_c) * lc(c), whose
    parameter degree is at most delta = (2n - 1) e, so the quartic form's
    coefficients have parameter degree <= delta and j = 6912 I^3/(4 I^3 - J^2)
    has numerator and denominator of degree <= 6 delta. The difference
    A*Q - B*P then has degree <= 6 delta + max(deg P, deg Q). Samples where
    the generic form degenerates (B = 0, at most 6 delta of them) can agree
    without being zeros of that difference, hence the extra 6 delta.
    """
    n, e = elimination_degrees(family)
    delta = (2 * n - 1) * e
    cand = max(candidate.num.degree, candidate.den.degree, 0)
    return {"n": n, "e": e, "delta": delta, "j_degree": 6 * delta, "candidate_degree": cand,
            "required": 12 * delta + cand + 1}


def beta_bas_sampled_verify(family, candidate, N: int | None = None, quantity: str = "j",
                            start: int = 0, stop_on_failure: bool = True, workers: int = 1) -> SampleReport:
    """Compare j(CritVal(Phi_param)) with ``candidate`` at N accepted rational samples."""
    fam = _family(family)
    cand = candidate.value if isinstance(candidate, BoxedFormula) else candidate
    label = candidate.text if isinstance(candidate, BoxedFormula) else str(candidate)
    bound = sample_bound(fam, cand)
    required = bound["required"]
    N = required if N is None else N
    evaluate = j_at if quantity == "j" else cross_ratio_at

    skipped, agreed, failure = [], 0, None
    gen = sample_points()
    for _ in range(start):
        next(gen)
    values = []
    for v in gen:
        if len(values) >= N + 4 * (len(skipped) + 1) + 16:
            break
        values.append(v)
    # evaluate lazily in order so that a failure is reported at the first bad sample
    results = _evaluate_many(evaluate, fam, values, workers)
    for v, res in zip(values, results):
        if agreed >= N:
            break
        if isinstance(res, Exception):
            skipped.append((v, str(res)))
            continue
        try:
            expect = cand.evaluate(v)
        except ZeroDivisionError:
            skipped.append((v, "candidate has a pole"))
            continue
        if res != expect:
            failure = {"value": v, "computed": res, "candidate": expect}
            if stop_on_failure:
                break
            continue
        agreed += 1
    passed = failure is None and agreed >= N and N >= required
    return SampleReport(fam.name, label, passed, agreed, required, bound, skipped, failure, quantity)


def _one(args):
    evaluate, name, v = args
    try:
        out = evaluate(name, v)
    except (DegenerateSample, NotFourValues, CoincidentPoints) as exc:
        return exc
    return out[0] if isinstance(out, tuple) else out


def _evaluate_many(evaluate, fam, values, workers):
    jobs = [(evaluate, fam.name, v) for v in values]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_one, jobs, chunksize=8))
    return _LazyMap(_one, jobs)


class _LazyMap:
    __slots__ = ("fn", "items")

    def __init__(self, fn, items):
        self.fn, self.items = fn, items

    def __iter__(self):
        for it in self.items:
            yield self.fn(it)


# ---------------------------------------------------------------------------
# Belyi checks on the base


@dataclass
class BelyiReport:
    name: str
    level: int
    values: list
    passport: dict

    @property
    def is_belyi(self) -> bool:
        return self.level <= 3


def as_map(formula) -> RatMap:
    r = formula.value if isinstance(formula, BoxedFormula) else formula
    return RatMap(r.num, r.den)


def beta_bas_is_belyi(formula) -> BelyiReport:
    R = as_map(formula)
    cd = critical_data(R)
    name = formula.name if isinstance(formula, BoxedFormula) else str(formula)
    return BelyiReport(name, cd.count, cd.values(), cd.passport())


def rational_critical_points(formula) -> list[tuple]:
    """Rational parameter values where the formula is ramified: (point, value, multiplicity)."""
    R = as_map(formula)
    cd = critical_data(R)
    out = []
    for val in cd.values():
        if is_inf(val):
            polys = [R.den]
            gap = R.num.degree - R.den.degree
            if gap >= 2:
                out.append((oo, oo, gap))
        else:
            polys = [R.num - R.den * val]
            gap = R.den.degree - R.num.degree if val == 0 else R.degree - (R.num - R.den * val).degree
            if gap >= 2:
                out.append((oo, val, gap))
        for P in polys:
            if P.degree < 1:
                continue
            for f, m in squarefree_decomposition(P):
                if m < 2:
                    continue
                for r, _ in locate_roots(f).points:
                    if isinstance(r, Fraction):
                        out.append((r, val, m))
    return sorted(out, key=lambda t: (is_inf(t[0]), t[0] if not is_inf(t[0]) else 0))


def fiber_levels_at_critical_points(family, formula) -> list[dict]:
    """For each rational critical point of the formula, #CritVal of the specialised family member."""
    fam = _family(family)
    rows = []
    for a, val, m in rational_critical_points(formula):
        row = {"point": a, "value": val, "multiplicity": m}
        if is_inf(a):
            row["status"] = "point at infinity of the base (not a rational member)"
        else:
            try:
                member = fam.at(a)
                row["level"] = family_critical_data(member).count
                row["status"] = "ok" if row["level"] <= 3 else "exceeds 3"
            except DegenerateParameter as exc:
                row["status"] = f"excluded: {exc}"
        rows.append(row)
    return rows


def k3_dependence(formula) -> bool:
    """Every exponent of k in the reduced numerator and denominator is divisible by 3."""
    r = formula.value if isinstance(formula, BoxedFormula) else formula
    if isinstance(formula, BoxedFormula) and formula.symbol != "k":
        raise ValueError(f"k^3 dependence applies to the k family, not {formula.name}")
    for p in (r.num, r.den):
        for i, c in enumerate(p.coeffs):
            if c != 0 and i % 3:
                return False
    return True

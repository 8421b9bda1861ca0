"""Functions Phi = u(x) + v(x) y on hyperelliptic curves y^2 = f(x).

A point (x0, y0) lies over the value c exactly when u(x0) + v(x0) y0 = c.
Where v(x0) != 0 that forces y0 = (c - u(x0)) / v(x0), so eliminating y
gives the fiber polynomial

    G_c(x) = (c - u(x))^2 - v(x)^2 f(x),

whose roots (with a little local bookkeeping at roots of v and of f) are
the fiber of Phi over c. Points over x = oo are handled by pole orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import BookkeepingFailure, ConstantMap, DegenerateParameter, DegreeMismatch, VZeroPath
from .exactnum import (
    Poly,
    RatFunc,
    discriminant,
    interpolate_function,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from .elim import fiber_candidates
from .exactnum.algext import ensure_unit
from .ratmap import CriticalData, RatMap, critical_record, deg3_family

INF = math.inf


class HyperCurve:
    """y^2 = f(x) with f squarefree of degree >= 3."""

    __slots__ = ("f",)

    def __init__(self, f: Poly, check: bool = True):
        if check:
            if f.degree < 3:
                raise ValueError(f"hyperelliptic model needs deg f >= 3, got {f.degree}")
            if poly_gcd(f, f.derivative()).degree > 0:
                raise DegenerateParameter(f"f = {f} is not squarefree")
        self.f = f

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2

    @property
    def points_at_infinity(self) -> int:
        return 1 if self.f.degree % 2 else 2

    def __repr__(self):
        return f"HyperCurve(y^2 = {self.f.format('x')})"


class HyperMap:
    """Phi = u + v*y on a HyperCurve."""

    __slots__ = ("curve", "u", "v", "declared_degree")

    def __init__(self, curve: HyperCurve, u: Poly, v: Poly, declared_degree: int | None = None):
        if v.is_zero() and u.degree < 1:
            raise ConstantMap("Phi is constant")
        self.curve, self.u, self.v = curve, u, v
        self.declared_degree = declared_degree

    @property
    def f(self) -> Poly:
        return self.curve.f

    def pole_orders(self) -> list[int]:
        """Orders of Phi at the points over x = oo (0 or negative means no pole there)."""
        u, v, f = self.u, self.v, self.f
        du = u.degree if not u.is_zero() else -INF
        if f.degree % 2:
            if v.is_zero():
                return [2 * du]
            return [max(2 * du, 2 * v.degree + f.degree)]
        m = f.degree // 2
        if v.is_zero():
            return [du, du]
        D = max(du, v.degree + m)
        if du == v.degree + m and u.lc ** 2 == v.lc ** 2 * f.lc:
            E = u * u - v * v * f
            other = E.degree - D if not E.is_zero() else -INF
            return [D, other]
        return [D, D]

    @property
    def degree(self) -> int:
        return int(sum(p for p in self.pole_orders() if p > 0))

    def format(self) -> str:
        s = self.u.format("x")
        if not self.v.is_zero():
            s += f" + ({self.v.format('x')})*y"
        return f"{s} on y^2 = {self.f.format('x')}"

    def __repr__(self):
        return f"HyperMap({self.format()})"

    def specialize(self, value) -> "HyperMap":
        spec = lambda p: p.map_coeffs(lambda c: c.evaluate(value) if isinstance(c, RatFunc) else c)
        return HyperMap(HyperCurve(spec(self.f)), spec(self.u), spec(self.v), self.declared_degree)


# ---------------------------------------------------------------------------
# elimination


@dataclass
class FiberData:
    """G_c(x) = c^2 - 2 c u(x) + (u^2 - v^2 f)(x)."""

    linear: Poly  # coefficient of c, namely -2u
    constant: Poly  # u^2 - v^2 f
    generic_degree: int
    infinity_bookkeeping: int
    declared_degree: int

    def at(self, c0) -> Poly:
        return self.constant + self.linear * c0 + c0 * c0

    def leading_in_c(self) -> Poly:
        """Coefficient of x^n in G_c, as a polynomial in c."""
        n = self.generic_degree
        return Poly([self.constant.coeff(n), self.linear.coeff(n), 1 if n == 0 else 0])

    def coefficient_polys(self) -> list[Poly]:
        """[coefficient of x^i as a polynomial in c for i = 0..n]."""
        return [
            Poly([self.constant.coeff(i), self.linear.coeff(i), 1 if i == 0 else 0])
            for i in range(self.generic_degree + 1)
        ]

    def format(self) -> str:
        terms = []
        for i, cp in enumerate(self.coefficient_polys()):
            if cp.is_zero():
                continue
            terms.append(f"({cp.format('c')})*x^{i}")
        return " + ".join(reversed(terms)) or "0"


def fiber_polynomial(phi: HyperMap) -> FiberData:
    if phi.v.is_zero():
        raise VZeroPath("v = 0: Phi factors through x; use the x-projection path")
    u, v, f = phi.u, phi.v, phi.f
    E = u * u - v * v * f
    n = max(u.degree if not u.is_zero() else 0, E.degree if not E.is_zero() else 0)
    d = phi.degree
    fd = FiberData(linear=u * -2, constant=E, generic_degree=n, infinity_bookkeeping=d - n, declared_degree=d)
    if phi.declared_degree is not None and phi.declared_degree != d:
        raise DegreeMismatch(f"declared degree {phi.declared_degree}, pole orders give {d}")
    if fd.infinity_bookkeeping != 0:
        raise DegreeMismatch(f"generic fiber has {n} finite points but the degree is {d}")
    return fd


# ---------------------------------------------------------------------------
# fibers


def _order_pieces(w: Poly, p: Poly) -> list[tuple[Poly, float]]:
    """Split squarefree ``w`` by the vanishing order of ``p`` at its roots."""
    out = []
    rem, q, j = w, p, 0
    while rem.degree >= 1:
        if q.is_zero():
            out.append((rem, INF))
            break
        g = poly_gcd(rem, q)
        h = rem // g if g.degree >= 1 else rem
        if h.degree >= 1:
            out.append((h, j))
        if g.degree < 1:
            break
        rem, q, j = g, q.derivative(), j + 1
    return out


def value_fiber_partition(phi: HyperMap, c0) -> tuple[int, ...]:
    """Ramification profile of Phi over the finite value c0 (possibly a generic root)."""
    d = phi.degree
    u, v, f = phi.u, phi.v, phi.f
    if v.is_zero():
        P = u - c0
        ensure_unit(P.lc)
        parts = []
        for g, i in squarefree_decomposition(P):
            h = poly_gcd(g, f)
            parts += [2 * i] * h.degree
            parts += [i, i] * (g.degree - h.degree)
        return _finish(parts, d)
    G = (u - c0) * (u - c0) - v * v * f
    if G.is_zero():
        raise BookkeepingFailure("G vanishes identically at this value")
    ensure_unit(G.lc)
    parts = []
    if G.degree >= 1:
        for g, i in squarefree_decomposition(G):
            h = poly_gcd(g, f)
            parts += [i] * h.degree  # branch points: a single point each
            rest = g // h if h.degree >= 1 else g
            w = poly_gcd(rest, v)
            parts += [i] * (rest.degree - max(w.degree, 0))
            if w.degree >= 1:
                # two points (x0, +-y0) where both terms of Phi - c0 vanish
                for pa, a in _order_pieces(w, u - c0):
                    for pb, b in _order_pieces(pa, v):
                        k = min(a, b)
                        if k < 1 or k == INF or i - k < 1:
                            raise BookkeepingFailure(f"unexpected local orders a={a}, b={b}, m={i}")
                        parts += [int(k), int(i - k)] * pb.degree
    gap = d - max(G.degree, 0)
    if gap < 0:
        raise BookkeepingFailure(f"fiber polynomial degree {G.degree} exceeds map degree {d}")
    if gap:
        parts.append(gap)
    return _finish(parts, d)


def _finish(parts, d) -> tuple[int, ...]:
    if sum(parts) != d:
        raise BookkeepingFailure(f"fiber profile {parts} does not sum to {d}")
    return tuple(sorted(parts, reverse=True))


def infinity_fiber_partition(phi: HyperMap) -> tuple[int, ...]:
    return tuple(sorted((p for p in phi.pole_orders() if p > 0), reverse=True))


def candidate_polynomial(phi: HyperMap) -> Poly:
    """A polynomial in c vanishing at every finite critical value."""
    u, v, f = phi.u, phi.v, phi.f
    if v.is_zero():
        def h(c):
            P = u - c
            return resultant(P, f) * (discriminant(P) if P.degree >= 2 else 1)
        return interpolate_function(h, f.degree + max(u.degree - 1, 0))
    fd = fiber_polynomial(phi)
    return fiber_candidates(fd.constant, fd.linear, Poly([1]), fd.generic_degree)


def critical_values(phi: HyperMap) -> CriticalData:
    return critical_record(
        phi.degree,
        candidate_polynomial(phi),
        lambda c0: value_fiber_partition(phi, c0),
        infinity_fiber_partition(phi),
    )


def passport(phi: HyperMap) -> dict:
    """Critical value -> partition, plus the key "generic" for the all-ones profile."""
    cd = critical_values(phi)
    out = cd.passport()
    out["generic"] = (1,) * cd.degree
    return out


@dataclass
class RHReport:
    degree: int
    genus: int
    counts: dict  # critical value -> number of points in its fiber
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def alphas(self) -> list[int]:
        return list(self.counts.values())


def riemann_hurwitz_from(d: int, g: int, partitions) -> RHReport:
    partitions = list(partitions)
    counts = {i: len(p) for i, p in enumerate(partitions)}
    ram = sum(d - len(p) for p in partitions)
    return RHReport(d, g, counts, 2 * g - 2, -2 * d + ram)


def riemann_hurwitz_check(phi: HyperMap) -> RHReport:
    """2g - 2 = -2d + sum over critical values of (d - #fiber)."""
    pp = passport(phi)
    pp.pop("generic")
    d = phi.degree
    rep = riemann_hurwitz_from(d, phi.curve.genus, pp.values())
    rep.counts = {k: len(p) for k, p in pp.items()}
    return rep


# ---------------------------------------------------------------------------
# families


@dataclass
class Family:
    """A one-parameter family of maps with a generic (symbolic) member."""

    name: str
    symbol: str
    kind: str  # "hyper" or "rational"
    builder: Callable  # parameter value (Fraction or RatFunc) -> HyperMap | RatMap
    domain: Callable = lambda value: True  # rational value -> bool
    excluded: str = ""
    notes: str = ""
    degree: int | None = None

    def generic(self):
        return self.builder(RatFunc.gen(self.symbol))

    def at(self, value):
        value = Fraction(value)
        if not self.domain(value):
            raise DegenerateParameter(f"{self.name}: {self.symbol}={value} is excluded ({self.excluded})")
        m = self.builder(value)
        if isinstance(m, HyperMap) and self.degree is not None and m.degree != self.degree:
            raise DegenerateParameter(f"{self.name}: degree drops at {self.symbol}={value}")
        if isinstance(m, RatMap) and self.degree is not None and m.degree != self.degree:
            raise DegenerateParameter(f"{self.name}: degree drops at {self.symbol}={value}")
        return m


def _P(*cs) -> Poly:
    return Poly(cs)


def fermat_hyper(g: int) -> HyperMap:
    """Phi = y on y^2 = 1 - x^(2g+1)."""
    f = Poly([1] + [0] * (2 * g) + [-1])
    return HyperMap(HyperCurve(f), Poly(), Poly([1]), declared_degree=2 * g + 1)


def legendre(t) -> HyperMap:
    f = Poly([0, 1]) * Poly([-1, 1]) * Poly([-t, 1])
    return HyperMap(HyperCurve(f, check=not isinstance(t, RatFunc)), Poly([0, 1]), Poly())


def d3g1(k) -> HyperMap:
    """Phi = y - kx - 1 on y^2 = (1 + kx)^2 + x^3/27."""
    lin = Poly([1, k])
    f = lin * lin + Poly([0, 0, 0, Fraction(1, 27)])
    return HyperMap(HyperCurve(f, check=not isinstance(k, RatFunc)), -lin, Poly([1]), declared_degree=3)


def birch_curve(p) -> Poly:
    """Sextic of the genus-2 family, read palindromically (z^5 and z carry the same coefficient)."""
    q = Fraction(17, 16) * p * p - Fraction(3, 2) * p
    e5 = -(Fraction(7, 2) * p + 4)
    e3 = -Fraction(1, 2) * p ** 3 + Fraction(7, 8) * p * p + 4 * p + 10
    return Poly([1, e5, q, e3, q, e5, 1])


def d5g2(p, quarter: bool = True) -> HyperMap:
    a = 15 * p + 20
    b = 10 * p * p + 20 * p + 20
    u = Poly([4, -a, b, b, -a, 4])
    v = Poly([4, -(12 + 8 * p), 4])
    if quarter:
        u, v = u * Fraction(1, 4), v * Fraction(1, 4)
    return HyperMap(HyperCurve(birch_curve(p), check=not isinstance(p, RatFunc)), u, v, declared_degree=5)


def birch_pair() -> HyperMap:
    """The degree-5 genus-2 Belyi pair written out directly, independent of the family."""
    f = Poly([1, 3, Fraction(29, 4), Fraction(19, 2), Fraction(29, 4), 3, 1])
    u = Poly([1, Fraction(5, 2), 5, 5, Fraction(5, 2), 1])
    v = Poly([1, 1, 1])
    return HyperMap(HyperCurve(f), u, v, declared_degree=5)


def sekividu(s) -> RatMap:
    """(s x^3 + 15 x^2 + 20 x + 8)^2 / (64 (x + 1)^5)."""
    n = Poly([8, 20, 15, s])
    return RatMap(n * n, Poly([1, 1]) ** 5 * 64)


def _hyper_ok(builder):
    def ok(value):
        try:
            builder(value)
        except DegenerateParameter:
            return False
        return True
    return ok


def builtin_families() -> dict[str, Family]:
    fams = [
        Family("d3g0", "l", "rational", deg3_family, domain=lambda l: l not in (0, 1), excluded="l in {0, 1}", degree=3),
        Family("d3g1", "k", "hyper", d3g1, domain=lambda k: 4 * k ** 3 != 1, excluded="4k^3 = 1", degree=3),
        Family("d5g2", "p", "hyper", d5g2, domain=_hyper_ok(d5g2), excluded="singular sextic", degree=5,
               notes="palindromic reading of the z^5 coefficient; Phi normalised by a factor 1/4"),
        Family("sekividu", "s", "rational", sekividu, domain=lambda s: s != 3, excluded="s = 3", degree=6),
        Family("legendre", "t", "hyper", legendre, domain=lambda t: t not in (0, 1), excluded="t in {0, 1}", degree=2),
    ]
    return {f.name: f for f in fams}

"""Rational maps P1 -> P1: degree, critical values, filtration level, Moebius actions.

Critical values are found by elimination: every finite critical value c is
a root of ``D(c) = disc_z(num - c*den)`` or of the leading coefficient of
``num - c*den`` (the fiber then reaches z = oo). That candidate set can
contain values whose fibers are actually smooth, so every squarefree
candidate factor is rechecked by computing the fiber partition at a generic
root of the factor (see :mod:`critfilt.exactnum.algext`).
"""

from __future__ import annotations

import math

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import BookkeepingFailure, ConstantMap, DegenerateParameter, OutOfRange, UnresolvedBlock
from .elim import fiber_candidates
from .exactnum import Poly, RatFunc, locate_roots, over_each_root, poly_gcd, squarefree_decomposition
from .exactnum.algext import ensure_unit
from .exactnum.ratfunc import common_denominator


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


oo = _Infinity()


def is_inf(p) -> bool:
    return p is oo


# ---------------------------------------------------------------------------
# Moebius transformations


class Moebius:
    """z -> (a z + b) / (c z + d), normalised so the first nonzero entry is 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = (Fraction(v) if isinstance(v, int) else v for v in (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("singular Moebius transformation")
        lead = next(v for v in (a, b, c, d) if v != 0)
        self.a, self.b, self.c, self.d = a / lead, b / lead, c / lead, d / lead

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return isinstance(other, Moebius) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __call__(self, z):
        a, b, c, d = self.entries()
        if is_inf(z):
            return oo if c == 0 else a / c
        den = c * z + d
        if den == 0:
            return oo
        return (a * z + b) / den

    def inverse(self) -> "Moebius":
        a, b, c, d = self.entries()
        return Moebius(d, -b, -c, a)

    def __matmul__(self, other: "Moebius") -> "Moebius":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Moebius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __repr__(self):
        return f"Moebius({self.a}, {self.b}, {self.c}, {self.d})"


# ---------------------------------------------------------------------------
# rational maps


class RatMap:
    """A reduced fraction num/den of polynomials, viewed as a map P1 -> P1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, allow_constant: bool = False):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den.monic()
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        num, den = num / lc, den / lc
        if not allow_constant and num.degree < 1 and den.degree < 1:
            raise ConstantMap(f"{num}/{den} is constant")
        self.num, self.den = num, den

    @classmethod
    def from_ratfunc(cls, r: RatFunc) -> "RatMap":
        return cls(r.num, r.den)

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_constant(self) -> bool:
        return self.num.degree < 1 and self.den.degree < 1

    def __eq__(self, other):
        return isinstance(other, RatMap) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, z):
        if is_inf(z):
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return oo
            if dn < dd:
                return Fraction(0)
            return self.num.lc / self.den.lc
        d = self.den(z)
        if d == 0:
            return oo
        return self.num(z) / d

    def format(self, var: str = "z") -> str:
        """Text in the expression grammar; rational coefficients are cleared to integers."""
        num, den = self.num, self.den
        coeffs = list(num.coeffs) + list(den.coeffs)
        if all(isinstance(c, Fraction) for c in coeffs):
            scale = math.lcm(*(c.denominator for c in coeffs))
            g = math.gcd(*(int(c * scale) for c in coeffs))
            num, den = num * Fraction(scale, g), den * Fraction(scale, g)
        else:
            sym = next(c.symbol for c in coeffs if isinstance(c, RatFunc))
            L = RatFunc(common_denominator([num, den], sym), symbol=sym)
            num, den = num * L, den * L
        n = num.format(var)
        if den == 1:
            return n
        d = den.format(var)
        return f"({n})/{d}" if den.degree == 0 else f"({n})/({d})"

    def __str__(self):
        return self.format("z")

    def __repr__(self):
        return f"RatMap({self.num!r}, {self.den!r})"

    def map_coeffs(self, fn: Callable) -> "RatMap":
        return RatMap(self.num.map_coeffs(fn), self.den.map_coeffs(fn))

    def specialize(self, value) -> "RatMap":
        """Substitute a rational value for the parameter of a parametric map."""
        return self.map_coeffs(lambda c: c.evaluate(value) if isinstance(c, RatFunc) else c)

    def compose(self, inner: "RatMap") -> "RatMap":
        """self o inner, by homogenisation."""
        d = self.degree
        P, Q = inner.num, inner.den
        def hom(poly):
            acc = Poly()
            for i, c in enumerate(poly.coeffs):
                acc = acc + c * P ** i * Q ** (d - i)
            return acc
        return RatMap(hom(self.num), hom(self.den))

    def sub_one(self, value) -> "RatMap":
        """self - value, as a map."""
        return RatMap(self.num - self.den * value, self.den, allow_constant=True)


def degree(R: RatMap) -> int:
    if R.is_constant():
        raise ConstantMap("constant map has no degree")
    return R.degree


def moebius_post(T: Moebius, R: RatMap) -> RatMap:
    """T o R."""
    a, b, c, d = T.entries()
    return RatMap(R.num * a + R.den * b, R.num * c + R.den * d)


def moebius_pre(R: RatMap, T: Moebius) -> RatMap:
    """R o T."""
    a, b, c, d = T.entries()
    return R.compose(RatMap(Poly([b, a]), Poly([d, c])))


# ---------------------------------------------------------------------------
# fibers and critical data


def partition_of(factors) -> tuple[int, ...]:
    """Ramification profile from (factor, multiplicity) pairs: deg(f) parts equal to m."""
    parts = []
    for f, m in factors:
        parts.extend([m] * f.degree)
    return tuple(sorted(parts, reverse=True))


def is_trivial(partition, d: int) -> bool:
    return len(partition) == d


@dataclass
class CriticalData:
    """Exact critical-value record of a map of degree ``degree``.

    ``finite_poly`` is the monic squarefree polynomial in the value variable
    whose roots are the finite critical values; ``factors`` lists its pieces
    with the ramification profile shared by every root of that piece.
    """

    degree: int
    finite_poly: Poly
    infinity: bool
    factors: list = field(default_factory=list)  # [(Poly, partition)]
    infinity_partition: tuple = ()
    candidate_poly: Poly | None = None
    spurious: list = field(default_factory=list)  # [Poly] candidate pieces with smooth fibers

    @property
    def count(self) -> int:
        return self.finite_poly.degree + (1 if self.infinity else 0) if self.finite_poly.degree >= 0 else int(self.infinity)

    def located(self):
        """Finite critical values located exactly; None over Q(param) or when there are none."""
        if self.finite_poly.degree < 1 or any(isinstance(c, RatFunc) for c in self.finite_poly.coeffs):
            return None
        return locate_roots(self.finite_poly)

    def values(self) -> list:
        """All critical values as P1 points; raises UnresolvedBlock when some cannot be named."""
        out = []
        if self.finite_poly.degree >= 1:
            rep = self.located()
            if rep.unresolved:
                raise UnresolvedBlock(f"unresolved critical-value block {rep.unresolved[0][0]}", rep.unresolved[0][0])
            out.extend(r for r, _ in rep.points)
        if self.infinity:
            out.append(oo)
        return out

    def passport(self) -> dict:
        """Map from critical value (oo, Fraction, Surd or the defining factor) to partition."""
        out = {}
        for f, part in self.factors:
            if f.degree >= 1 and all(isinstance(c, Fraction) for c in f.coeffs):
                rep = locate_roots(f)
                for r, _ in rep.points:
                    out[r] = part
                for blk, _ in rep.unresolved:
                    out[blk] = part
            else:
                out[f] = part
        if self.infinity:
            out[oo] = self.infinity_partition
        return out


def critical_record(degree_: int, candidate: Poly, partition_at: Callable, infinity_partition: tuple) -> CriticalData:
    """Recheck every squarefree candidate piece; keep those with ramified fibers."""
    genuine, spurious = [], []
    finite = Poly([1])
    if candidate.degree >= 1:
        for piece in _coprime_pieces(candidate):
            for sub, part in over_each_root(piece, partition_at):
                if sum(part) != degree_:
                    raise BookkeepingFailure(f"fiber over root of {sub} has profile {part}, degree {degree_}")
                if is_trivial(part, degree_):
                    spurious.append(sub)
                else:
                    genuine.append((sub, part))
                    finite = finite * sub
    return CriticalData(
        degree=degree_,
        finite_poly=finite.monic(),
        infinity=not is_trivial(infinity_partition, degree_),
        factors=genuine,
        infinity_partition=infinity_partition,
        candidate_poly=candidate,
        spurious=spurious,
    )


def _coprime_pieces(p: Poly) -> list[Poly]:
    return [f for f, _ in squarefree_decomposition(p)] if p.degree >= 1 else []


def value_fiber_partition(R: RatMap, c0) -> tuple[int, ...]:
    """Profile of the fiber of R over a finite value c0 (possibly a generic root)."""
    P = R.num - R.den * c0
    d = R.degree
    ensure_unit(P.lc)
    parts = list(partition_of(squarefree_decomposition(P))) if P.degree >= 1 else []
    if P.degree < d:
        parts.append(d - P.degree)
    return tuple(sorted(parts, reverse=True))


def infinity_fiber_partition(R: RatMap) -> tuple[int, ...]:
    parts = list(partition_of(squarefree_decomposition(R.den))) if R.den.degree >= 1 else []
    gap = R.num.degree - R.den.degree
    if gap > 0:
        parts.append(gap)
    return tuple(sorted(parts, reverse=True))


def discriminant_candidates(R: RatMap) -> Poly:
    """D(c) * lc(c): every finite critical value is a root (plus possibly spurious ones)."""
    return fiber_candidates(R.num, -R.den, Poly(), R.degree)


def critical_data(R: RatMap) -> CriticalData:
    if R.is_constant():
        raise ConstantMap("constant map")
    d = R.degree
    cand = discriminant_candidates(R)
    return critical_record(
        d,
        cand,
        lambda c0: value_fiber_partition(R, c0),
        infinity_fiber_partition(R),
    )


def critical_values(R: RatMap) -> list:
    return critical_data(R).values()


def filtration_level(R: RatMap) -> int:
    """#CritVal(R)."""
    return critical_data(R).count


def classify(level: int) -> str:
    if level <= 2:
        return "trivial" if level == 0 else "cyclic"
    if level == 3:
        return "belyi"
    if level == 4:
        return "fried"
    return "generic"


def classification(R: RatMap) -> dict:
    cd = critical_data(R)
    level = cd.count
    return {
        "degree": cd.degree,
        "level": level,
        "belyi": level <= 3,
        "fried": level <= 4,
        "kind": classify(level),
        "data": cd,
    }


# ---------------------------------------------------------------------------
# divisors


@dataclass(frozen=True)
class DivisorSupport:
    terms: tuple  # ((point, multiplicity), ...)

    def degree(self) -> int:
        return sum(m for _, m in self.terms)

    def positive_part(self):
        return [(p, m) for p, m in self.terms if m > 0]

    def negative_part(self):
        return [(p, m) for p, m in self.terms if m < 0]

    def as_dict(self) -> dict:
        return {p: m for p, m in self.terms}


def divisor(R: RatMap) -> DivisorSupport:
    """Zeros minus poles of R, with z = oo included."""
    if R.num.is_zero():
        raise ValueError("divisor of the zero function")
    if R.is_constant():
        raise ConstantMap("constant map has empty divisor")
    terms = []
    for poly, sign in ((R.num, 1), (R.den, -1)):
        if poly.degree < 1:
            continue
        rep = locate_roots(poly)
        if rep.unresolved:
            blk = rep.unresolved[0][0]
            raise UnresolvedBlock(f"cannot locate roots of {blk}", blk)
        terms.extend((r, sign * m) for r, m in rep.points)
    gap = R.den.degree - R.num.degree
    if gap:
        terms.append((oo, gap))
    return DivisorSupport(tuple(terms))


# ---------------------------------------------------------------------------
# normal forms and dimensions


def deg3_family(lam=None) -> RatMap:
    """(z^3 + z^2) / (lam z + 1); symbolic parameter when ``lam`` is None or a str."""
    if lam is None or isinstance(lam, str):
        lam = RatFunc.gen(lam or "l")
    elif not isinstance(lam, RatFunc):
        lam = Fraction(lam)
        if lam == 1:
            raise DegenerateParameter("lambda = 1: degree drops")
        if lam == 0:
            raise DegenerateParameter("lambda = 0: the poles collide")
    return RatMap(Poly([0, 0, 1, 1]), Poly([1, lam]))


def deg4_normal_form(p, q, r, s) -> RatMap:
    return RatMap(Poly([0, 0, q, p, 1]), Poly([1, s, r]))


def deg4_weight_action(mu, pqrs):
    mu = Fraction(mu)
    if mu == 0:
        raise ValueError("weight must be nonzero")
    p, q, r, s = (Fraction(v) for v in pqrs)
    return (mu * p, mu ** 2 * q, r / mu ** 2, s / mu)


def deg4_involution(pqrs):
    p, q, r, s = pqrs
    return (s, r, q, p)


def hurwitz_dims(d: int, g: int) -> tuple[int, int]:
    """Dimensions of the two Hurwitz spaces (post-composition and both-sides quotients)."""
    if g < 0 or d < 1:
        raise OutOfRange(f"(d, g) = ({d}, {g})")
    if g == 0 and d < 3:
        raise OutOfRange("genus 0 needs d >= 3")
    if g > 0 and d < 2 * g + 1:
        raise OutOfRange("positive genus needs d >= 2g + 1")
    return 2 * (d + g) - 2, 2 * (d + g) - 5

"""Rational functions in one named parameter over Q.

These play the role of the transcendental parameters (lambda, k, p, s, t)
of the parametric families: a Poly whose coefficients are RatFunc values
is a polynomial over Q(param).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import ParameterMismatch
from .poly import Poly, poly_gcd


class RatFunc:
    __slots__ = ("num", "den", "symbol")

    def __init__(self, num, den=None, symbol: str = "t", _reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly([num])
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if _reduced and num.is_zero() and den.degree > 0:
            den = Poly([1])
        if not _reduced:
            if num.is_zero():
                den = Poly([1])
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lc
            if lc != 1:
                inv = 1 / lc
                num, den = num * inv, den * inv
        self.num, self.den, self.symbol = num, den, symbol

    @classmethod
    def gen(cls, symbol: str) -> "RatFunc":
        return cls(Poly([0, 1]), symbol=symbol, _reduced=True)

    # -- queries -----------------------------------------------------
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    @property
    def degree(self) -> int:
        """max(deg num, deg den), the degree as a map P1 -> P1."""
        return max(self.num.degree, self.den.degree, 0)

    def evaluate(self, value):
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {self.symbol}={value}")
        return self.num(value) / d

    __call__ = evaluate

    # -- arithmetic --------------------------------------------------
    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.symbol != self.symbol:
                if other.is_constant():
                    return RatFunc(other.num, other.den, self.symbol, _reduced=True)
                if self.is_constant():
                    return other
                raise ParameterMismatch(f"parameters {self.symbol} and {other.symbol}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly([other]), symbol=self.symbol, _reduced=True)
        return None

    def _sym(self, other):
        # symbol of a result: prefer a non-constant operand's symbol
        if self.is_constant() and isinstance(other, RatFunc):
            return other.symbol
        return self.symbol

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        sym = self._sym(o)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den, sym)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, sym)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.symbol, _reduced=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(Poly(), symbol=self.symbol, _reduced=True)
            return RatFunc(self.num * other, self.den, self.symbol, _reduced=True)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        sym = self._sym(o)
        # cross-cancel before multiplying keeps the operands small
        g1 = poly_gcd(self.num, o.den) if not self.num.is_zero() else Poly([1])
        g2 = poly_gcd(o.num, self.den) if not o.num.is_zero() else Poly([1])
        n1, d2 = (self.num // g1, o.den // g1) if g1.degree > 0 else (self.num, o.den)
        n2, d1 = (o.num // g2, self.den // g2) if g2.degree > 0 else (o.num, self.den)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        return RatFunc(num, den, sym, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.symbol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RatFunc(self.num / Fraction(other), self.den, self.symbol, _reduced=True)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, self.symbol, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == Poly([other])
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r}, {self.symbol!r})"

    def __str__(self):
        n = self.num.format(self.symbol)
        if self.den == 1:
            return n
        d = self.den.format(self.symbol)
        if self.num.degree > 0 and len([c for c in self.num.coeffs if c != 0]) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    # -- integral normal form ----------------------------------------
    def integral_parts(self) -> tuple[list[int], list[int]]:
        """Coprime integer polynomials (num, den) with den primitive and lc(den) > 0."""
        n_den = math.lcm(*(c.denominator for c in self.num.coeffs)) if self.num else 1
        d_den = math.lcm(*(c.denominator for c in self.den.coeffs))
        scale = Fraction(math.lcm(n_den, d_den))
        N = [int(c * scale) for c in self.num.coeffs]
        D = [int(c * scale) for c in self.den.coeffs]
        g = math.gcd(*D)
        return N, [c // g for c in D] if g > 1 else D


def param_degree(c) -> int:
    """Degree of a coefficient as a rational function of the parameter (0 for rationals)."""
    if isinstance(c, RatFunc):
        return c.degree
    return 0


def primitive_in_parameter(p: Poly) -> Poly:
    """Clear parameter denominators and parameter content from a Poly over Q(param).

    The result has coefficients that are polynomials in the parameter with
    integer coefficients, jointly primitive (no common polynomial factor and
    no common integer factor), leading coefficient positive in its own
    leading term. Returned as a Poly over RatFunc values.
    """
    cs = [c for c in p.coeffs]
    if not cs:
        return p
    rfs = [c for c in cs if isinstance(c, RatFunc)]
    symbol = rfs[0].symbol if rfs else "t"
    cs = [c if isinstance(c, RatFunc) else RatFunc(Poly([c]), symbol=symbol) for c in cs]
    # common denominator
    den = Poly([1])
    for c in cs:
        den = den * (c.den // poly_gcd(den, c.den))
    nums = [c.num * (den // c.den) for c in cs]
    # polynomial content
    g = Poly()
    for n in nums:
        g = poly_gcd(g, n)
    if g.degree > 0:
        nums = [n // g for n in nums]
    # rational content
    dens = [c.denominator for n in nums for c in n.coeffs]
    scale = Fraction(math.lcm(*dens)) if dens else Fraction(1)
    ints = [int(c * scale) for n in nums for c in n.coeffs]
    gi = math.gcd(*ints) if ints else 1
    scale = scale / gi
    lead = nums[-1].lc * scale
    if lead < 0:
        scale = -scale
    return Poly(RatFunc(n * scale, symbol=symbol, _reduced=True) for n in nums)


def sample_points():
    """0, 1, -1, 2, -2, ... as Fractions."""
    k = 0
    while True:
        yield Fraction((k + 1) // 2 * (1 if k % 2 else -1))
        k += 1


def common_denominator(polys, symbol: str) -> Poly:
    """Monic lcm of the parameter denominators of all coefficients."""
    den = Poly([1])
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, RatFunc):
                den = den * (c.den // poly_gcd(den, c.den))
    return den


def max_param_degree(polys) -> int:
    """Largest parameter degree among coefficients that are polynomials in the parameter."""
    out = 0
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, RatFunc):
                if c.den.degree > 0:
                    raise ValueError("clear parameter denominators first")
                out = max(out, c.num.degree)
    return out


def reconstruct_in_parameter(fn, param_bound: int, symbol: str, check: bool = True) -> Poly:
    """Rebuild a Poly over Q[param] from its specialisations.

    ``fn(value)`` returns the specialisation at a rational parameter value
    (a Poly over Q) or ``None`` to reject the value. The parameter degree of
    every coefficient must be at most ``param_bound``. With ``check`` one
    extra accepted sample is compared against the reconstruction.
    """
    from .poly import interpolate

    xs, ys = [], []
    extra = None
    for s in sample_points():
        val = fn(s)
        if val is None:
            continue
        if len(xs) <= param_bound:
            xs.append(s)
            ys.append(val)
            continue
        extra = (s, val)
        if not check or extra is not None:
            break
    width = max(max((y.degree for y in ys), default=0), 0) + 1
    coeffs = []
    for i in range(width):
        ps = interpolate(xs, [y.coeff(i) for y in ys])
        coeffs.append(RatFunc(ps, symbol=symbol, _reduced=True))
    out = Poly(coeffs)
    if check and extra is not None:
        s, val = extra
        spec = out.map_coeffs(lambda c: c.num(s))
        if spec != val:
            raise ArithmeticError("parameter reconstruction failed its consistency check")
    return out

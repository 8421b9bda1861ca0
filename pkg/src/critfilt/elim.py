"""Candidate critical values by elimination.

Both kinds of map have a fiber polynomial of the shape

    P_c(z) = A(z) + c B(z) + c^2 C(z)

(A = num, B = -den, C = 0 for rational maps; A = u^2 - v^2 f, B = -2u,
C = 1 for u + v y). Every finite critical value is a root of
disc_z(P_c) * lc_z(P_c), a polynomial in c. Over Q the discriminant is
sampled at integer c and interpolated. Over Q(param) the same is done at
rational parameter values and the parameter dependence is interpolated as
well, which avoids Euclid over a rational function field.
"""

from __future__ import annotations

from .exactnum import Poly, RatFunc, discriminant, interpolate_function
from .exactnum.ratfunc import common_denominator, max_param_degree, reconstruct_in_parameter


def _symbol(polys) -> str | None:
    for p in polys:
        for c in p.coeffs:
            if isinstance(c, RatFunc) and not c.is_constant():
                return c.symbol
    return None


def _specialize(p: Poly, value) -> Poly:
    return p.map_coeffs(lambda c: c.evaluate(value) if isinstance(c, RatFunc) else c)


def _lc_in_c(A: Poly, B: Poly, C: Poly, n: int) -> Poly:
    return Poly([A.coeff(n), B.coeff(n), C.coeff(n)])


def _disc_in_c(A: Poly, B: Poly, C: Poly, n: int) -> Poly:
    """disc_z(A + cB + c^2 C) for rational data of formal z-degree n."""
    if n < 2:
        return Poly([1])
    lc = _lc_in_c(A, B, C, n)
    c_deg = 2 if not C.is_zero() else 1
    return interpolate_function(
        lambda c: discriminant(A + B * c + C * (c * c)),
        (2 * n - 2) * c_deg,
        skip=lambda c: lc(c) == 0,
    )


def fiber_candidates(A: Poly, B: Poly, C: Poly, n: int) -> Poly:
    """disc_z(P_c) * lc_z(P_c) as a polynomial in c (up to a unit)."""
    polys = (A, B, C)
    sym = _symbol(polys)
    if sym is None:
        A, B, C = (p.map_coeffs(lambda c: c.constant_value() if isinstance(c, RatFunc) else c) for p in polys)
        D = _disc_in_c(A, B, C, n)
        lc = _lc_in_c(A, B, C, n)
        return D * lc if lc.degree >= 1 else D
    L = common_denominator(polys, sym)
    Lr = RatFunc(L, symbol=sym, _reduced=True)
    A, B, C = (p * Lr for p in polys)
    e = max_param_degree((A, B, C))

    def at(value):
        As, Bs, Cs = (_specialize(p, value) for p in (A, B, C))
        if _lc_in_c(As, Bs, Cs, n).is_zero():
            return None
        return _disc_in_c(As, Bs, Cs, n)

    D = reconstruct_in_parameter(at, (2 * n - 2) * e, sym) if n >= 2 else Poly([1])
    lc = _lc_in_c(A, B, C, n)
    return D * lc if lc.degree >= 1 else D

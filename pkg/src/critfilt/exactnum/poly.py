"""Dense univariate polynomials over an exact coefficient field.

Coefficients are stored lowest degree first. Any type with exact field
arithmetic that also interoperates with ``int`` works as a coefficient:
``Fraction``, :class:`~critfilt.exactnum.surd.Surd`,
:class:`~critfilt.exactnum.ratfunc.RatFunc` and
:class:`~critfilt.exactnum.algext.AlgExt`. Python ints are promoted to
``Fraction`` on entry so that ``/`` never produces a float.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..errors import ZeroPolynomial

NEG_INF = -math.inf


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self):
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if self.is_constant():
            return self.coeff(0) == other
        return False

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs if not _needs_parens(cs) else f"({cs})")
                continue
            mono = var if i == 1 else f"{var}^{i}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"({cs})*{mono}" if _needs_parens(cs) else f"{cs}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    # -- arithmetic ---------------------------------------------------
    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly()
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def __rmul__(self, other):
        # scalars commute with every coefficient type used here
        return self * other

    def __truediv__(self, other):
        if isinstance(other, Poly):
            q, r = divmod(self, other)
            if r:
                raise ValueError("inexact polynomial division")
            return q
        return Poly(c / other for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = Poly([other])
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(r) - 1 < db:
            return Poly(), self
        inv = other.lc ** -1
        q = [Fraction(0)] * (len(r) - db)
        bc = other.coeffs
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if c == 0:
                continue
            c = c * inv
            q[k] = c
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * bc[j]
        return Poly(q), Poly(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- calculus and evaluation -------------------------------------
    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or a Poly."""
        acc = Fraction(0)
        if isinstance(value, Poly):
            acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(c * i for i, c in enumerate(self.coeffs) if i > 0)

    def compose(self, inner: "Poly") -> "Poly":
        return self(inner)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = lc ** -1
        return Poly(c * inv for c in self.coeffs)

    def map_coeffs(self, fn: Callable) -> "Poly":
        return Poly(fn(c) for c in self.coeffs)

    def reverse(self, n: int | None = None) -> "Poly":
        """Coefficients reversed as a polynomial of formal degree ``n``."""
        n = self.degree if n is None else n
        cs = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return Poly(reversed(cs[: n + 1]))


def _needs_parens(s: str) -> bool:
    body = s[1:] if s.startswith("-") else s
    return any(ch in body for ch in "+-/ ") or "√" in body


# ---------------------------------------------------------------------------
# gcd, squarefree decomposition


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; ``gcd(0, 0) = 0``."""
    if _all_rational(a) and _all_rational(b) and not a.is_zero() and not b.is_zero():
        return _gcd_rational(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = r0.lc ** -1
    return r0 * inv, s0 * inv, t0 * inv


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm (characteristic 0).

    Returns monic, pairwise coprime, squarefree factors with their
    multiplicities in increasing order; constant factors are dropped.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, d)
        b = b // g
        c = d // g
        if g.degree >= 1:
            out.append((g, i))
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    return (p // poly_gcd(p, p.derivative())).monic()


# ---------------------------------------------------------------------------
# resultants and discriminants


def resultant(p: Poly, q: Poly):
    """Resultant of ``p`` and ``q`` in their variable.

    Euclidean scheme over the coefficient field; for rational coefficients
    an integer subresultant computation is used instead (same value, far
    less fraction arithmetic).
    """
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    if _all_rational(p) and _all_rational(q):
        return _resultant_rational(p, q)
    return _resultant_field(p, q)


def _all_rational(p: Poly) -> bool:
    return all(type(c) is Fraction for c in p.coeffs)


def _resultant_field(a: Poly, b: Poly):
    result = Fraction(1)
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return result * b.lc ** m
        r = a % b
        if r.is_zero():
            return Fraction(0) * result
        if (m * n) % 2:
            result = -result
        result = result * b.lc ** (m - r.degree)
        a, b = b, r


def _content_int(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    return g


def _primitive_int(p: Poly) -> list[int]:
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = _content_int(ints)
    return [c // g for c in ints]


def _gcd_rational(a: Poly, b: Poly) -> Poly:
    # primitive PRS over Z: same gcd as Euclid over Q, no fraction blow-up
    A, B = _primitive_int(a), _primitive_int(b)
    if len(A) < len(B):
        A, B = B, A
    while len(B) > 1:
        R = _int_prem(A, B)
        if not R:
            return Poly(B).monic()
        g = _content_int(R)
        A, B = B, [c // g for c in R]
    if not B:
        return Poly(A).monic()
    return Poly([1])


def _resultant_rational(p: Poly, q: Poly) -> Fraction:
    # clear denominators: Res(p, q) = Res(P/dp, Q/dq) = dp^-n dq^-m Res(P, Q)
    m, n = p.degree, q.degree
    dp = math.lcm(*(c.denominator for c in p.coeffs))
    dq = math.lcm(*(c.denominator for c in q.coeffs))
    P = [int(c * dp) for c in p.coeffs]
    Q = [int(c * dq) for c in q.coeffs]
    cp, cq = _content_int(P), _content_int(Q)
    P = [c // cp for c in P]
    Q = [c // cq for c in Q]
    res = _subresultant_int(P, Q)
    return Fraction(res) * Fraction(cp, dp) ** n * Fraction(cq, dq) ** m


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j in range(db + 1):
            r[shift + j] -= lr * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def _subresultant_int(A: list[int], B: list[int]) -> int:
    """Resultant of integer polynomials via the subresultant PRS."""
    # lowest-degree-first integer lists, both nonzero
    degA, degB = len(A) - 1, len(B) - 1
    sign = 1
    if degA < degB:
        A, B = B, A
        degA, degB = degB, degA
        if degA % 2 and degB % 2:
            sign = -1
    if degB == 0:
        return sign * B[0] ** degA
    g, h = 1, 1
    while True:
        delta = degA - degB
        if degA % 2 and degB % 2:
            sign = -sign
        R = _int_prem(A, B)
        if not R:
            return 0
        degR = len(R) - 1
        A = B
        div = g * h ** delta
        B = [c // div for c in R]
        g = A[-1]
        # h <- g^delta / h^(delta-1), exact
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g ** delta // h ** (delta - 1)
        degA, degB = len(A) - 1, degR
        if degB == 0:
            # Res = lc(B)^degA / h^(degA-1) with the accumulated sign
            num = B[0] ** degA
            if degA == 1:
                return sign * num
            den = h ** (degA - 1)
            return sign * (num // den)


def discriminant(p: Poly):
    """``(-1)^(n(n-1)/2) * Res(p, p') / lc(p)`` for ``n = deg p >= 1``."""
    if p.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    r = resultant(p, p.derivative())
    if (n * (n - 1) // 2) % 2:
        r = -r
    return r / p.lc


def sylvester_matrix(p: Poly, q: Poly) -> list[list]:
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + pc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + qc + [Fraction(0)] * (size - n - 1 - i))
    return rows


# ---------------------------------------------------------------------------
# interpolation


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton interpolation through ``(xs[i], ys[i])`` over the value field."""
    n = len(xs)
    if n != len(ys):
        raise ValueError("length mismatch")
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]]) if n else Poly()
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p


def interpolate_function(fn: Callable, degree_bound: int, skip: Callable | None = None) -> Poly:
    """Recover the polynomial ``c -> fn(c)`` of degree <= ``degree_bound``.

    Samples at ``c = 0, 1, -1, 2, -2, ...``; points rejected by ``skip`` are
    passed over (used to dodge values where a formal-degree formula does not
    apply).
    """
    xs, ys = [], []
    k = 0
    while len(xs) < degree_bound + 1:
        c = Fraction((k + 1) // 2 * (1 if k % 2 else -1))
        k += 1
        if skip is not None and skip(c):
            continue
        xs.append(c)
        ys.append(fn(c))
    return interpolate(xs, ys)

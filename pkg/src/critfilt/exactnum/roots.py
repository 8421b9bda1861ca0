"""Exact root location for polynomials over Q.

Rational roots are found by exact real-root isolation (Sturm sequences and
bisection) followed by best-approximation with denominator bounded by the
leading coefficient, so no integer factorisation is needed. Irreducible
quadratic leftovers become conjugate Surd pairs; anything of degree >= 3
that has no rational root is reported as an unresolved block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import ZeroPolynomial
from .poly import Poly, squarefree_decomposition
from .surd import Surd, rational_sqrt_split


@dataclass(frozen=True)
class RootReport:
    points: list = field(default_factory=list)  # [(Fraction | Surd, multiplicity)]
    unresolved: list = field(default_factory=list)  # [(Poly, multiplicity)]

    def total_degree(self) -> int:
        return sum(m for _, m in self.points) + sum(b.degree * m for b, m in self.unresolved)


def integer_primitive(p: Poly) -> list[int]:
    """Primitive integer coefficient list proportional to ``p`` (positive lc)."""
    den = math.lcm(*(Fraction(c).denominator for c in p.coeffs))
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _eval_int(cs: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r)
    return chain


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_intervals(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(a, b]`` each holding exactly one real root of squarefree ``p``."""
    if p.degree < 1:
        return []
    chain = _sturm_chain(p)
    lc = abs(p.lc)
    bound = 1 + max(abs(c) for c in p.coeffs[:-1]) / lc if p.degree >= 1 else Fraction(1)
    bound = Fraction(math.ceil(bound))
    out = []
    stack = [(-bound, bound, _sign_changes(chain, -bound), _sign_changes(chain, bound))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = _sign_changes(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    out.sort()
    return out


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of a squarefree ``p`` over Q."""
    if p.is_zero():
        raise ZeroPolynomial("rational roots of the zero polynomial")
    if p.degree < 1:
        return []
    ints = integer_primitive(p)
    lc = abs(ints[-1])
    P = Poly(ints)
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
    # p/q with q | lc: any two such fractions differ by >= 1/lc^2
    width = Fraction(1, 2 * lc * lc)
    for a, b in real_root_intervals(P):
        if _eval_int(ints, b) == 0:
            if b != 0 and b not in roots:
                roots.append(b)
            continue
        # the root is simple and alone in (a, b); p keeps the sign of p(b) on its right
        sb = _eval_int(ints, b) > 0
        while b - a > width:
            mid = (a + b) / 2
            v = _eval_int(ints, mid)
            if v == 0:
                a = b = mid
                break
            if (v > 0) == sb:
                b = mid
            else:
                a = mid
        cand = ((a + b) / 2).limit_denominator(lc)
        # the candidate must come from this interval, not a neighbouring root
        if a <= cand <= b and cand != 0 and _eval_int(ints, cand) == 0 and cand not in roots:
            roots.append(cand)
    return sorted(roots)


def quadratic_roots(q: Poly) -> tuple | None:
    """Roots of an irreducible-or-not quadratic over Q as Fractions or a Surd pair."""
    a, b, c = q.coeff(2), q.coeff(1), q.coeff(0)
    disc = b * b - 4 * a * c
    if disc == 0:
        r = -b / (2 * a)
        return (r, r)
    split = rational_sqrt_split(disc)
    if split is None:
        return None
    t, D = split
    if D == 1:
        return tuple(sorted(((-b + t) / (2 * a), (-b - t) / (2 * a))))
    base = -b / (2 * a)
    off = t / (2 * a)
    if off < 0:
        off = -off
    return (Surd(base, -off, D), Surd(base, off, D))


def locate_roots(p: Poly) -> RootReport:
    """Rational roots, quadratic surd pairs and unresolved blocks, with multiplicities."""
    if p.is_zero():
        raise ZeroPolynomial("locate_roots of the zero polynomial")
    report = RootReport()
    if p.degree < 1:
        return report
    for factor, mult in squarefree_decomposition(p):
        rest = factor
        for r in rational_roots(factor):
            report.points.append((r, mult))
            rest, rem = divmod(rest, Poly([-r, 1]))
            if not rem.is_zero():
                raise ArithmeticError(f"{r} is not a root of {factor}")
        if rest.degree == 2:
            pair = quadratic_roots(rest)
            if pair is None:
                report.unresolved.append((rest.monic(), mult))
            else:
                for r in pair:
                    report.points.append((r, mult))
        elif rest.degree >= 1:
            report.unresolved.append((rest.monic(), mult))
    return report

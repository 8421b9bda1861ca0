"""Arithmetic in K[c]/(F) for a squarefree F, with dynamic splitting.

``K[c]/(F)`` is a product of fields, one per irreducible factor of F. We
compute as if it were a field; the moment an inversion meets a zero
divisor, :class:`SplitFound` carries the nontrivial factor of F back to
the caller, who restarts on both pieces. A computation that finishes
without a split behaves identically at every root of F, which is exactly
what the fiber rechecks need: no root is ever isolated numerically.
"""

from __future__ import annotations

from typing import Callable

from .poly import Poly, poly_gcd, poly_xgcd


class SplitFound(Exception):
    def __init__(self, factor: Poly):
        super().__init__(f"zero divisor: modulus splits off {factor}")
        self.factor = factor


class AlgExt:
    __slots__ = ("rep", "modulus")

    def __init__(self, rep, modulus: Poly):
        if not isinstance(rep, Poly):
            rep = Poly([rep])
        if rep.degree >= modulus.degree:
            rep = rep % modulus
        self.rep = rep
        self.modulus = modulus

    @classmethod
    def generator(cls, modulus: Poly) -> "AlgExt":
        return cls(Poly([0, 1]), modulus)

    def _lift(self, other):
        if isinstance(other, AlgExt):
            if other.modulus is not self.modulus and other.modulus != self.modulus:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, Poly):
            return None
        return AlgExt(Poly([other]), self.modulus)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgExt(self.rep + o.rep, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return AlgExt(-self.rep, self.modulus)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgExt(self.rep - o.rep, self.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, (AlgExt, Poly)):
            if other == 0:
                return AlgExt(Poly(), self.modulus)
            return AlgExt(self.rep * other, self.modulus)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return AlgExt(self.rep * o.rep, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "AlgExt":
        if self.rep.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = poly_xgcd(self.rep, self.modulus)
        if g.degree > 0:
            raise SplitFound(g)
        return AlgExt(s, self.modulus)

    def __truediv__(self, other):
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
        out = AlgExt(Poly([1]), self.modulus)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, AlgExt):
            return self.rep == other.rep
        if isinstance(other, Poly):
            return NotImplemented
        return self.rep == Poly([other])

    def __hash__(self):
        if self.rep.degree <= 0:
            return hash(self.rep.coeff(0))
        return hash(self.rep)

    def require_unit(self) -> None:
        """Raise SplitFound if this element is a zero divisor (or zero on a factor)."""
        if self.rep.is_zero():
            return
        g = poly_gcd(self.rep, self.modulus)
        if g.degree > 0:
            raise SplitFound(g)

    def __repr__(self):
        return f"AlgExt({self.rep!r} mod {self.modulus!r})"

    def __str__(self):
        return f"[{self.rep.format('c')} mod {self.modulus.format('c')}]"


def root_of(factor: Poly):
    """A generic root of a monic squarefree factor: exact for linear factors."""
    if factor.degree == 1:
        m = factor.monic()
        return -m.coeff(0)
    return AlgExt.generator(factor.monic())


def over_each_root(factor: Poly, fn: Callable, max_splits: int = 64) -> list[tuple[Poly, object]]:
    """Evaluate ``fn`` at a generic root of each piece of ``factor``.

    Returns ``[(piece, fn(root_of(piece))), ...]`` where the pieces multiply
    to ``factor`` (monic) and every root of a piece yields the same result.
    """
    pending = [factor.monic()]
    done = []
    splits = 0
    while pending:
        F = pending.pop()
        if F.degree < 1:
            continue
        try:
            result = fn(root_of(F))
        except SplitFound as sf:
            g = sf.factor.monic()
            splits += 1
            if splits > max_splits:
                raise
            pending.append(g)
            pending.append(F // g)
            continue
        done.append((F, result))
    done.sort(key=lambda fr: (fr[0].degree, str(fr[0])))
    return done


def ensure_unit(x) -> None:
    if isinstance(x, AlgExt):
        x.require_unit()
    elif x == 0:
        raise ZeroDivisionError("expected a unit")


def zero_test(x) -> bool:
    """Exact zero test that splits the modulus when the answer differs per root."""
    if isinstance(x, AlgExt):
        if x.rep.is_zero():
            return True
        x.require_unit()
        return False
    return x == 0


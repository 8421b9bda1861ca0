"""Quadratic irrationals ``a + b*sqrt(D)`` with rational ``a, b``."""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import MixedRadicand


def squarefree_split(n: int, trial_limit: int = 10**6) -> tuple[int, int] | None:
    """Write ``n = s**2 * r`` with ``r`` squarefree; return ``(s, r)``.

    Trial division up to ``min(cbrt(n), trial_limit)``; once every prime up
    to the cube root is removed the cofactor is 1, a prime, a square of a
    prime or a product of two distinct primes, and ``isqrt`` tells which.
    Returns ``None`` when ``n`` is too large for that argument.
    """
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, r = 1, 1
    p = 2
    while p * p * p <= n:
        if p > trial_limit:
            return None
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    if n > 1:
        q = math.isqrt(n)
        if q * q == n:
            s *= q
        else:
            r *= n
    return s, sign * r


def rational_sqrt_split(x: Fraction) -> tuple[Fraction, int] | None:
    """Write ``x = t**2 * D`` with ``t`` rational and ``D`` a squarefree integer."""
    x = Fraction(x)
    # x = n/d = (n*d)/d^2
    split = squarefree_split(x.numerator * x.denominator)
    if split is None:
        return None
    s, r = split
    return Fraction(s, x.denominator), r


class Surd:
    """Element ``a + b*sqrt(D)`` of Q(sqrt(D)).

    ``D`` is a squarefree integer other than 0 and 1; ``b == 0`` is
    normalised to ``D == 1`` so that rationals compare equal across
    radicands.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D: int = 1):
        a, b = Fraction(a), Fraction(b)
        if D == 0:
            raise ValueError("radicand must be nonzero")
        if b == 0 or D == 1:
            a, b, D = a + (b if D == 1 else 0), Fraction(0), 1
        self.a, self.b, self.D = a, b, D

    @classmethod
    def sqrt(cls, x) -> "Surd":
        """Exact square root of a rational (raises if the split is unresolved)."""
        split = rational_sqrt_split(Fraction(x))
        if split is None:
            raise ValueError(f"cannot extract the squarefree part of {x}")
        t, D = split
        if D == 1:
            return cls(t)
        return cls(0, t, D)

    def is_rational(self) -> bool:
        return self.b == 0

    def _common(self, other):
        if isinstance(other, Surd):
            if self.D != other.D and self.b != 0 and other.b != 0:
                raise MixedRadicand(f"radicands {self.D} and {other.D}")
            return other, (self.D if self.b != 0 else other.D)
        if isinstance(other, (int, Fraction)):
            return Surd(other), self.D
        return None, None

    def __add__(self, other):
        o, D = self._common(other)
        if o is None:
            return NotImplemented
        return Surd(self.a + o.a, self.b + o.b, D)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o, D = self._common(other)
        if o is None:
            return NotImplemented
        return Surd(self.a - o.a, self.b - o.b, D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o, D = self._common(other)
        if o is None:
            return NotImplemented
        return Surd(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "Surd":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero surd")
        return Surd(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        o, _ = self._common(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o, _ = self._common(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Surd(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def sort_key(self):
        # real embedding order, for real surds (D > 0) only
        approx = float(self.a) + float(self.b) * math.sqrt(self.D) if self.D > 0 else float(self.a)
        return (approx, float(self.b))

    def __repr__(self):
        return f"Surd({self.a!r}, {self.b!r}, {self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"√{self.D}" if self.D > 0 else (f"√({self.D})")
        b = self.b
        if b == 1:
            tail = root
        elif b == -1:
            tail = f"-{root}"
        else:
            tail = f"{b}*{root}"
        if self.a == 0:
            return tail
        return f"{self.a}+{tail}" if not tail.startswith("-") else f"{self.a}{tail}"

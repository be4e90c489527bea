"""Arithmetic in real and complex quadratic integer rings.

Elements are a + b*r where r satisfies r^2 = p*r + q for fixed integers
p, q.  Two rings matter here and are exported as constants:

* ROOT6: p=1, q=-1, so r^2 = r - 1.  r models a primitive sixth root of
  unity; 2r - 1 squares to -3, r^6 = 1, and every nonzero power of r is
  a unit.
* GOLDEN: p=-1, q=1, so r^2 = 1 - r.  r models (sqrt(5) - 1)/2, the
  reciprocal golden ratio; 2r + 1 squares to 5 and r is a unit with
  1/r = r + 1.

Conjugation swaps r with the other root p - r, and the norm
a^2 + p*a*b - q*b^2 is the product of an element with its conjugate.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QuadraticRing:
    p: int
    q: int
    symbol: str = "r"

    def element(self, a: int, b: int = 0) -> "QuadraticInt":
        return QuadraticInt(self, a, b)

    @property
    def root(self) -> "QuadraticInt":
        return QuadraticInt(self, 0, 1)

    @property
    def one(self) -> "QuadraticInt":
        return QuadraticInt(self, 1, 0)

    @property
    def zero(self) -> "QuadraticInt":
        return QuadraticInt(self, 0, 0)


@dataclass(frozen=True)
class QuadraticInt:
    ring: QuadraticRing
    a: int
    b: int

    def _check(self, other: "QuadraticInt"):
        if self.ring != other.ring:
            raise ValueError("mixed quadratic rings")

    def _coerce(self, other):
        if isinstance(other, QuadraticInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return QuadraticInt(self.ring, other, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadraticInt(self.ring, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticInt(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # (a + b r)(c + d r) with r^2 = p r + q
        a, b, c, d = self.a, self.b, other.a, other.b
        p, q = self.ring.p, self.ring.q
        return QuadraticInt(self.ring, a * c + b * d * q, a * d + b * c + b * d * p)

    __rmul__ = __mul__

    def conj(self) -> "QuadraticInt":
        """Image under r -> p - r."""
        return QuadraticInt(self.ring, self.a + self.b * self.ring.p, -self.b)

    def norm(self) -> int:
        n = self * self.conj()
        assert n.b == 0
        return n.a

    def inv(self) -> "QuadraticInt":
        n = self.norm()
        if n not in (1, -1):
            raise ValueError(f"not a unit (norm {n})")
        c = self.conj()
        return QuadraticInt(self.ring, n * c.a, n * c.b)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        base = self if n >= 0 else self.inv()
        n = abs(n)
        out = QuadraticInt(self.ring, 1, 0)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        r = self.ring.symbol
        if self.b == 0:
            return str(self.a)
        bmag = abs(self.b)
        bpart = r if bmag == 1 else f"{bmag}{r}"
        if self.a == 0:
            return bpart if self.b > 0 else f"-{bpart}"
        return f"{self.a} {'+' if self.b > 0 else '-'} {bpart}"


ROOT6 = QuadraticRing(1, -1, "w")
GOLDEN = QuadraticRing(-1, 1, "g")

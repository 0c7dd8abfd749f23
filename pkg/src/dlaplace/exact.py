"""Exact arithmetic in Q and in real quadratic extensions Q(sqrt(d)).

Rationals are plain ``fractions.Fraction``.  ``QuadExt`` represents
``a + b*sqrt(d)`` with rational ``a``, ``b`` and an integer radicand
``d >= 0`` kept squarefree by the constructor; pure rationals normalize to
``d == 0`` so a single type flows through the whole package.  All field
operations, exact comparison and an exact sign are available, plus a float
conversion that brackets sqrt(d) tightly enough for the rounding error to
sit within a couple of ulps.

Values from two different extensions (both radicands nonzero and unequal)
cannot be combined; such an attempt raises ``RadicandMismatch`` instead of
silently working in a larger field.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import RadicandMismatch

RationalLike = Union[int, Fraction]


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (m, d0) with d == m*m*d0 and d0 squarefree."""
    m, d0, p = 1, d, 2
    while p * p <= d0:
        while d0 % (p * p) == 0:
            d0 //= p * p
            m *= p
        p += 1
    return m, d0


class QuadExt:
    """An exact value a + b*sqrt(d) with a, b in Q and d squarefree."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, rational: RationalLike = 0,
                 radical: RationalLike = 0, radicand: int = 0) -> None:
        a = Fraction(rational)
        b = Fraction(radical)
        d = radicand
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if d == 0:
            b = Fraction(0)
        elif d == 1:
            a, b, d = a + b, Fraction(0), 0
        elif b == 0:
            d = 0
        else:
            m, d0 = _squarefree_split(d)
            if d0 == 1:
                a, b, d = a + b * m, Fraction(0), 0
            else:
                b, d = b * m, d0
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def of(cls, value: "QuadExt | RationalLike") -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as an exact value")

    @property
    def rational_part(self) -> Fraction:
        return self._a

    @property
    def radical_part(self) -> Fraction:
        return self._b

    @property
    def radicand(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def as_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} has a nonzero radical part")
        return self._a

    def conjugate(self) -> "QuadExt":
        """The image of the map sqrt(d) -> -sqrt(d)."""
        return QuadExt(self._a, -self._b, self._d)

    def sign(self) -> int:
        """Exact sign: -1, 0 or +1, decided without floating point."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b*sqrt(d) pull in opposite directions; compare a^2 vs b^2 d.
        diff = self._a * self._a - self._b * self._b * self._d
        return sa * ((diff > 0) - (diff < 0))

    def inverse(self) -> "QuadExt":
        if not self:
            raise ZeroDivisionError("division by zero")
        norm = self._a * self._a - self._b * self._b * self._d
        return QuadExt(self._a / norm, -self._b / norm, self._d)

    def to_float(self) -> float:
        """Round to the nearest double within a couple of ulps.

        sqrt(d) is bracketed by integer square roots at growing precision
        until the enclosing interval for the whole value is relatively
        smaller than 2^-52.
        """
        if self._b == 0:
            return float(self._a)
        if self.sign() == 0:
            return 0.0
        bits = 64
        while True:
            scale = 1 << bits
            m = isqrt(self._d * scale * scale)
            lo, hi = Fraction(m, scale), Fraction(m + 1, scale)
            if self._b > 0:
                x_lo, x_hi = self._a + self._b * lo, self._a + self._b * hi
            else:
                x_lo, x_hi = self._a + self._b * hi, self._a + self._b * lo
            mid = (x_lo + x_hi) / 2
            if mid and (x_hi - x_lo) * (1 << 52) <= abs(mid):
                return float(mid)
            bits *= 2

    def _coerce(self, other: object) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return None

    def _common_radicand(self, other: "QuadExt") -> int:
        if self._d == other._d:
            return self._d
        if self._d == 0:
            return other._d
        if other._d == 0:
            return self._d
        raise RadicandMismatch(
            f"cannot combine sqrt({self._d}) with sqrt({other._d})")

    def __add__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_radicand(o)
        return QuadExt(self._a + o._a, self._b + o._b, d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_radicand(o)
        return QuadExt(self._a - o._a, self._b - o._b, d)

    def __rsub__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._common_radicand(o)
        return QuadExt(self._a * o._a + self._b * o._b * d,
                       self._a * o._b + self._b * o._a, d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadExt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "QuadExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExt(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self._a, -self._b, self._d)

    def __abs__(self) -> "QuadExt":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._d))

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __float__(self) -> float:
        return self.to_float()

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._b == 1:
            rad = f"sqrt({self._d})"
        elif self._b == -1:
            rad = f"-sqrt({self._d})"
        else:
            rad = f"{self._b}*sqrt({self._d})"
        if self._a == 0:
            return rad
        if rad.startswith("-"):
            return f"{self._a} - {rad[1:]}"
        return f"{self._a} + {rad}"

    def __repr__(self) -> str:
        return f"QuadExt({self._a!r}, {self._b!r}, {self._d})"


SQRT5 = QuadExt(0, 1, 5)
# The two roots of t^2 - t - 1: the golden ratio and its conjugate.
PHI = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
PSI = PHI.conjugate()


def sort_key(value: QuadExt) -> tuple[int, Fraction, Fraction]:
    """A deterministic ordering key usable across different radicands."""
    return (value.radicand, value.rational_part, value.radical_part)

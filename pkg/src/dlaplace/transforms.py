"""The transform calculus for sequences f: {1, 2, ...} -> R.

The transform is F(s) = sum_{n>=1} f(n) e^{-sn}.  Writing t = e^s makes
every transform in scope a strictly proper rational function of t, plus an
optional finite "delta" tail: a transform c * t^-j stands for c at n = j
and 0 elsewhere, which is how sequences supported on finitely many points
(and powers of a zero base) are carried around exactly.

Rules, all exact in t:

    geometric     a^(n-1)            ->  1/(t - a)
    shift         f(n+k)             ->  t^k F - sum_{i=1..k} f(i) t^(k-i)
    difference    (Df)(n)=f(n+1)-f(n)->  (t - 1) F - f(1)
    times_n       n f(n)             ->  -dF/ds  =  -t dF/dt
    convolve      sum_{k<n} f(k)g(n-k) -> F * G
    partial_sum   sum_{k<n} f(k)     ->  F/(t - 1)
    n_power       n^k                ->  times_n iterated on 1/(t - 1)

A rule that would produce a polynomial part raises ``ImproperResult``; that
only happens when the supplied initial values contradict the series F
actually encodes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import DegreeLimitExceeded, ImproperResult
from .exact import QuadExt
from .polys import Poly, RatFunc, T

Scalar = Union[int, Fraction, QuadExt]

# Highest power of n accepted by n_power and by polynomial forcing terms.
MAX_N_POWER = 12

_ZERO_RF = RatFunc()


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (tuple, list)):
        return Poly(value)
    return Poly((value,))


class TransformExpr:
    """A transform value: strictly proper rational part plus delta tail."""

    __slots__ = ("_rational", "_deltas")

    def __init__(self, rational: RatFunc = _ZERO_RF,
                 deltas: Mapping[int, Scalar] | None = None) -> None:
        if not rational.is_strictly_proper:
            raise ValueError("rational part must be strictly proper")
        cleaned: dict[int, QuadExt] = {}
        for j, c in (deltas or {}).items():
            if not isinstance(j, int) or j < 1:
                raise ValueError(f"delta position must be a positive int: {j}")
            value = QuadExt.of(c)
            if value:
                cleaned[j] = value
        self._rational = rational
        self._deltas = cleaned

    @classmethod
    def from_ratfunc(cls, num, den=1,
                     deltas: Mapping[int, Scalar] | None = None,
                     ) -> "TransformExpr":
        """Wrap num/den as a transform; accepts Poly, scalar, or
        a coefficient sequence (lowest degree first)."""
        quotient = RatFunc(_as_poly(num), _as_poly(den))
        if not quotient.is_strictly_proper:
            raise ImproperResult(
                f"{quotient} has a polynomial part; "
                "not the transform of any sequence")
        return cls(quotient, deltas)

    @property
    def rational(self) -> RatFunc:
        return self._rational

    @property
    def deltas(self) -> dict[int, QuadExt]:
        return dict(self._deltas)

    @property
    def is_zero(self) -> bool:
        return self._rational.is_zero and not self._deltas

    def as_ratfunc(self) -> RatFunc:
        """Fold the delta tail into a single rational function."""
        if not self._deltas:
            return self._rational
        top = max(self._deltas)
        num = Poly((self._deltas.get(top - k, 0) for k in range(top + 1)))
        return self._rational + RatFunc(num, Poly.monomial(top))

    def __add__(self, other: object) -> "TransformExpr":
        if not isinstance(other, TransformExpr):
            return NotImplemented
        deltas = dict(self._deltas)
        for j, c in other._deltas.items():
            deltas[j] = deltas.get(j, QuadExt(0)) + c
        return TransformExpr(self._rational + other._rational, deltas)

    def __sub__(self, other: object) -> "TransformExpr":
        if not isinstance(other, TransformExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TransformExpr":
        return TransformExpr(-self._rational,
                             {j: -c for j, c in self._deltas.items()})

    def __mul__(self, other: object) -> "TransformExpr":
        if isinstance(other, TransformExpr):
            return convolve(self, other)
        if isinstance(other, (int, Fraction, QuadExt)):
            c = QuadExt.of(other)
            if not c:
                return TransformExpr()
            return TransformExpr(self._rational * c,
                                 {j: v * c for j, v in self._deltas.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransformExpr):
            return NotImplemented
        return self.as_ratfunc() == other.as_ratfunc()

    def __hash__(self) -> int:
        return hash(self.as_ratfunc())

    def eval_float(self, t0: float) -> float:
        value = self._rational.eval_float(t0)
        for j, c in self._deltas.items():
            value += c.to_float() * t0 ** (-j)
        return value

    def render(self, var: str = "t") -> str:
        parts: list[str] = []
        if not self._rational.is_zero or not self._deltas:
            parts.append(self._rational.render(var))
        for j in sorted(self._deltas):
            c = self._deltas[j]
            if var == "e^s":
                tail = f"e^(-{j}s)" if j > 1 else "e^(-s)"
            else:
                tail = f"t^(-{j})" if j > 1 else "t^(-1)"
            if c == QuadExt(1):
                parts.append(tail)
            else:
                text = str(c) if c.is_rational else f"({c})"
                parts.append(f"{text}*{tail}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TransformExpr({self._rational!r}, {self._deltas!r})"


def geometric(a: Scalar) -> TransformExpr:
    """Transform of a^(n-1), with 0^0 = 1 so base 0 means the spike at n=1."""
    base = QuadExt.of(a)
    if not base:
        return TransformExpr(deltas={1: 1})
    return TransformExpr(RatFunc(Poly((1,)), Poly((-base, 1))))


def shift(expr: TransformExpr, k: int, initials: Sequence[Scalar],
          ) -> TransformExpr:
    """Transform of f(n+k) given the first k values of f."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if len(initials) != k:
        raise ValueError(f"shift by {k} needs exactly {k} initial values")
    head = Poly((QuadExt.of(c) for c in reversed(initials)))
    shifted = RatFunc(Poly.monomial(k)) * expr.as_ratfunc() - RatFunc(head)
    return TransformExpr.from_ratfunc(shifted.num, shifted.den)


def difference(expr: TransformExpr, first: Scalar) -> TransformExpr:
    """Transform of (Df)(n) = f(n+1) - f(n) given f(1)."""
    moved = RatFunc(Poly((-1, 1))) * expr.as_ratfunc() - RatFunc(
        Poly((QuadExt.of(first),)))
    return TransformExpr.from_ratfunc(moved.num, moved.den)


def times_n(expr: TransformExpr) -> TransformExpr:
    """Transform of n*f(n): -d/ds on the rational part, rescaled deltas."""
    return TransformExpr(-expr.rational.d_ds(),
                         {j: j * c for j, c in expr.deltas.items()})


def convolve(left: TransformExpr, right: TransformExpr) -> TransformExpr:
    """Transform of the convolution sum_{k=1}^{n-1} f(k) g(n-k)."""
    product = left.as_ratfunc() * right.as_ratfunc()
    return TransformExpr.from_ratfunc(product.num, product.den)


def partial_sum(expr: TransformExpr) -> TransformExpr:
    """Transform of n -> sum_{k=1}^{n-1} f(k); divides by (t - 1)."""
    summed = expr.as_ratfunc() / RatFunc(Poly((-1, 1)))
    return TransformExpr.from_ratfunc(summed.num, summed.den)


def n_power(k: int, limit: int = MAX_N_POWER) -> TransformExpr:
    """Transform of n^k, built by iterating times_n on 1/(t - 1)."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k > limit:
        raise DegreeLimitExceeded(f"n^{k} exceeds the degree limit {limit}")
    expr = geometric(1)
    for _ in range(k):
        expr = times_n(expr)
    return expr

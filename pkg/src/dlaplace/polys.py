"""Polynomials and rational functions in the formal variable t = e^s.

``Poly`` stores coefficients lowest degree first over ``QuadExt``; the zero
polynomial is the empty tuple and reports degree -1.  ``RatFunc`` keeps a
quotient normalized: gcd cancelled and the denominator monic, so equality
is plain coefficient comparison.

``factor_roots`` finds the complete root multiset of a monic denominator
when it splits over Q or a single real quadratic extension (rational root
extraction plus the quadratic formula on the squarefree leftovers, with a
norm trick for denominators that themselves carry radical coefficients).
Anything deeper raises ``UnsupportedFactorization``.

``partial_fractions`` expands a strictly proper quotient over those roots
by solving one exact linear system, which avoids differentiating anything
and keeps repeated roots on the same code path as simple ones.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (ImproperRational, PoleEvaluation, RadicandMismatch,
                     UnsupportedFactorization)
from .exact import QuadExt, _squarefree_split, sort_key

Scalar = Union[int, Fraction, QuadExt]
_ZERO = QuadExt(0)
_ONE = QuadExt(1)


class Poly:
    """A dense univariate polynomial over QuadExt."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [QuadExt.of(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "Poly":
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_roots(cls, *roots: Scalar) -> "Poly":
        """The monic polynomial with exactly the given roots."""
        p = cls((1,))
        for r in roots:
            p = p * cls((-QuadExt.of(r), 1))
        return p

    @property
    def coefficients(self) -> tuple[QuadExt, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        # -1 flags the zero polynomial.
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> QuadExt:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == _ONE

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self._coeffs)

    def coefficient(self, k: int) -> QuadExt:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else _ZERO

    def _coerce(self, other: object) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return Poly((other,))
        return None

    def __add__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return Poly((self.coefficient(i) + o.coefficient(i) for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return Poly((self.coefficient(i) - o.coefficient(i) for i in range(n)))

    def __rsub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self._coeffs))

    def __mul__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly()
        out = [_ZERO] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: object) -> tuple["Poly", "Poly"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        db, lead = o.degree, o.leading
        q = [_ZERO] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            f = rem[-1] / lead
            k = len(rem) - 1 - db
            q[k] = f
            for i, bc in enumerate(o._coeffs):
                rem[k + i] = rem[k + i] - f * bc
            while rem and not rem[-1]:
                rem.pop()
        return Poly(q), Poly(rem)

    def __floordiv__(self, other: object) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: object) -> "Poly":
        return divmod(self, other)[1]

    def __truediv__(self, scalar: object) -> "Poly":
        if isinstance(scalar, (int, Fraction, QuadExt)):
            inv = QuadExt.of(scalar).inverse()
            return Poly((c * inv for c in self._coeffs))
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self / self.leading

    def derivative(self) -> "Poly":
        return Poly((i * c for i, c in enumerate(self._coeffs) if i))

    def conjugate(self) -> "Poly":
        return Poly((c.conjugate() for c in self._coeffs))

    def __call__(self, x: Scalar) -> QuadExt:
        point = QuadExt.of(x)
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c.to_float()
        return acc

    def render(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            body = _term_text(c, k, var)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f" - {body[1:]}")
            else:
                parts.append(f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self._coeffs]})"


def _power_text(k: int, var: str) -> str:
    if var == "e^s":
        return "e^s" if k == 1 else f"e^({k}s)"
    return var if k == 1 else f"{var}^{k}"


def _term_text(c: QuadExt, k: int, var: str) -> str:
    if k == 0:
        return f"({c})" if not c.is_rational else str(c)
    text = _power_text(k, var)
    if c == _ONE:
        return text
    if c == QuadExt(-1):
        return f"-{text}"
    if c.is_rational:
        return f"{c}*{text}"
    return f"({c})*{text}"


# the formal variable, importable as a building block
T = Poly((0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(p, 0) is monic(p)."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic f into [(g_i, i)] with f = prod g_i^i and g_i squarefree."""
    out: list[tuple[Poly, int]] = []
    g = poly_gcd(f, f.derivative()) if f.degree >= 1 else Poly((1,))
    w = f // g
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g) if not g.is_zero else Poly((1,))
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        w, g = y, g // y
        i += 1
    return out


def _integer_coefficients(f: Poly) -> list[int]:
    """Scale a rational-coefficient polynomial to primitive integers."""
    fracs = [c.as_fraction() for c in f.coefficients]
    scale = lcm(*(fr.denominator for fr in fracs)) if fracs else 1
    ints = [int(fr * scale) for fr in fracs]
    content = 0
    for v in ints:
        content = _int_gcd(content, abs(v))
    return [v // content for v in ints] if content > 1 else ints


def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_root_candidates(f: Poly) -> list[Fraction]:
    ints = _integer_coefficients(f)
    ps = _divisors(ints[0])
    qs = _divisors(ints[-1])
    seen: set[Fraction] = set()
    for p in ps:
        for q in qs:
            for sign in (1, -1):
                seen.add(Fraction(sign * p, q))
    return sorted(seen)


def _quadratic_roots(h: Poly) -> list[QuadExt]:
    """Roots of a monic rational quadratic, exact over Q(sqrt(d))."""
    b = h.coefficient(1).as_fraction()
    c = h.coefficient(0).as_fraction()
    disc = b * b - 4 * c
    if disc < 0:
        raise UnsupportedFactorization(
            f"quadratic factor {h} has complex roots")
    assert disc != 0, "repeated root escaped squarefree splitting"
    m, d0 = _squarefree_split(disc.numerator * disc.denominator)
    half = Fraction(1, 2)
    root_rad = Fraction(m, disc.denominator)  # sqrt(disc) = root_rad*sqrt(d0)
    if d0 == 1:
        return [QuadExt(half * (-b + root_rad)), QuadExt(half * (-b - root_rad))]
    return [QuadExt(-b * half, half * root_rad, d0),
            QuadExt(-b * half, -half * root_rad, d0)]


def _factor_rational(f: Poly) -> list[tuple[QuadExt, int]]:
    found: dict[QuadExt, int] = {}
    coeffs = list(f.coefficients)
    zeros = 0
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        zeros += 1
    if zeros:
        found[_ZERO] = zeros
        f = Poly(coeffs)
    if f.degree >= 1:
        for r in _rational_root_candidates(f):
            m = 0
            while f.degree >= 1 and not f(r):
                f = f // Poly((-r, 1))
                m += 1
            if m:
                found[QuadExt(r)] = m
    for h, mult in squarefree_decomposition(f) if f.degree >= 1 else []:
        if h.degree == 1:
            root = -h.coefficient(0)
            found[root] = found.get(root, 0) + mult
        elif h.degree == 2:
            for root in _quadratic_roots(h):
                found[root] = found.get(root, 0) + mult
        else:
            raise UnsupportedFactorization(
                f"irreducible factor of degree {h.degree}: {h}")
    return sorted(found.items(), key=lambda item: sort_key(item[0]))


def factor_roots(den: Poly) -> list[tuple[QuadExt, int]]:
    """Complete root multiset of a monic denominator, or raise.

    Rational coefficients go straight to rational-root extraction plus the
    quadratic formula.  Radical coefficients are handled through the norm
    den * conj(den), whose rational factorization supplies the candidate
    roots; multiplicities are then counted on den itself.
    """
    if den.degree < 1:
        raise ValueError("denominator must have degree >= 1")
    if not den.is_monic:
        raise ValueError("denominator must be monic")
    if den.is_rational:
        return _factor_rational(den)
    norm = (den * den.conjugate()).monic()
    found: list[tuple[QuadExt, int]] = []
    work = den
    try:
        for root, _ in _factor_rational(norm):
            m = 0
            while work.degree >= 1 and not work(root):
                work = work // Poly((-root, 1))
                m += 1
            if m:
                found.append((root, m))
    except RadicandMismatch as exc:
        raise UnsupportedFactorization(
            "roots span more than one quadratic extension") from exc
    if work.degree != 0:
        raise UnsupportedFactorization(f"unfactored part remains: {work}")
    return sorted(found, key=lambda item: sort_key(item[0]))


class RatFunc:
    """A normalized quotient of polynomials in t."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: Poly | Scalar = 0, den: Poly | Scalar = 1) -> None:
        n = num if isinstance(num, Poly) else Poly((num,))
        d = den if isinstance(den, Poly) else Poly((den,))
        if d.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero:
            n, d = Poly(), Poly((1,))
        else:
            g = poly_gcd(n, d)
            if g.degree > 0:
                n, d = n // g, d // g
            lead = d.leading
            if lead != _ONE:
                n, d = n / lead, d / lead
        self._num = n
        self._den = d

    @property
    def num(self) -> Poly:
        return self._num

    @property
    def den(self) -> Poly:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_strictly_proper(self) -> bool:
        return self._num.degree < self._den.degree

    def _coerce(self, other: object) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, QuadExt, Poly)):
            return RatFunc(other if isinstance(other, Poly) else Poly((other,)))
        return None

    def __add__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self._num * o._den + o._num * self._den,
                       self._den * o._den)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self._num * o._den - o._num * self._den,
                       self._den * o._den)

    def __rsub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self._num, self._den)

    def __mul__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def d_ds(self) -> "RatFunc":
        """d/ds of A(e^s), written back in t: t * dA/dt."""
        n, d = self._num, self._den
        return RatFunc(T * (n.derivative() * d - n * d.derivative()), d * d)

    def __call__(self, x: Scalar) -> QuadExt:
        bottom = self._den(x)
        if not bottom:
            raise PoleEvaluation(f"evaluation at pole t = {QuadExt.of(x)}")
        return self._num(x) / bottom

    def eval_float(self, x: float) -> float:
        return self._num.eval_float(x) / self._den.eval_float(x)

    def render(self, var: str = "t") -> str:
        if self.is_zero:
            return "0"
        num_text = self._num.render(var)
        if self._den == Poly((1,)):
            return num_text
        if sum(1 for c in self._num.coefficients if c) > 1:
            num_text = f"({num_text})"
        den_text = self._den.render(var)
        if sum(1 for c in self._den.coefficients if c) > 1 or \
                not self._den.is_monic:
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RatFunc({self._num!r}, {self._den!r})"


@dataclass(frozen=True)
class PFTerm:
    """One summand coefficient/(t - root)^multiplicity."""

    root: QuadExt
    multiplicity: int
    coefficient: QuadExt

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(Poly((self.coefficient,)),
                       Poly((-self.root, 1)) ** self.multiplicity)


def _solve_linear(matrix: list[list[QuadExt]],
                  rhs: list[QuadExt]) -> list[QuadExt]:
    """Exact Gaussian elimination with partial (first-nonzero) pivoting."""
    n = len(rhs)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise ValueError("singular partial-fraction system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def partial_fractions(a: RatFunc) -> list[PFTerm]:
    """Expand a strictly proper quotient as sum c/(t - r)^j, exactly.

    The coefficients solve the linear system obtained by multiplying
    through by the denominator and matching coefficients of t; zero
    coefficients are dropped from the result.
    """
    if a.is_zero:
        return []
    if not a.is_strictly_proper:
        raise ImproperRational(
            f"degree {a.num.degree} over degree {a.den.degree}")
    roots = factor_roots(a.den)
    layout: list[tuple[QuadExt, int]] = []
    basis: list[Poly] = []
    for root, mult in roots:
        linear = Poly((-root, 1))
        quotient = a.den
        for j in range(1, mult + 1):
            quotient, rem = divmod(quotient, linear)
            assert rem.is_zero, "inexact division by a known factor"
            layout.append((root, j))
            basis.append(quotient)
    size = a.den.degree
    matrix = [[basis[c].coefficient(i) for c in range(size)]
              for i in range(size)]
    rhs = [a.num.coefficient(i) for i in range(size)]
    solution = _solve_linear(matrix, rhs)
    return [PFTerm(root=root, multiplicity=j, coefficient=c)
            for (root, j), c in zip(layout, solution) if c]

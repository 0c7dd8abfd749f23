"""Initial value problems for linear constant-coefficient recurrences.

A problem is

    a(n+k) = c_{k-1} a(n+k-1) + ... + c_0 a(n) + forcing(n),   n >= 1,

with rational coefficients, rational initial values a(1)..a(k) and forcing
built from rational multiples of n^p (p bounded) and b^n (b a positive
rational that must not hit a characteristic root).  Transforming both
sides with the shift rule and solving for the unknown transform L gives

    L = (initial polynomial + forcing transform) / characteristic polynomial

which the sequence engine then inverts into a closed form.  Every solve
re-checks its own answer against direct recursion before returning; a
mismatch raises ``VerificationFailed`` and means a bug, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .errors import ResonantForcing, UnsupportedForcing, VerificationFailed
from .exact import QuadExt, SQRT5
from .polys import Poly, RatFunc
from .transforms import MAX_N_POWER, TransformExpr, geometric, n_power
from .sequences import (ClosedFormSequence, delta, equal_prefix,
                        fibonacci_normal, inverse_transform)

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class PowerTerm:
    """coefficient * n^exponent as a forcing summand."""

    coefficient: Fraction
    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.exponent < 0:
            raise UnsupportedForcing("negative powers of n are not supported")
        if self.exponent > MAX_N_POWER:
            raise UnsupportedForcing(
                f"n^{self.exponent} exceeds the degree limit {MAX_N_POWER}")


@dataclass(frozen=True)
class GeometricTerm:
    """coefficient * base^n as a forcing summand."""

    coefficient: Fraction
    base: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        object.__setattr__(self, "base", Fraction(self.base))
        if self.base <= 0:
            raise UnsupportedForcing(
                f"geometric forcing needs a positive base, got {self.base}")


ForcingTerm = Union[PowerTerm, GeometricTerm]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order, coefficients c_0..c_{k-1}, forcing terms and initial values."""

    order: int
    coefficients: tuple[Fraction, ...]
    initials: tuple[Fraction, ...]
    forcing: tuple[ForcingTerm, ...] = ()

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be at least 1")
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        inits = tuple(Fraction(v) for v in self.initials)
        if len(coeffs) != self.order:
            raise ValueError(
                f"order {self.order} needs {self.order} coefficients")
        if len(inits) != self.order:
            raise ValueError(
                f"order {self.order} needs {self.order} initial values")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "initials", inits)
        object.__setattr__(self, "forcing", tuple(self.forcing))

    @property
    def is_homogeneous(self) -> bool:
        return not self.forcing

    @property
    def is_fibonacci_form(self) -> bool:
        return (self.order == 2 and not self.forcing
                and self.coefficients == (Fraction(1), Fraction(1)))

    def characteristic(self) -> Poly:
        """t^k - c_{k-1} t^(k-1) - ... - c_0."""
        return Poly(tuple(-c for c in self.coefficients) + (1,))

    def forcing_value(self, n: int) -> Fraction:
        total = Fraction(0)
        for term in self.forcing:
            if isinstance(term, PowerTerm):
                total += term.coefficient * n ** term.exponent
            else:
                total += term.coefficient * term.base ** n
        return total

    @classmethod
    def fibonacci(cls, a1: RationalLike = 1, a2: RationalLike = 1,
                  ) -> "RecurrenceSpec":
        """a(n+2) = a(n+1) + a(n) with the given two starting values."""
        return cls(2, (Fraction(1), Fraction(1)),
                   (Fraction(a1), Fraction(a2)))

    @classmethod
    def affine(cls, lam: RationalLike, beta: RationalLike,
               a1: RationalLike) -> "RecurrenceSpec":
        """a(n+1) = lam*a(n) + beta."""
        forcing = (PowerTerm(Fraction(beta), 0),) if beta else ()
        return cls(1, (Fraction(lam),), (Fraction(a1),), forcing)

    @classmethod
    def from_delta(cls, forcing: Sequence[ForcingTerm],
                   first: RationalLike) -> "RecurrenceSpec":
        """(Df)(n) = forcing(n) with f(1) given, as f(n+1) = f(n) + forcing."""
        return cls(1, (Fraction(1),), (Fraction(first),), tuple(forcing))

    @classmethod
    def from_delta2(cls, forcing: Sequence[ForcingTerm],
                    first: RationalLike, first_difference: RationalLike,
                    ) -> "RecurrenceSpec":
        """(D^2 f)(n) = forcing(n) given f(1) and (Df)(1)."""
        f1 = Fraction(first)
        f2 = f1 + Fraction(first_difference)
        return cls(2, (Fraction(-1), Fraction(2)), (f1, f2), tuple(forcing))


class RecursiveSequence:
    """Direct iteration of a RecurrenceSpec, memoized; the ground truth."""

    def __init__(self, spec: RecurrenceSpec) -> None:
        self.spec = spec
        self._values: list[Fraction] = list(spec.initials)

    def __call__(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequences start at n = 1")
        spec = self.spec
        while len(self._values) < n:
            m = len(self._values) - spec.order + 1
            nxt = spec.forcing_value(m)
            for j, c in enumerate(spec.coefficients):
                if c:
                    nxt += c * self._values[m - 1 + j]
            self._values.append(nxt)
        return self._values[n - 1]


def _initial_polynomial(spec: RecurrenceSpec) -> Poly:
    """Initial data contributed by shifting both sides of the recurrence.

    Shifting a by k contributes sum_i a(i) t^(k-i); each right-hand shift
    by j contributes -c_j * sum_{i<=j} a(i) t^(j-i).
    """
    k = spec.order
    total = Poly(tuple(reversed(spec.initials)))
    for j in range(1, k):
        c = spec.coefficients[j]
        if c:
            piece = Poly(tuple(reversed(spec.initials[:j])))
            total = total - Poly.constant(c) * piece
    return total


def _forcing_transform(spec: RecurrenceSpec) -> TransformExpr:
    char = spec.characteristic()
    total = TransformExpr()
    for term in spec.forcing:
        if isinstance(term, PowerTerm):
            total = total + n_power(term.exponent) * term.coefficient
        else:
            if not char(term.base):
                raise ResonantForcing(
                    f"forcing base {term.base} is a characteristic root")
            # b^n = b * b^(n-1)
            total = total + geometric(term.base) * (
                term.coefficient * term.base)
    return total


@dataclass
class SolutionReport:
    """Everything a solve produces, ready for rendering or JSON."""

    spec: RecurrenceSpec
    transform: TransformExpr
    closed_form: ClosedFormSequence
    verified_upto: int
    coefficient_decomposition: Optional[tuple[ClosedFormSequence,
                                              ClosedFormSequence]] = None

    def values(self, count: int = 10) -> list[Fraction]:
        out = []
        for n in range(1, count + 1):
            value = self.closed_form(n)
            assert value.is_rational, "rational spec produced a radical value"
            out.append(value.as_fraction())
        return out

    def closed_form_text(self) -> str:
        pretty = fibonacci_normal(self.closed_form)
        return pretty if pretty is not None else str(self.closed_form)

    def to_json_dict(self, count: int = 10) -> dict:
        folded = self.transform.as_ratfunc()
        return {
            "closed_form": {
                "text": self.closed_form_text(),
                "terms": [{
                    "coefficient": _quadext_json(t.coefficient),
                    "root": _quadext_json(t.root),
                    "multiplicity": t.multiplicity,
                } for t in self.closed_form.terms],
                "deltas": {str(j): _quadext_json(c)
                           for j, c in self.closed_form.deltas.items()},
            },
            "transform": {
                "text": self.transform.render("e^s"),
                "num": [_quadext_json(c) for c in folded.num.coefficients],
                "den": [_quadext_json(c) for c in folded.den.coefficients],
            },
            "values": [str(v) for v in self.values(count)],
            "verified_upto": self.verified_upto,
        }


def _quadext_json(value: QuadExt) -> dict:
    return {
        "rational": str(value.rational_part),
        "radical": str(value.radical_part),
        "radicand": value.radicand,
    }


def transform_of(spec: RecurrenceSpec) -> TransformExpr:
    """The transform L of the IVP solution, as a rational function of t."""
    char = RatFunc(spec.characteristic())
    init = RatFunc(_initial_polynomial(spec))
    forcing = _forcing_transform(spec).as_ratfunc()
    quotient = (init + forcing) / char
    return TransformExpr.from_ratfunc(quotient.num, quotient.den)


def _solve_checked(spec: RecurrenceSpec, verify_upto: int,
                   ) -> tuple[TransformExpr, ClosedFormSequence]:
    expr = transform_of(spec)
    closed = inverse_transform(expr)
    reference = RecursiveSequence(spec)
    for n in range(1, verify_upto + 1):
        got = closed(n)
        if not got.is_rational or got.as_fraction() != reference(n):
            raise VerificationFailed(
                f"closed form disagrees with recursion at n = {n}: "
                f"{got} vs {reference(n)}")
    return expr, closed


def solve_ivp(spec: RecurrenceSpec, verify_upto: int = 64,
              ) -> SolutionReport:
    """Solve the IVP exactly and self-check against direct recursion."""
    expr, closed = _solve_checked(spec, verify_upto)
    decomposition = None
    if spec.order == 2 and spec.is_homogeneous:
        basis = []
        for initials in ((Fraction(1), Fraction(0)),
                         (Fraction(0), Fraction(1))):
            basis_spec = RecurrenceSpec(spec.order, spec.coefficients,
                                        initials)
            basis.append(_solve_checked(basis_spec, verify_upto)[1])
        decomposition = (basis[0], basis[1])
    return SolutionReport(spec, expr, closed, verify_upto, decomposition)


def solve_affine(lam: RationalLike, beta: RationalLike, a1: RationalLike,
                 verify_upto: int = 64) -> SolutionReport:
    """Solve a(n+1) = lam*a(n) + beta and cross-check the textbook form.

    For lam != 1 the answer is (a1 + beta/(lam-1)) lam^(n-1) + beta/(1-lam);
    for lam = 1 it is the arithmetic progression a1 + beta (n-1).
    """
    lam, beta, a1 = Fraction(lam), Fraction(beta), Fraction(a1)
    report = solve_ivp(RecurrenceSpec.affine(lam, beta, a1), verify_upto)
    if lam == 1:
        expected = ClosedFormSequence([(a1, 1, 1), (beta, 1, 2)])
    else:
        expected = ClosedFormSequence([
            (a1 + beta / (lam - 1), lam, 1),
            (beta / (1 - lam), 1, 1),
        ])
    if report.closed_form != expected:
        raise VerificationFailed(
            "affine solve disagrees with the closed formula: "
            f"{report.closed_form} vs {expected}")
    return report


def fibonacci_coefficients(n: int) -> tuple[QuadExt, QuadExt]:
    """Weights (gamma_n, beta_n) with a(n) = gamma_n a(1) + beta_n a(2).

    Both come out of the radical closed forms

        gamma_n = ((sqrt5-1)(1+sqrt5)^(n-1) + (sqrt5+1)(1-sqrt5)^(n-1))
                  / (2^n sqrt5)
        beta_n  = ((1+sqrt5)^(n-1) - (1-sqrt5)^(n-1)) / (2^(n-1) sqrt5)

    and are plain rationals (integers, in fact) for every n >= 1.
    """
    if n < 1:
        raise ValueError("sequences start at n = 1")
    plus = QuadExt(1) + SQRT5
    minus = QuadExt(1) - SQRT5
    gamma = ((SQRT5 - 1) * plus ** (n - 1) + (SQRT5 + 1) * minus ** (n - 1)) \
        / (SQRT5 * 2 ** n)
    beta = (plus ** (n - 1) - minus ** (n - 1)) / (SQRT5 * 2 ** (n - 1))
    assert gamma.is_rational and beta.is_rational
    return gamma, beta


@dataclass
class VerificationReport:
    """Outcome of checking a proposed solution against its spec."""

    passed: bool
    checked_upto: int
    first_failure: Optional[int] = None
    detail: str = ""


def verify_solution(spec: RecurrenceSpec, seq: Callable[[int], object],
                    upto: int = 64) -> VerificationReport:
    """Check initial values, the recurrence itself, and (for the
    Fibonacci-form) the difference identity D^2 a + D a = a."""
    def value(n: int) -> QuadExt:
        return QuadExt.of(seq(n))  # type: ignore[arg-type]

    for i, expected in enumerate(spec.initials, start=1):
        if value(i) != expected:
            return VerificationReport(
                False, upto, i, f"initial value a({i}) is {seq(i)}, "
                f"expected {expected}")
    k = spec.order
    for n in range(1, upto - k + 1):
        rhs = QuadExt.of(spec.forcing_value(n))
        for j, c in enumerate(spec.coefficients):
            if c:
                rhs = rhs + c * value(n + j)
        if value(n + k) != rhs:
            return VerificationReport(
                False, upto, n + k,
                f"recurrence fails producing a({n + k})")
    if spec.is_fibonacci_form:
        first_diff = delta(seq)
        second_diff = delta(first_diff)
        for n in range(1, upto - 1):
            identity = QuadExt.of(second_diff(n)) + QuadExt.of(first_diff(n))
            if identity != value(n):
                return VerificationReport(
                    False, upto, n,
                    "difference identity D^2 a + D a = a fails")
    return VerificationReport(True, upto)


def inverse_square_partial(n: int) -> Fraction:
    """f(n) = 1 + sum_{k=1}^{n-1} 1/k^2.

    This is the exact solution of (Df)(n) = 1/n^2 with f(2) = 2; the values
    stay rational but no rational-transform closed form exists for them.
    """
    total = Fraction(1)
    for k in range(1, n):
        total += Fraction(1, k * k)
    return total


def check_inverse_square_ivp(upto: int = 200) -> bool:
    """Confirm the partial-sum solution satisfies its IVP exactly."""
    if inverse_square_partial(2) != 2:
        return False
    values = [inverse_square_partial(n) for n in range(1, upto + 2)]
    return all(values[n] - values[n - 1] == Fraction(1, n * n)
               for n in range(1, upto + 1))


def integer_valued_prefix(seq: Callable[[int], object], upto: int) -> bool:
    """True when the first values are all integers (exactly)."""
    for n in range(1, upto + 1):
        value = QuadExt.of(seq(n))  # type: ignore[arg-type]
        if not value.is_rational or value.as_fraction().denominator != 1:
            return False
    return True

"""Sequences as exact callables and closed forms built from transform data.

A closed form here is a finite sum of terms

    coefficient * C(n-1, m-1) * root^(n-m)

(one term per pole, multiplicity m) plus finitely many Kronecker deltas.
That shape is exactly what inverting a strictly proper rational transform
produces: a simple pole at r gives r^(n-1), an m-fold pole gives the
(m-1)-fold self-convolution of that geometric sequence, and poles at zero
collapse to single-point spikes.  The binomial factor vanishes for n < m,
so no negative powers of the root are ever formed and a zero root never
meets a negative exponent (0^0 counts as 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Union

from .exact import PHI, PSI, QuadExt, sort_key
from .polys import partial_fractions
from . import transforms
from .transforms import TransformExpr

Scalar = Union[int, Fraction, QuadExt]
Sequence1 = Callable[[int], Scalar]


@dataclass(frozen=True)
class Term:
    """One summand coefficient * C(n-1, mult-1) * root^(n-mult)."""

    coefficient: QuadExt
    root: QuadExt
    multiplicity: int


class ClosedFormSequence:
    """An exact sequence given by pole terms plus Kronecker deltas."""

    __slots__ = ("_terms", "_deltas")

    def __init__(self, terms: Iterable[Term | tuple] = (),
                 deltas: Mapping[int, Scalar] | None = None) -> None:
        collected: dict[tuple[QuadExt, int], QuadExt] = {}
        spikes: dict[int, QuadExt] = {}
        for j, c in (deltas or {}).items():
            if not isinstance(j, int) or j < 1:
                raise ValueError(f"delta position must be a positive int: {j}")
            spikes[j] = spikes.get(j, QuadExt(0)) + QuadExt.of(c)
        for item in terms:
            if isinstance(item, Term):
                c, r, m = item.coefficient, item.root, item.multiplicity
            else:
                c, r, m = item
            c, r = QuadExt.of(c), QuadExt.of(r)
            if m < 1:
                raise ValueError(f"multiplicity must be positive: {m}")
            if not r:
                # coefficient * C(n-1, m-1) * 0^(n-m) is a spike at n = m
                spikes[m] = spikes.get(m, QuadExt(0)) + c
                continue
            key = (r, m)
            collected[key] = collected.get(key, QuadExt(0)) + c
        kept = [Term(c, r, m) for (r, m), c in collected.items() if c]
        kept.sort(key=lambda term: (sort_key(term.root), term.multiplicity))
        self._terms = tuple(kept)
        self._deltas = {j: c for j, c in sorted(spikes.items()) if c}

    @property
    def terms(self) -> tuple[Term, ...]:
        return self._terms

    @property
    def deltas(self) -> dict[int, QuadExt]:
        return dict(self._deltas)

    @property
    def is_zero(self) -> bool:
        return not self._terms and not self._deltas

    def __call__(self, n: int) -> QuadExt:
        if n < 1:
            raise ValueError("sequences start at n = 1")
        total = QuadExt(0)
        for term in self._terms:
            weight = comb(n - 1, term.multiplicity - 1)
            if weight:
                total = total + term.coefficient * weight * \
                    term.root ** (n - term.multiplicity)
        spike = self._deltas.get(n)
        if spike is not None:
            total = total + spike
        return total

    def __add__(self, other: object) -> "ClosedFormSequence":
        if not isinstance(other, ClosedFormSequence):
            return NotImplemented
        deltas = dict(self._deltas)
        for j, c in other._deltas.items():
            deltas[j] = deltas.get(j, QuadExt(0)) + c
        return ClosedFormSequence(self._terms + other._terms, deltas)

    def scale(self, factor: Scalar) -> "ClosedFormSequence":
        c = QuadExt.of(factor)
        return ClosedFormSequence(
            [Term(t.coefficient * c, t.root, t.multiplicity)
             for t in self._terms],
            {j: v * c for j, v in self._deltas.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedFormSequence):
            return NotImplemented
        return self._terms == other._terms and self._deltas == other._deltas

    def __hash__(self) -> int:
        return hash((self._terms, tuple(sorted(self._deltas.items()))))

    def transform(self) -> TransformExpr:
        """Forward transform, assembled term by term from the rules."""
        total = TransformExpr()
        for term in self._terms:
            piece = transforms.geometric(term.root)
            for _ in range(term.multiplicity - 1):
                piece = transforms.convolve(piece, transforms.geometric(term.root))
            total = total + piece * term.coefficient
        if self._deltas:
            total = total + TransformExpr(deltas=self._deltas)
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [_term_text(t) for t in self._terms]
        parts += [_spike_text(j, c) for j, c in self._deltas.items()]
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"ClosedFormSequence({list(self._terms)!r}, {self._deltas!r})"


def _coeff_text(c: QuadExt) -> str:
    return str(c) if c.is_rational and c >= 0 else f"({c})"


def _root_power_text(root: QuadExt, exponent_shift: int) -> str:
    plain = (root.is_rational and root >= 0
             and root.rational_part.denominator == 1)
    base = str(root) if plain else f"({root})"
    if exponent_shift == 1:
        return f"{base}^(n-1)"
    return f"{base}^(n-{exponent_shift})"


def _term_text(term: Term) -> str:
    c, r, m = term.coefficient, term.root, term.multiplicity
    factors: list[str] = []
    if m == 2:
        factors.append("(n-1)")
    elif m > 2:
        factors.append(f"C(n-1,{m - 1})")
    if r != QuadExt(1):
        factors.append(_root_power_text(r, m))
    if not factors:
        return str(c) if c.is_rational else f"({c})"
    if c == QuadExt(1):
        return "*".join(factors)
    if c == QuadExt(-1):
        return "-" + "*".join(factors)
    return "*".join([_coeff_text(c)] + factors)


def _spike_text(j: int, c: QuadExt) -> str:
    if c == QuadExt(1):
        return f"delta(n,{j})"
    return f"{_coeff_text(c)}*delta(n,{j})"


def inverse_transform(expr: TransformExpr) -> ClosedFormSequence:
    """Invert a transform into its closed form via partial fractions."""
    pieces = partial_fractions(expr.rational)
    return ClosedFormSequence(
        [Term(p.coefficient, p.root, p.multiplicity) for p in pieces],
        expr.deltas)


def delta(f: Sequence1) -> Sequence1:
    """The forward difference (Df)(n) = f(n+1) - f(n)."""
    return lambda n: f(n + 1) - f(n)


def convolve(f: Sequence1, g: Sequence1, n: int) -> QuadExt:
    """(f*g)(n) = sum_{k=1}^{n-1} f(k) g(n-k); empty at n = 1."""
    total = QuadExt(0)
    for k in range(1, n):
        total = total + QuadExt.of(f(k)) * QuadExt.of(g(n - k))
    return total


def partial_sums(f: Sequence1) -> Sequence1:
    """n -> sum_{k=1}^{n-1} f(k), the running sum below n."""
    def summed(n: int) -> QuadExt:
        total = QuadExt(0)
        for k in range(1, n):
            total = total + QuadExt.of(f(k))
        return total
    return summed


def equal_prefix(f: Sequence1, g: Sequence1, upto: int,
                 ) -> tuple[bool, int | None]:
    """Compare two sequences for n = 1..upto; report the first mismatch."""
    for n in range(1, upto + 1):
        if QuadExt.of(f(n)) != QuadExt.of(g(n)):
            return False, n
    return True, None


def fibonacci_normal(seq: ClosedFormSequence) -> str | None:
    """Render u*(1+sqrt(5))^n + v*(1-sqrt(5))^n over 2^n*sqrt(5), if exact.

    Applies only to closed forms whose poles are exactly the two roots of
    t^2 - t - 1, each simple; returns None otherwise.
    """
    if seq.deltas or len(seq.terms) != 2:
        return None
    by_root = {t.root: t for t in seq.terms}
    if set(by_root) != {PHI, PSI} or any(
            t.multiplicity != 1 for t in seq.terms):
        return None
    sqrt5 = QuadExt(0, 1, 5)
    # c*phi^(n-1) = u*(1+sqrt5)^n/(2^n sqrt5)  with  u = c*sqrt5/phi
    u = by_root[PHI].coefficient * sqrt5 / PHI
    v = by_root[PSI].coefficient * sqrt5 / PSI
    first = _numerator_text(u, "(1+sqrt(5))^n")
    second = _numerator_text(v, "(1-sqrt(5))^n")
    joined = first + (f" - {second[1:]}" if second.startswith("-")
                      else f" + {second}")
    return f"({joined})/(2^n*sqrt(5))"


def _numerator_text(c: QuadExt, body: str) -> str:
    if c == QuadExt(1):
        return body
    if c == QuadExt(-1):
        return f"-{body}"
    return f"{_coeff_text(c)}*{body}"

"""A tiny text language for recurrence initial value problems.

Grammar (whitespace insensitive):

    program    := stmt (";" stmt)*
    stmt       := recurrence | initial
    recurrence := "a[n+" INT "]" "=" expr
    initial    := "a[" INT "]" "=" signed
    expr       := signed_term (("+" | "-") term)*
    term       := RATIONAL ("*"? atom)? | atom
    atom       := "a[n+" INT "]" | "a[n]" | "n" ("^" INT)?
                | RATIONAL "^n" | RATIONAL
    RATIONAL   := INT ("/" INT)?

A leading "-" is accepted on the first term of an expression and on
initial values (the grammar above would otherwise have no way to write a
negative coefficient).  Example:

    a[n+2] = a[n+1] + a[n]; a[1] = 1; a[2] = 1

Parsing produces a ``DslProgram``; semantic validation (exactly one
recurrence, right-hand shifts strictly below the left-hand one, initial
values covering 1..k exactly once) happens during assembly and raises
``SemanticError``.  ``ParseError`` carries line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, SemanticError
from .solver import ForcingTerm, GeometricTerm, PowerTerm, RecurrenceSpec

_SYMBOLS = {
    "[": "LBRACK", "]": "RBRACK", "+": "PLUS", "-": "MINUS", "*": "STAR",
    "/": "SLASH", "^": "CARET", "=": "EQUALS", ";": "SEMI",
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            tokens.append(Token("INT", source[start:i], line, column))
            column += i - start
            continue
        if ch in ("a", "n"):
            tokens.append(Token("NAME", ch, line, column))
            i += 1
            column += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(_SYMBOLS[ch], ch, line, column))
            i += 1
            column += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(Token("EOF", "", line, column))
    return tokens


@dataclass
class DslProgram:
    """A parsed and validated IVP, normalized to collected coefficients."""

    order: int
    shifts: dict[int, Fraction]      # j -> coefficient of a[n+j]
    powers: dict[int, Fraction]      # p -> coefficient of n^p (0 = constant)
    geometrics: dict[Fraction, Fraction]  # base -> coefficient of base^n
    initials: dict[int, Fraction]
    options: dict[str, str] = field(default_factory=dict)

    def to_spec(self) -> RecurrenceSpec:
        coefficients = tuple(self.shifts.get(j, Fraction(0))
                             for j in range(self.order))
        forcing: list[ForcingTerm] = []
        for p in sorted(self.powers):
            forcing.append(PowerTerm(self.powers[p], p))
        for base in sorted(self.geometrics):
            forcing.append(GeometricTerm(self.geometrics[base], base))
        initials = tuple(self.initials[i] for i in range(1, self.order + 1))
        return RecurrenceSpec(self.order, coefficients, initials,
                              tuple(forcing))

    def render(self) -> str:
        """Canonical text that parses back to an equal program."""
        terms: list[tuple[Fraction, str]] = []
        for j in sorted(self.shifts, reverse=True):
            terms.append((self.shifts[j], f"a[n+{j}]" if j else "a[n]"))
        for p in sorted(self.powers, reverse=True):
            if p == 0:
                continue
            terms.append((self.powers[p], "n" if p == 1 else f"n^{p}"))
        for base in sorted(self.geometrics):
            terms.append((self.geometrics[base], f"{base}^n"))
        if Fraction(0) != self.powers.get(0, Fraction(0)):
            terms.append((self.powers[0], ""))
        rhs = ""
        for coeff, body in terms:
            text = _coeff_body_text(abs(coeff), body)
            if not rhs:
                rhs = f"-{text}" if coeff < 0 else text
            else:
                rhs += f" - {text}" if coeff < 0 else f" + {text}"
        pieces = [f"a[n+{self.order}] = {rhs or '0'}"]
        for i in sorted(self.initials):
            pieces.append(f"a[{i}] = {self.initials[i]}")
        return "; ".join(pieces)


def _coeff_body_text(coeff: Fraction, body: str) -> str:
    if not body:
        return str(coeff)
    if coeff == 1:
        return body
    return f"{coeff}*{body}"


@dataclass(frozen=True)
class _RawTerm:
    coefficient: Fraction
    kind: str          # "shift", "power", "geometric", "constant"
    shift: int = 0
    power: int = 0
    base: Fraction = Fraction(0)


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.index = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "EOF":
            self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise ParseError(
                f"expected {what}, found {token.text or 'end of input'!r}",
                token.line, token.column)
        return self.advance()

    def fail(self, message: str) -> ParseError:
        token = self.peek()
        return ParseError(message, token.line, token.column)

    # -- grammar productions --------------------------------------------

    def parse_program(self) -> DslProgram:
        recurrences: list[tuple[int, list[_RawTerm], Token]] = []
        initials: list[tuple[int, Fraction, Token]] = []
        while True:
            self.parse_stmt(recurrences, initials)
            if self.peek().kind == "SEMI":
                self.advance()
                if self.peek().kind == "EOF":
                    break
                continue
            self.expect("EOF", "';' or end of input")
            break
        return _assemble(recurrences, initials)

    def parse_stmt(self, recurrences, initials) -> None:
        opener = self.expect("NAME", "'a'")
        if opener.text != "a":
            raise ParseError("statements start with 'a['",
                             opener.line, opener.column)
        self.expect("LBRACK", "'['")
        token = self.peek()
        if token.kind == "NAME" and token.text == "n":
            self.advance()
            shift = 0
            if self.peek().kind == "PLUS":
                self.advance()
                shift = int(self.expect("INT", "a shift amount").text)
            self.expect("RBRACK", "']'")
            self.expect("EQUALS", "'='")
            terms = self.parse_expr()
            recurrences.append((shift, terms, opener))
        elif token.kind == "INT":
            index = int(self.advance().text)
            self.expect("RBRACK", "']'")
            self.expect("EQUALS", "'='")
            value = self.parse_signed_rational()
            initials.append((index, value, opener))
        else:
            raise ParseError("expected 'n' or an index inside 'a[...]'",
                             token.line, token.column)

    def parse_expr(self) -> list[_RawTerm]:
        sign = 1
        if self.peek().kind == "MINUS":
            self.advance()
            sign = -1
        elif self.peek().kind == "PLUS":
            self.advance()
        terms = [self.parse_term(sign)]
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = 1 if self.advance().kind == "PLUS" else -1
            terms.append(self.parse_term(sign))
        return terms

    def parse_term(self, sign: int) -> _RawTerm:
        token = self.peek()
        if token.kind == "INT":
            value = self.parse_rational()
            if self.peek().kind == "CARET":
                # RATIONAL^n, a geometric atom with coefficient 1
                self.advance()
                self.expect_name("n")
                return _RawTerm(Fraction(sign), "geometric", base=value)
            if self.peek().kind == "STAR":
                self.advance()
                return self.parse_atom(sign * value, required=True)
            return self.parse_atom(sign * value, required=False)
        return self.parse_atom(Fraction(sign), required=True)

    def parse_atom(self, coefficient: Fraction, required: bool) -> _RawTerm:
        token = self.peek()
        if token.kind == "NAME" and token.text == "a":
            self.advance()
            self.expect("LBRACK", "'['")
            self.expect_name("n")
            shift = 0
            if self.peek().kind == "PLUS":
                self.advance()
                shift = int(self.expect("INT", "a shift amount").text)
            self.expect("RBRACK", "']'")
            return _RawTerm(coefficient, "shift", shift=shift)
        if token.kind == "NAME" and token.text == "n":
            self.advance()
            power = 1
            if self.peek().kind == "CARET":
                self.advance()
                power = int(self.expect("INT", "an exponent").text)
            return _RawTerm(coefficient, "power", power=power)
        if token.kind == "INT":
            value = self.parse_rational()
            if self.peek().kind == "CARET":
                self.advance()
                self.expect_name("n")
                return _RawTerm(coefficient, "geometric", base=value)
            return _RawTerm(coefficient * value, "constant")
        if required:
            raise ParseError(
                f"expected a term, found {token.text or 'end of input'!r}",
                token.line, token.column)
        return _RawTerm(coefficient, "constant")

    def expect_name(self, name: str) -> None:
        token = self.peek()
        if token.kind != "NAME" or token.text != name:
            raise ParseError(f"expected '{name}'", token.line, token.column)
        self.advance()

    def parse_rational(self) -> Fraction:
        whole = self.expect("INT", "a number")
        value = Fraction(int(whole.text))
        if self.peek().kind == "SLASH":
            self.advance()
            bottom = self.expect("INT", "a denominator")
            if int(bottom.text) == 0:
                raise ParseError("denominator cannot be zero",
                                 bottom.line, bottom.column)
            value /= int(bottom.text)
        return value

    def parse_signed_rational(self) -> Fraction:
        sign = 1
        if self.peek().kind == "MINUS":
            self.advance()
            sign = -1
        elif self.peek().kind == "PLUS":
            self.advance()
        return sign * self.parse_rational()


def _assemble(recurrences, initials) -> DslProgram:
    if not recurrences:
        raise SemanticError("no recurrence statement found")
    if len(recurrences) > 1:
        raise SemanticError("more than one recurrence statement")
    order, raw_terms, _ = recurrences[0]
    if order < 1:
        raise SemanticError("the left side must be a[n+k] with k >= 1")
    shifts: dict[int, Fraction] = {}
    powers: dict[int, Fraction] = {}
    geometrics: dict[Fraction, Fraction] = {}
    for term in raw_terms:
        if term.kind == "shift":
            if term.shift >= order:
                raise SemanticError(
                    f"right-hand shift a[n+{term.shift}] must be below "
                    f"the left-hand a[n+{order}]")
            shifts[term.shift] = shifts.get(term.shift, Fraction(0)) \
                + term.coefficient
        elif term.kind == "power":
            powers[term.power] = powers.get(term.power, Fraction(0)) \
                + term.coefficient
        elif term.kind == "geometric":
            geometrics[term.base] = geometrics.get(term.base, Fraction(0)) \
                + term.coefficient
        else:
            powers[0] = powers.get(0, Fraction(0)) + term.coefficient
    shifts = {j: c for j, c in shifts.items() if c}
    powers = {p: c for p, c in powers.items() if c}
    geometrics = {b: c for b, c in geometrics.items() if c}
    seen: dict[int, Fraction] = {}
    for index, value, token in initials:
        if index in seen:
            raise SemanticError(f"initial value a[{index}] given twice")
        if index < 1 or index > order:
            raise SemanticError(
                f"initial value a[{index}] is outside 1..{order}")
        seen[index] = value
    missing = [i for i in range(1, order + 1) if i not in seen]
    if missing:
        wanted = ", ".join(f"a[{i}]" for i in missing)
        raise SemanticError(f"missing initial values: {wanted}")
    return DslProgram(order, shifts, powers, geometrics, seen)


def parse_program(source: str) -> DslProgram:
    """Parse and validate recurrence text into a DslProgram."""
    return _Parser(_tokenize(source)).parse_program()

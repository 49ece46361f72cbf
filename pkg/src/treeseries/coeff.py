"""Exact coefficients: rationals and commutative polynomials over the rationals.

Rationals are :class:`fractions.Fraction` values, with integral ones kept
as plain ``int`` (they compare and hash equal, and are much faster to
multiply).  Polynomials are :class:`Poly` instances.  The two mix freely
in ring arithmetic: a rational promotes to a constant polynomial when
combined with one.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple[tuple[str, int], ...]
RingValue = Union[int, Fraction, "Poly"]

ZERO = Fraction(0)
ONE = 1


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _monomial_key(m: Monomial) -> tuple:
    return (sum(e for _, e in m), m)


class Poly:
    """Commutative polynomial with rational coefficients.

    Stored as a mapping from monomials (sorted tuples of ``(name, exponent)``)
    to nonzero fractions.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    mono = tuple(sorted((n, e) for n, e in mono if e))
                    total = clean.get(mono, ZERO) + c
                    if total:
                        clean[mono] = total
                    else:
                        clean.pop(mono, None)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def var(cls, name: str) -> Poly:
        if not name or not _IDENT.fullmatch(name):
            raise ValueError(f"invalid variable name {name!r}")
        return cls({((name, 1),): ONE})

    @classmethod
    def const(cls, c: Fraction | int) -> Poly:
        return cls({(): Fraction(c)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def variables(self) -> set[str]:
        return {n for mono in self._terms for n, _ in mono}

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant(self) -> Fraction:
        return self._terms.get((), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # arithmetic
    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        merged = dict(self._terms)
        for m, c in o._terms.items():
            merged[m] = merged.get(m, ZERO) + c
        return Poly(merged)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _monomial_mul(m1, m2)
                out[m] = out.get(m, ZERO) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: _monomial_key(mc[0]))

    def __str__(self) -> str:
        return format_value(self)

    def __repr__(self) -> str:
        return f"Poly({format_value(self)!r})"


# ring contract -----------------------------------------------------------

def as_value(x) -> RingValue:
    """Coerce to the canonical ring representation (integral rationals become int)."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, str):
        return parse_value(x)
    raise TypeError(f"not a ring value: {x!r}")


def ring_arith(op: str, a, b=None):
    """Dispatch one ring operation by name.

    ``op`` is one of add, neg, mul, eq, is_one, is_zero.
    """
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    if op == "is_one":
        return a == 1
    if op == "is_zero":
        return not a
    raise ValueError(f"unknown ring operation {op!r}")


def simplify(x: RingValue) -> RingValue:
    """Demote constant polynomials to fractions."""
    if isinstance(x, Poly) and x.is_constant():
        x = x.constant()
    return as_value(x) if isinstance(x, Fraction) else x


def product(values: Iterable[RingValue]) -> RingValue:
    out: RingValue = ONE
    for v in values:
        out = out * v
        if not out:
            return out
    return out


# text format ---------------------------------------------------------------

def _format_fraction(q: Fraction) -> str:
    return str(q)


def _format_monomial(m: Monomial) -> str:
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in m)


def format_value(x: RingValue) -> str:
    """Canonical text: graded-lex ordered terms, e.g. ``1/2 - c + a*b^2``."""
    if isinstance(x, (int, Fraction)):
        return _format_fraction(Fraction(x))
    if not x:
        return "0"
    parts: list[str] = []
    for i, (mono, c) in enumerate(x.sorted_terms()):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if not mono:
            body = _format_fraction(mag)
        elif mag == 1:
            body = _format_monomial(mono)
        else:
            body = f"{_format_fraction(mag)}*{_format_monomial(mono)}"
        if i == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class ParseError(ValueError):
    """Syntax error with a 0-based character offset and derived line/column."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        self.line = text.count("\n", 0, position) + 1
        self.column = position - (text.rfind("\n", 0, position) + 1)
        super().__init__(f"{message} (line {self.line}, column {self.column})")


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_NUMBER = re.compile(r"\d+(?:/\d+)?")
_INT = re.compile(r"\d+")


class _ValueParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> RingValue:
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return value

    def expr(self) -> RingValue:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        value = self.term() * sign
        while self.peek() and self.peek() in "+-":
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            value = value + t if op == "+" else value - t
        return value

    def term(self) -> RingValue:
        value = self.factor()
        while self.peek() == "*":
            self.pos += 1
            value = value * self.factor()
        return value

    def factor(self) -> RingValue:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return self.power(value)
        if ch == "-":
            self.pos += 1
            return -self.factor()
        m = _NUMBER.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            num, _, den = m.group().partition("/")
            if den and int(den) == 0:
                self.error("zero denominator")
            return self.power(Fraction(int(num), int(den) if den else 1))
        m = _IDENT.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return self.power(Poly.var(m.group()))
        self.error(f"unexpected {ch!r}")

    def power(self, base: RingValue) -> RingValue:
        if self.peek() != "^":
            return base
        self.pos += 1
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected a non-negative integer exponent")
        self.pos = m.end()
        e = int(m.group())
        if isinstance(base, Poly):
            return base ** e
        return base ** e


def parse_value(text: str) -> RingValue:
    """Parse a rational or polynomial expression; constants come back as Fraction."""
    return simplify(_ValueParser(text).parse())


# JSON ---------------------------------------------------------------------

def _fraction_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _fraction_from_json(s) -> int | Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if not isinstance(s, str) or not _NUMBER.fullmatch(s.lstrip("-")):
        raise ValueError(f"bad rational {s!r}")
    if s.endswith("/0"):
        raise ValueError(f"zero denominator in {s!r}")
    return as_value(Fraction(s))


def value_to_json(x: RingValue):
    """Rationals become ``"p/q"``; polynomials a list of ``{"vars", "q"}`` records."""
    if isinstance(x, (int, Fraction)):
        return _fraction_json(Fraction(x))
    return [{"vars": dict(m), "q": _fraction_json(c)} for m, c in x.sorted_terms()]


def value_from_json(obj) -> RingValue:
    if isinstance(obj, list):
        terms: dict[Monomial, Fraction] = {}
        for rec in obj:
            mono = tuple(sorted((str(k), int(v)) for k, v in rec.get("vars", {}).items()))
            for name, e in mono:
                if not _IDENT.fullmatch(name) or e < 0:
                    raise ValueError(f"bad monomial {rec!r}")
            terms[mono] = terms.get(mono, ZERO) + _fraction_from_json(rec["q"])
        return Poly(terms)
    return _fraction_from_json(obj)

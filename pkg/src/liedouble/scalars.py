"""Exact arithmetic in the number field Q(i, sqrt2).

Every coefficient in this package is a :class:`Scalar`, a rational linear
combination

    a + b*sqrt2 + c*i + d*i*sqrt2

stored as four exact `Fraction` components.  The representation is unique,
so equality is componentwise and all checks in the library are exact; no
floating point appears anywhere.

The canonical text form orders terms as above, omits zero terms and unit
coefficients, and prints the zero element as ``"0"``.  :func:`scalar_parse`
accepts a superset (arbitrary sums, products, quotients and parentheses of
rational literals, ``sqrt2`` and ``i``) and always returns the canonical
form, so parsing after printing is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "Scalar",
    "ScalarParseError",
    "scalar_parse",
    "rational",
    "ZERO",
    "ONE",
    "MINUS_ONE",
    "SQRT2",
    "HALF_SQRT2",
    "I_UNIT",
]

_F0 = Fraction(0)
_F1 = Fraction(1)


class Scalar:
    """An element of Q(i, sqrt2) in canonical component form.

    Components: ``a`` multiplies 1, ``b`` multiplies sqrt2, ``c`` multiplies
    i and ``d`` multiplies i*sqrt2.  Instances are immutable.
    """

    __slots__ = ("_a", "_b", "_c", "_d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self._a = a if isinstance(a, Fraction) else Fraction(a)
        self._b = b if isinstance(b, Fraction) else Fraction(b)
        self._c = c if isinstance(c, Fraction) else Fraction(c)
        self._d = d if isinstance(d, Fraction) else Fraction(d)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def c(self) -> Fraction:
        return self._c

    @property
    def d(self) -> Fraction:
        return self._d

    @classmethod
    def from_rational(cls, numerator, denominator=1) -> Scalar:
        return cls(Fraction(numerator, denominator))

    @classmethod
    def parse(cls, text: str) -> Scalar:
        return scalar_parse(text)

    @staticmethod
    def _coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self._a == other._a
            and self._b == other._b
            and self._c == other._c
            and self._d == other._d
        )

    def __hash__(self):
        return hash((self._a, self._b, self._c, self._d))

    def __neg__(self) -> Scalar:
        return Scalar(-self._a, -self._b, -self._c, -self._d)

    def __add__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(
            self._a + other._a,
            self._b + other._b,
            self._c + other._c,
            self._d + other._d,
        )

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(
            self._a - other._a,
            self._b - other._b,
            self._c - other._c,
            self._d - other._d,
        )

    def __rsub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = other._a, other._b, other._c, other._d
        # fast path: both values purely rational
        if not (b1 or c1 or d1 or b2 or c2 or d2):
            return Scalar(a1 * a2)
        # (sqrt2)^2 = 2, i^2 = -1, (i*sqrt2)^2 = -2
        return Scalar(
            a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + 2 * b1 * d2 + 2 * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in Q(i, sqrt2)")
        a, b, c, d = self._a, self._b, self._c, self._d
        # write self = x + y*i with x, y in Q(sqrt2); then
        # 1/self = (x - y*i) / (x^2 + y^2), and x^2 + y^2 = p + q*sqrt2
        # is inverted through its Q(sqrt2) conjugate.
        p = a * a + 2 * b * b + c * c + 2 * d * d
        q = 2 * (a * b + c * d)
        nrm = p * p - 2 * q * q
        ip = p / nrm
        iq = -q / nrm
        return Scalar(
            a * ip + 2 * b * iq,
            a * iq + b * ip,
            -(c * ip + 2 * d * iq),
            -(c * iq + d * ip),
        )

    def __truediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __repr__(self) -> str:
        return f"Scalar({self._a!r}, {self._b!r}, {self._c!r}, {self._d!r})"

    def __str__(self) -> str:
        parts = []
        for coeff, unit in (
            (self._a, ""),
            (self._b, "sqrt2"),
            (self._c, "i"),
            (self._d, "i*sqrt2"),
        ):
            if not coeff:
                continue
            if not unit:
                piece = str(coeff)
            elif coeff == 1:
                piece = unit
            elif coeff == -1:
                piece = "-" + unit
            else:
                piece = f"{coeff}*{unit}"
            parts.append(piece)
        if not parts:
            return "0"
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out


ZERO = Scalar()
ONE = Scalar(1)
MINUS_ONE = Scalar(-1)
SQRT2 = Scalar(0, 1)
HALF_SQRT2 = Scalar(0, Fraction(1, 2))  # equals 1/sqrt2
I_UNIT = Scalar(0, 0, 1)


def rational(numerator, denominator=1) -> Scalar:
    """Shorthand for the rational Scalar numerator/denominator."""
    return Scalar(Fraction(numerator, denominator))


class ScalarParseError(ValueError):
    """Raised on malformed scalar text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(sqrt2\b|i\b)|([()+\-*/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ScalarParseError(f"unexpected character {text[bad]!r}", bad)
        number, atom, op = match.groups()
        start = match.end() - len((number or atom or op))
        if number is not None:
            tokens.append(("num", int(number), start))
        elif atom is not None:
            tokens.append(("atom", atom, start))
        else:
            tokens.append(("op", op, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser for the scalar grammar.

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('-'|'+')* atom
    atom   := integer | 'sqrt2' | 'i' | '(' expr ')'
    """

    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def parse(self) -> Scalar:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ScalarParseError(f"unexpected token {text!r}", pos)
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def term(self) -> Scalar:
        value = self.unary()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                rhs = self.unary()
                if text == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        raise ScalarParseError("division by zero", pos)
                    value = value / rhs
            else:
                return value

    def unary(self) -> Scalar:
        sign = 1
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                if text == "-":
                    sign = -sign
            else:
                break
        value = self.atom()
        return -value if sign < 0 else value

    def atom(self) -> Scalar:
        kind, text, pos = self.advance()
        if kind == "num":
            return Scalar(text)
        if kind == "atom":
            return SQRT2 if text == "sqrt2" else I_UNIT
        if kind == "op" and text == "(":
            value = self.expr()
            kind, text, pos = self.advance()
            if not (kind == "op" and text == ")"):
                raise ScalarParseError("expected ')'", pos)
            return value
        raise ScalarParseError(
            f"expected a number, 'sqrt2', 'i' or '(', got {text!r}" if text else "unexpected end of input",
            pos,
        )


def scalar_parse(text: str) -> Scalar:
    """Parse scalar text into its canonical Scalar value."""
    return _Parser(_tokenize(text)).parse()

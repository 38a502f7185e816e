"""Text form of quaternions.

Grammar (whitespace is ignored between tokens)::

    expr  := sign? term (('+' | '-') term)*
    term  := coeff basis? | basis
    coeff := real | '(' real ('+' | '-') real 'I' ')' | rational 'r'?
    basis := 'i' | 'j' | 'k' | 'ij'

``k`` denotes ``ij``.  ``r`` stands for ``sqrt(-d)``; with ``d = 1`` it
equals ``I``.  Repeated basis symbols are summed.  In exact mode decimal
literals are converted without rounding.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .algebra import STANDARD, AlgebraParams, Quaternion
from .scalar import QuadExt, QuadField, _fmt_float, _fmt_rational

MAX_EXPONENT = 1000

_NUMBER = re.compile(r"(\d+(?:\.\d*)?|\.\d+)([eE][+-]?\d+)?(?:/(\d+))?")
_SLOT = {"": 0, "i": 1, "j": 2, "k": 3, "ij": 3}


class ParseError(ValueError):
    """Syntax error at ``offset`` bytes into the (UTF-8) input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class _Scanner:
    def __init__(self, text: str, exact: bool, field: QuadField | None, d):
        self.text = text
        self.pos = 0
        self.exact = exact
        self.field = field
        self.d = Fraction(d)

    def error(self, message: str, pos: int | None = None):
        pos = self.pos if pos is None else pos
        raise ParseError(message, len(self.text[:pos].encode("utf-8")))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    # numbers are returned as Fraction in exact mode and float otherwise
    def number(self):
        self.skip()
        start = self.pos
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            self.error("expected a number")
        self.pos = m.end()
        try:
            return self._convert(*m.groups(), start)
        except ParseError:
            raise
        except (ValueError, OverflowError):
            # over-long digit strings or values beyond float range
            self.error("number out of range", start)

    def _convert(self, mantissa, exponent, denominator, start):
        if exponent and abs(int(exponent[1:])) > MAX_EXPONENT:
            self.error("exponent out of range", start)
        if denominator is not None:
            if int(denominator) == 0:
                self.error("zero denominator", start)
            value = Fraction(mantissa + (exponent or "")) / int(denominator)
            return value if self.exact else float(value)
        if self.exact:
            return Fraction(mantissa + (exponent or ""))
        value = float(mantissa + (exponent or ""))
        if not math.isfinite(value):
            self.error("number out of range", start)
        return value

    def signed_number(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        return sign * self.number()

    def complex_coeff(self):
        start = self.pos
        self.take("(")
        re_part = self.signed_number()
        op = self.peek()
        if op not in ("+", "-"):
            self.error("expected '+' or '-' in complex literal")
        self.pos += 1
        im_part = self.number()
        self.take("I")
        self.take(")")
        if op == "-":
            im_part = -im_part
        if self.exact:
            if self.d != 1:
                self.error("'I' needs d = 1 in exact mode; use 'r'", start)
            return QuadExt(re_part, im_part, self.field)
        return complex(re_part, im_part)

    def coeff(self):
        if self.peek() == "(":
            return self.complex_coeff()
        value = self.number()
        if self.peek() == "r":
            self.pos += 1
            if self.exact:
                return QuadExt(0, value, self.field)
            return complex(0, value * math.sqrt(self.d))
        if self.exact:
            return QuadExt(value, 0, self.field)
        return complex(value)

    def basis(self) -> str | None:
        ch = self.peek()
        if ch == "i":
            self.pos += 1
            if self.pos < len(self.text) and self.text[self.pos] == "j":
                self.pos += 1
                return "ij"
            return "i"
        if ch in ("j", "k"):
            self.pos += 1
            return ch
        return None

    def term(self):
        ch = self.peek()
        if ch == "(" or ch.isdigit() or ch == ".":
            c = self.coeff()
            return c, self.basis() or ""
        b = self.basis()
        if b is None:
            self.error("expected a term" if ch else "unexpected end of input")
        return (QuadExt(1, 0, self.field) if self.exact else complex(1)), b

    def expr(self) -> list:
        acc = [QuadExt(0, 0, self.field) if self.exact else 0j for _ in range(4)]
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        while True:
            c, b = self.term()
            slot = _SLOT[b]
            acc[slot] = acc[slot] + c if sign > 0 else acc[slot] - c
            ch = self.peek()
            if ch == "":
                return acc
            if ch not in ("+", "-"):
                self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1


def parse_quaternion(text, mode: str = "float", d=1, alg: AlgebraParams = STANDARD) -> Quaternion:
    """Parse ``text`` (``str`` or ``bytes``) into a quaternion of ``alg``.

    ``mode="exact"`` gives coefficients in ``Q(sqrt(-d))``; ``mode="float"``
    gives complex coefficients.  Raises :class:`ParseError` on bad input.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII byte", exc.start) from None
    if mode not in ("float", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    exact = mode == "exact"
    field = QuadField(d) if exact else None
    sc = _Scanner(text, exact, field, d)
    if sc.peek() == "":
        sc.error("empty input")
    w, x, y, z = sc.expr()
    return Quaternion(w, x, y, z, alg)


# -- output -------------------------------------------------------------------------

def _float_terms(c: complex, suffix: str) -> list[tuple[int, str]]:
    c = complex(c)
    if c.imag == 0:
        if c.real == 0:
            return []
        body = _fmt_float(abs(c.real))
        sign = -1 if c.real < 0 else 1
        if body == "1" and suffix:
            return [(sign, suffix)]
        return [(sign, body + (" " + suffix if suffix else ""))]
    im = c.imag
    lit = f"({_fmt_float(c.real)}{'-' if im < 0 else '+'}{_fmt_float(abs(im))}I)"
    return [(1, lit + (" " + suffix if suffix else ""))]


def _exact_terms(c, suffix: str) -> list[tuple[int, str]]:
    if not isinstance(c, QuadExt):
        c = QuadExt(c, 0)
    out = []
    for part, tag in ((c.u, ""), (c.v, "r")):
        if part == 0:
            continue
        body = _fmt_rational(abs(part)) + tag
        sign = -1 if part < 0 else 1
        if body == "1" and suffix:
            out.append((sign, suffix))
        else:
            out.append((sign, body + (" " + suffix if suffix else "")))
    return out


def format_quaternion(q: Quaternion) -> str:
    """Canonical text for ``q``; :func:`parse_quaternion` reads it back."""
    exact = all(isinstance(c, (QuadExt, Fraction, int)) for c in q.coeffs)
    terms = []
    for c, suffix in zip(q.coeffs, ("", "i", "j", "k")):
        terms += _exact_terms(c, suffix) if exact else _float_terms(c, suffix)
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in terms[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out

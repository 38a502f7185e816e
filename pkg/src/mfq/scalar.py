"""Coefficient fields for quaternion arithmetic.

Three kinds of scalar are supported:

* real numbers (``float``, ``int`` or ``Fraction``), where conjugation is trivial;
* complex numbers (``complex``), conjugated in the usual way;
* exact elements ``u + v*sqrt(-d)`` of a quadratic extension of the rationals,
  represented by :class:`QuadExt` and created through a :class:`QuadField`.

Exact elements carry a reference to their field.  Mixing elements of fields
with different ``d`` raises :class:`FieldMismatchError` instead of silently
producing nonsense.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

DEFAULT_TOL = 1e-9


class FieldMismatchError(TypeError):
    pass


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"exact scalar needs a rational, got {type(value).__name__}")


class QuadField:
    """The field Q(sqrt(-d)) for a positive rational ``d``."""

    __slots__ = ("d",)

    def __init__(self, d=1):
        d = _frac(d)
        if d <= 0:
            raise ValueError("d must be positive")
        self.d = d

    def __call__(self, u=0, v=0) -> QuadExt:
        return QuadExt(u, v, self)

    @property
    def r(self) -> QuadExt:
        """The generator sqrt(-d)."""
        return QuadExt(0, 1, self)

    @property
    def sqrt_d(self) -> float:
        return math.sqrt(self.d)

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.d == self.d

    def __hash__(self):
        return hash(("QuadField", self.d))

    def __repr__(self):
        return f"QuadField({self.d})"


class QuadExt:
    """Exact element ``u + v*sqrt(-d)`` with rational ``u``, ``v``."""

    __slots__ = ("u", "v", "field")

    def __init__(self, u=0, v=0, field: QuadField | None = None):
        self.u = _frac(u)
        self.v = _frac(v)
        self.field = field if field is not None else QuadField(1)

    # -- coercion -------------------------------------------------------
    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix sqrt(-{self.field.d}) and sqrt(-{other.field.d})"
                )
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return QuadExt(other, 0, self.field)
        if isinstance(other, (float, complex)):
            raise TypeError("cannot mix exact and floating scalars")
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.u + o.u, self.v + o.v, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.u - o.u, self.v - o.v, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.u - self.u, o.v - self.v, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.d
        return QuadExt(
            self.u * o.u - d * self.v * o.v,
            self.u * o.v + self.v * o.u,
            self.field,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        den = self.u * self.u + self.field.d * self.v * self.v
        if den == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(-d))")
        return QuadExt(self.u / den, -self.v / den, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(1, 0, self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> QuadExt:
        return QuadExt(self.u, -self.v, self.field)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.field == other.field and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Rational)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self):
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.field.d))

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __complex__(self):
        return complex(float(self.u), float(self.v) * math.sqrt(self.field.d))

    @property
    def real(self) -> float:
        return float(self.u)

    @property
    def imag(self) -> float:
        return float(self.v) * math.sqrt(self.field.d)

    def __repr__(self):
        return f"QuadExt({self.u}, {self.v}, d={self.field.d})"

    def __str__(self):
        return format_scalar(self)


def conj(s):
    """Field conjugation: identity on reals, complex/quadratic conjugation otherwise."""
    return s.conjugate()


def embed_complex(s) -> complex:
    return complex(s)


def is_real(s, tol: float = DEFAULT_TOL) -> bool:
    if isinstance(s, QuadExt):
        return s.v == 0
    if isinstance(s, complex):
        return abs(s.imag) <= tol
    return True


def is_exact(s) -> bool:
    return isinstance(s, (QuadExt, Fraction, int)) and not isinstance(s, bool)


# -- text forms -----------------------------------------------------------

def _fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _fmt_float(x: float) -> str:
    if math.isfinite(x) and x == int(x) and abs(x) < 1e16:
        return str(int(x)) if not (x == 0 and math.copysign(1, x) < 0) else "-0.0"
    return repr(float(x))


def format_scalar(s) -> str:
    """Render ``1.5``, ``1.5+2I`` or ``3/2+1/4r``; see :func:`parse_scalar`."""
    if isinstance(s, QuadExt):
        if s.v == 0:
            return _fmt_rational(s.u)
        vs = _fmt_rational(abs(s.v)) + "r"
        if s.u == 0:
            return ("-" if s.v < 0 else "") + vs
        return _fmt_rational(s.u) + ("-" if s.v < 0 else "+") + vs
    if isinstance(s, complex):
        im = s.imag
        sign = "-" if math.copysign(1.0, im) < 0 else "+"
        return f"{_fmt_float(s.real)}{sign}{_fmt_float(abs(im))}I"
    if isinstance(s, (Fraction, int)):
        return _fmt_rational(s)
    return _fmt_float(s)


_UNUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_NUM = r"[+-]?" + _UNUM
_RAT = r"[+-]?\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(rf"^\s*({_NUM})\s*([+-])\s*({_UNUM})\s*I\s*$")
_QUAD_RE = re.compile(rf"^\s*(?:({_RAT})\s*(?=[+-]))?([+-])?\s*(\d+(?:/\d+)?)?\s*r\s*$")


def parse_scalar(text: str, field: QuadField | None = None):
    """Inverse of :func:`format_scalar`.

    With ``field`` given the result is exact (``QuadExt``); decimal literals
    are converted exactly.  Without it reals parse to ``float`` and
    ``a+bI`` forms to ``complex``.
    """
    text = text.strip()
    m = _COMPLEX_RE.match(text)
    if m:
        re_part, sign, im_part = m.groups()
        if field is not None:
            if field.d != 1:
                raise ValueError("imaginary unit I requires d = 1 in exact mode")
            im = Fraction(im_part) * (1 if sign == "+" else -1)
            return QuadExt(Fraction(re_part), im, field)
        im = float(im_part) * (1 if sign == "+" else -1)
        return complex(float(re_part), im)
    m = _QUAD_RE.match(text)
    if m:
        u, sign, v = m.groups()
        v = Fraction(v) if v else Fraction(1)
        if sign == "-":
            v = -v
        u = Fraction(u) if u else Fraction(0)
        f = field if field is not None else QuadField(1)
        q = QuadExt(u, v, f)
        return q if field is not None else complex(q)
    if field is not None:
        return QuadExt(Fraction(text), 0, field)
    if "/" in text:
        return float(Fraction(text))
    return float(text)

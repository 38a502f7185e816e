"""Quaternion algebras (a,b/K) on the basis 1, i, j, ij.

Multiplication follows i^2 = a, j^2 = b, ij = -ji.  The letter ``k`` is only
surface syntax for ``ij``; no separate basis element is stored.

Coefficients may be any scalar from :mod:`mfq.scalar` (float, complex,
Fraction, QuadExt).  Two quaternions can only be combined when they belong to
the same algebra.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .scalar import DEFAULT_TOL, QuadExt, QuadField, conj, embed_complex, is_exact


class AlgebraMismatchError(ValueError):
    pass


class NonInvertibleError(ZeroDivisionError):
    pass


class UnsupportedRepresentationError(ValueError):
    pass


class AlgebraParams:
    """Structure constants ``i^2 = a`` and ``j^2 = b``."""

    __slots__ = ("a", "b", "__dict__")

    def __init__(self, a=1, b=1):
        if a == 0 or b == 0:
            raise ValueError("a and b must be nonzero")
        self.a = a
        self.b = b

    @cached_property
    def sqrt_a(self) -> complex:
        return cmath.sqrt(complex(self.a))

    @cached_property
    def sqrt_b(self) -> complex:
        return cmath.sqrt(complex(self.b))

    @cached_property
    def sqrt_ab(self) -> complex:
        # product of the chosen roots, not the principal root of ab;
        # the two differ when a, b < 0 and only the product keeps rho_general multiplicative
        return self.sqrt_a * self.sqrt_b

    @property
    def is_standard(self) -> bool:
        return self.a == 1 and self.b == 1

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, AlgebraParams) and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"AlgebraParams(a={self.a}, b={self.b})"


STANDARD = AlgebraParams(1, 1)
HAMILTON = AlgebraParams(-1, -1)


class Quaternion:
    """``w + x*i + y*j + z*ij`` in the algebra ``alg``."""

    __slots__ = ("w", "x", "y", "z", "alg")

    def __init__(self, w=0, x=0, y=0, z=0, alg: AlgebraParams = STANDARD):
        self.w = w
        self.x = x
        self.y = y
        self.z = z
        self.alg = alg

    @classmethod
    def scalar(cls, s, alg: AlgebraParams = STANDARD) -> Quaternion:
        return cls(s, 0 * s, 0 * s, 0 * s, alg)

    @property
    def coeffs(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def _same(self, other: Quaternion):
        if self.alg is not other.alg and self.alg != other.alg:
            raise AlgebraMismatchError(f"{self.alg} vs {other.alg}")

    def _map(self, f) -> Quaternion:
        return Quaternion(f(self.w), f(self.x), f(self.y), f(self.z), self.alg)

    def __add__(self, other):
        if isinstance(other, Quaternion):
            self._same(other)
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y,
                              self.z + other.z, self.alg)
        return Quaternion(self.w + other, self.x, self.y, self.z, self.alg)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            self._same(other)
            return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y,
                              self.z - other.z, self.alg)
        return Quaternion(self.w - other, self.x, self.y, self.z, self.alg)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z, self.alg)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion(self.w * other, self.x * other, self.y * other,
                          self.z * other, self.alg)

    def __rmul__(self, other):
        # scalars are central
        return Quaternion(other * self.w, other * self.x, other * self.y,
                          other * self.z, self.alg)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, qinv(other))
        return Quaternion(self.w / other, self.x / other, self.y / other,
                          self.z / other, self.alg)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.alg == other.alg and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.alg))

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        alg = "" if self.alg == STANDARD else f", alg={self.alg!r}"
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r}{alg})"


def basis(alg: AlgebraParams = STANDARD, one=1) -> tuple[Quaternion, ...]:
    """The basis 1, i, j, ij with coefficients of the same type as ``one``."""
    z = one - one
    return (
        Quaternion(one, z, z, z, alg),
        Quaternion(z, one, z, z, alg),
        Quaternion(z, z, one, z, alg),
        Quaternion(z, z, z, one, alg),
    )


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    p._same(q)
    a, b = p.alg.a, p.alg.b
    w1, x1, y1, z1 = p.w, p.x, p.y, p.z
    w2, x2, y2, z2 = q.w, q.x, q.y, q.z
    return Quaternion(
        w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
        w1 * x2 + x1 * w2 - b * (y1 * z2 - z1 * y2),
        w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2),
        w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2,
        p.alg,
    )


def star(q: Quaternion) -> Quaternion:
    """Standard involution ``w - x i - y j - z ij``."""
    return Quaternion(q.w, -q.x, -q.y, -q.z, q.alg)


def norm(q: Quaternion):
    """Reduced norm ``q q* = w^2 - a x^2 - b y^2 + ab z^2``."""
    a, b = q.alg.a, q.alg.b
    return q.w * q.w - a * q.x * q.x - b * q.y * q.y + a * b * q.z * q.z


def trace(q: Quaternion):
    return 2 * q.w


def scalar_part(q: Quaternion):
    return q.w


def pure_part(q: Quaternion) -> Quaternion:
    return Quaternion(q.w - q.w, q.x, q.y, q.z, q.alg)


def qinv(q: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    n = norm(q)
    if n == 0 or (not is_exact(n) and abs(embed_complex(n)) <= tol):
        raise NonInvertibleError(f"quaternion has norm {n!r}")
    return star(q) * _recip(n)


def dagger(q: Quaternion) -> Quaternion:
    """Conjugate-linear involution ``conj(w) + conj(x) i + conj(y) j - conj(z) ij``.

    Over a real coefficient field this is just ``w + x i + y j - z ij``.
    """
    return Quaternion(conj(q.w), conj(q.x), conj(q.y), -conj(q.z), q.alg)


class SymSkewPair(NamedTuple):
    sym: Quaternion
    skew: Quaternion


def sym_skew_split(q: Quaternion) -> SymSkewPair:
    qd = dagger(q)
    half = _half(q.w)
    return SymSkewPair((q + qd) * half, (q - qd) * half)


def _half(sample):
    return Fraction(1, 2) if is_exact(sample) else 0.5


def _recip(n):
    return Fraction(1, n) if isinstance(n, int) else 1 / n


def commutator(p: Quaternion, q: Quaternion) -> Quaternion:
    return qmul(p, q) - qmul(q, p)


def is_zero(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return max_abs(q) <= tol if not all(map(is_exact, q.coeffs)) else all(c == 0 for c in q.coeffs)


def max_abs(q: Quaternion) -> float:
    return max(abs(embed_complex(c)) for c in q.coeffs)


def distance_inf(p: Quaternion, q: Quaternion) -> float:
    """Largest coefficient difference after embedding into C."""
    return max(abs(embed_complex(a) - embed_complex(b)) for a, b in zip(p.coeffs, q.coeffs))


def allclose(p: Quaternion, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    p._same(q)
    if all(map(is_exact, p.coeffs + q.coeffs)):
        return p.coeffs == q.coeffs
    return distance_inf(p, q) <= tol


def to_complex(q: Quaternion) -> Quaternion:
    return Quaternion(*(complex(c) for c in q.coeffs), alg=q.alg)


# -- 2x2 matrices ---------------------------------------------------------

class Mat2:
    """Row-major 2x2 matrix over any commutative scalar type."""

    __slots__ = ("m00", "m01", "m10", "m11")

    def __init__(self, m00, m01, m10, m11):
        self.m00, self.m01, self.m10, self.m11 = m00, m01, m10, m11

    @classmethod
    def identity(cls, one=1) -> Mat2:
        z = one - one
        return cls(one, z, z, one)

    @property
    def entries(self) -> tuple:
        return (self.m00, self.m01, self.m10, self.m11)

    def __matmul__(self, o: Mat2) -> Mat2:
        return Mat2(
            self.m00 * o.m00 + self.m01 * o.m10,
            self.m00 * o.m01 + self.m01 * o.m11,
            self.m10 * o.m00 + self.m11 * o.m10,
            self.m10 * o.m01 + self.m11 * o.m11,
        )

    def __add__(self, o: Mat2) -> Mat2:
        return Mat2(*(a + b for a, b in zip(self.entries, o.entries)))

    def __sub__(self, o: Mat2) -> Mat2:
        return Mat2(*(a - b for a, b in zip(self.entries, o.entries)))

    def __neg__(self) -> Mat2:
        return Mat2(*(-a for a in self.entries))

    def __mul__(self, s) -> Mat2:
        return Mat2(*(a * s for a in self.entries))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def det(self):
        return self.m00 * self.m11 - self.m01 * self.m10

    def trace(self):
        return self.m00 + self.m11

    def conj_transpose(self) -> Mat2:
        return Mat2(conj(self.m00), conj(self.m10), conj(self.m01), conj(self.m11))

    def to_complex(self) -> Mat2:
        return Mat2(*(complex(a) for a in self.entries))

    def max_abs(self) -> float:
        return max(abs(complex(a)) for a in self.entries)

    def __repr__(self):
        return f"Mat2([[{self.m00!r}, {self.m01!r}], [{self.m10!r}, {self.m11!r}]])"


def mat_distance(m: Mat2, n: Mat2) -> float:
    return max(abs(complex(a) - complex(b)) for a, b in zip(m.entries, n.entries))


def rho(q: Quaternion) -> Mat2:
    """Isomorphism (1,1/C) -> M2(C), ``w+xi+yj+zij -> [[w-x, y-z], [y+z, w+x]]``."""
    if not q.alg.is_standard:
        raise UnsupportedRepresentationError(f"rho needs a = b = 1, got {q.alg}")
    w, x, y, z = q.w, q.x, q.y, q.z
    return Mat2(w - x, y - z, y + z, w + x)


def rho_inverse(m: Mat2) -> Quaternion:
    half = _half(m.m00)
    return Quaternion(
        (m.m00 + m.m11) * half,
        (m.m11 - m.m00) * half,
        (m.m01 + m.m10) * half,
        (m.m10 - m.m01) * half,
        STANDARD,
    )


def rho_general(q: Quaternion) -> Mat2:
    """Embedding of (a,b/K) into M2(C) using fixed roots of a and b.

    Coefficients are embedded into C; use :func:`mfq.genmac.gen_rho` for the
    exact version.
    """
    sa, sb, sab = q.alg.sqrt_a, q.alg.sqrt_b, q.alg.sqrt_ab
    w, x, y, z = (complex(c) for c in q.coeffs)
    return Mat2(w - x * sa, y * sb - z * sab, y * sb + z * sab, w + x * sa)


def rho_general_inverse(m: Mat2, alg: AlgebraParams) -> Quaternion:
    sa, sb, sab = alg.sqrt_a, alg.sqrt_b, alg.sqrt_ab
    return Quaternion(
        (m.m00 + m.m11) / 2,
        (m.m11 - m.m00) / (2 * sa),
        (m.m01 + m.m10) / (2 * sb),
        (m.m10 - m.m01) / (2 * sab),
        alg,
    )


def pullback_conj_transpose(q: Quaternion) -> Quaternion:
    """The involution induced on (a,b/K) by conjugate transpose through ``rho_general``."""
    return rho_general_inverse(rho_general(q).conj_transpose(), q.alg)


# -- JSON ---------------------------------------------------------------------

def _rat_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json(q: Quaternion) -> dict:
    """``{"w": [re, im], ..., "a": a, "b": b}``; exact values become rational
    strings and ``[u, v]`` then means ``u + v sqrt(-d)`` with ``d`` included.
    """
    out = {}
    exact = all(map(is_exact, q.coeffs))
    d = None
    for name, c in zip("wxyz", q.coeffs):
        if isinstance(c, QuadExt):
            out[name] = [_rat_str(c.u), _rat_str(c.v)]
            d = c.field.d
        elif exact:
            out[name] = [_rat_str(c), "0"]
        else:
            c = complex(c)
            out[name] = [c.real, c.imag]
    for name in ("a", "b"):
        v = getattr(q.alg, name)
        out[name] = _rat_str(v) if is_exact(v) else float(complex(v).real)
    if d is not None:
        out["d"] = _rat_str(d)
    return out


def from_json(obj: dict) -> Quaternion:
    def num(v):
        return Fraction(v) if isinstance(v, str) else v

    a, b = num(obj.get("a", 1)), num(obj.get("b", 1))
    alg = STANDARD if (a == 1 and b == 1) else AlgebraParams(a, b)
    exact = isinstance(obj["w"][0], str)
    if exact:
        field = QuadField(Fraction(obj.get("d", "1")))
        coeffs = [field(Fraction(obj[n][0]), Fraction(obj[n][1])) for n in "wxyz"]
    else:
        coeffs = [complex(obj[n][0], obj[n][1]) for n in "wxyz"]
    return Quaternion(*coeffs, alg=alg)

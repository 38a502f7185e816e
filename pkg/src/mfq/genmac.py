"""Macfarlane structure on (a,b/F(sqrt(-d))) with a, b, d > 0, in exact arithmetic.

Scalars are :class:`~mfq.scalar.QuadExt` over ``Q(sqrt(-d))``.  The matrix
representation needs ``sqrt(a)`` and ``sqrt(b)`` as well; those live in the
ring ``Q[s, t, r] / (s^2 - a, t^2 - b, r^2 + d)``, stored as 8 rational
coefficients by :class:`SurdNumber`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    AlgebraParams,
    Mat2,
    Quaternion,
    basis,
    dagger,
    norm,
    qmul,
    trace,
)
from .macfarlane import DomainError, in_M
from .scalar import QuadExt, QuadField, conj


@dataclass(frozen=True)
class GenAlgebraContext:
    """Parameters of (a,b/Q(sqrt(-d)))."""

    a: Fraction
    b: Fraction
    d: Fraction
    alg: AlgebraParams = field(init=False, compare=False, repr=False)
    qfield: QuadField = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for name in ("a", "b", "d"):
            v = Fraction(getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be positive")
            object.__setattr__(self, name, v)
        object.__setattr__(self, "alg", AlgebraParams(self.a, self.b))
        object.__setattr__(self, "qfield", QuadField(self.d))

    def scalar(self, u=0, v=0) -> QuadExt:
        return self.qfield(u, v)

    def quaternion(self, w=0, x=0, y=0, z=0) -> Quaternion:
        def lift(c):
            return c if isinstance(c, QuadExt) else self.qfield(c)
        return Quaternion(lift(w), lift(x), lift(y), lift(z), self.alg)

    def one(self) -> Quaternion:
        return self.quaternion(1)

    def macfarlane_basis(self) -> tuple[Quaternion, ...]:
        """``1, i, j, sqrt(-d) ij``: a basis of the dagger-symmetric space over Q."""
        r = self.qfield.r
        return (self.quaternion(1), self.quaternion(0, 1), self.quaternion(0, 0, 1),
                self.quaternion(0, 0, 0, r))

    def float_algebra(self) -> AlgebraParams:
        return AlgebraParams(float(self.a), float(self.b))


def gen_dagger(q: Quaternion) -> Quaternion:
    return dagger(q)


def gen_in_M(q: Quaternion, ctx: GenAlgebraContext | None = None) -> bool:
    """Coefficients of 1, i, j rational and of ij in ``sqrt(-d) Q``."""
    exact = all(isinstance(c, QuadExt) for c in q.coeffs)
    if not exact:
        return in_M(q)
    if ctx is not None and any(c.field != ctx.qfield for c in q.coeffs):
        return False
    return q.w.v == 0 and q.x.v == 0 and q.y.v == 0 and q.z.u == 0


def gen_signature(ctx: GenAlgebraContext) -> tuple[int, int]:
    """Signature of the norm on the symmetric space, from its diagonal values."""
    values = [norm(e) for e in ctx.macfarlane_basis()]
    pos = sum(1 for v in values if v.v == 0 and v.u > 0)
    neg = sum(1 for v in values if v.v == 0 and v.u < 0)
    return pos, neg


def _positive_trace(p: Quaternion) -> bool:
    t = trace(p)
    return t.v == 0 and t.u > 0


class GenMacPoint:
    """Exact point on the upper unit hyperboloid of a generalized algebra."""

    __slots__ = ("q", "ctx")

    def __init__(self, q: Quaternion, ctx: GenAlgebraContext):
        if q.alg != ctx.alg:
            raise DomainError("point belongs to a different algebra")
        if not gen_in_M(q, ctx):
            raise DomainError("point is not dagger-symmetric")
        if norm(q) != 1:
            raise DomainError("point does not have norm 1")
        if not _positive_trace(q):
            raise DomainError("point does not have positive trace")
        self.q = q
        self.ctx = ctx

    def __eq__(self, other):
        return isinstance(other, GenMacPoint) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"GenMacPoint({self.q!r})"


def gen_act(u: Quaternion, p, ctx: GenAlgebraContext) -> GenMacPoint:
    if norm(u) != 1:
        raise DomainError("acting quaternion must have norm exactly 1")
    q = p.q if isinstance(p, GenMacPoint) else p
    return GenMacPoint(qmul(qmul(u, q), dagger(u)), ctx)


# -- exact matrix representation ---------------------------------------------------

class SurdRing:
    """``Q[s, t, r]`` with ``s^2 = a``, ``t^2 = b``, ``r^2 = -d``.

    Complex conjugation negates every generator whose square is negative, which
    matches embedding ``s -> sqrt(a)``, ``t -> sqrt(b)``, ``r -> I sqrt(d)``
    with principal roots.
    """

    __slots__ = ("a", "b", "d", "_conj_signs")

    def __init__(self, a, b, d=1):
        self.a, self.b, self.d = Fraction(a), Fraction(b), Fraction(d)
        if self.a == 0 or self.b == 0 or self.d <= 0:
            raise ValueError("need a, b nonzero and d positive")
        neg = (self.a < 0, self.b < 0, True)
        self._conj_signs = tuple(
            -1 if sum(e * n for e, n in zip(mono, neg)) % 2 else 1
            for mono in _MONOMIALS
        )

    def __eq__(self, other):
        return isinstance(other, SurdRing) and (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def zero(self) -> SurdNumber:
        return SurdNumber((Fraction(0),) * 8, self)

    def lift(self, c) -> SurdNumber:
        """Embed a rational or ``u + v sqrt(-d)`` into the ring."""
        coeffs = [Fraction(0)] * 8
        if isinstance(c, QuadExt):
            if c.field.d != self.d:
                raise DomainError("sqrt(-d) of scalar and ring differ")
            coeffs[0] = c.u
            coeffs[_INDEX[(0, 0, 1)]] = c.v
        else:
            coeffs[0] = Fraction(c)
        return SurdNumber(tuple(coeffs), self)

    def gen(self, mono: tuple[int, int, int]) -> SurdNumber:
        coeffs = [Fraction(0)] * 8
        coeffs[_INDEX[mono]] = Fraction(1)
        return SurdNumber(tuple(coeffs), self)

    @property
    def s(self) -> SurdNumber:
        return self.gen((1, 0, 0))

    @property
    def t(self) -> SurdNumber:
        return self.gen((0, 1, 0))

    @property
    def r(self) -> SurdNumber:
        return self.gen((0, 0, 1))


_MONOMIALS = tuple(itertools.product((0, 1), repeat=3))
_INDEX = {m: k for k, m in enumerate(_MONOMIALS)}


class SurdNumber:
    """Element of a :class:`SurdRing`; coefficients indexed by exponent triples of (s, t, r)."""

    __slots__ = ("c", "ring")

    def __init__(self, coeffs, ring: SurdRing):
        self.c = tuple(coeffs)
        self.ring = ring

    def _other(self, o) -> SurdNumber:
        if isinstance(o, SurdNumber):
            if o.ring != self.ring:
                raise DomainError("surd rings differ")
            return o
        return self.ring.lift(o)

    def __add__(self, o):
        o = self._other(o)
        return SurdNumber(tuple(x + y for x, y in zip(self.c, o.c)), self.ring)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._other(o)
        return SurdNumber(tuple(x - y for x, y in zip(self.c, o.c)), self.ring)

    def __rsub__(self, o):
        return self._other(o) - self

    def __neg__(self):
        return SurdNumber(tuple(-x for x in self.c), self.ring)

    def __mul__(self, o):
        o = self._other(o)
        squares = (self.ring.a, self.ring.b, -self.ring.d)
        out = [Fraction(0)] * 8
        for m1, c1 in zip(_MONOMIALS, self.c):
            if not c1:
                continue
            for m2, c2 in zip(_MONOMIALS, o.c):
                if not c2:
                    continue
                coef = c1 * c2
                mono = []
                for e1, e2, sq in zip(m1, m2, squares):
                    if e1 and e2:
                        coef *= sq
                        mono.append(0)
                    else:
                        mono.append(e1 + e2)
                out[_INDEX[tuple(mono)]] += coef
        return SurdNumber(tuple(out), self.ring)

    __rmul__ = __mul__

    def conjugate(self) -> SurdNumber:
        return SurdNumber(tuple(s * x for s, x in zip(self.ring._conj_signs, self.c)), self.ring)

    def __eq__(self, o):
        if isinstance(o, SurdNumber):
            return self.ring == o.ring and self.c == o.c
        try:
            return self.c == self.ring.lift(o).c
        except (TypeError, DomainError):
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __complex__(self):
        roots = (_croot(self.ring.a), _croot(self.ring.b), complex(0, math.sqrt(self.ring.d)))
        total = 0j
        for mono, c in zip(_MONOMIALS, self.c):
            term = complex(float(c))
            for e, rt in zip(mono, roots):
                if e:
                    term *= rt
            total += term
        return total

    def to_base(self):
        """Return the rational or ``Q(sqrt(-d))`` value if no ``s``/``t`` part is present."""
        if any(x for m, x in zip(_MONOMIALS, self.c) if m[0] or m[1]):
            raise DomainError("value does not lie in the base field")
        u = self.c[_INDEX[(0, 0, 0)]]
        v = self.c[_INDEX[(0, 0, 1)]]
        return QuadExt(u, v, QuadField(self.ring.d)) if v else u

    def __repr__(self):
        terms = [f"{x}*s^{m[0]}t^{m[1]}r^{m[2]}" for m, x in zip(_MONOMIALS, self.c) if x]
        return "SurdNumber(" + (" + ".join(terms) or "0") + ")"


def _croot(x: Fraction) -> complex:
    return complex(0, math.sqrt(-x)) if x < 0 else complex(math.sqrt(x))


def surd_ring_for(alg: AlgebraParams, d=1) -> SurdRing:
    return SurdRing(alg.a, alg.b, d)


def gen_rho(q: Quaternion, ring: SurdRing | None = None) -> Mat2:
    """Exact ``[[w - x sqrt(a), y sqrt(b) - z sqrt(ab)], [y sqrt(b) + z sqrt(ab), w + x sqrt(a)]]``."""
    if ring is None:
        d = next((c.field.d for c in q.coeffs if isinstance(c, QuadExt)), 1)
        ring = surd_ring_for(q.alg, d)
    w, x, y, z = (ring.lift(c) for c in q.coeffs)
    s, t = ring.s, ring.t
    st = s * t
    return Mat2(w - x * s, y * t - z * st, y * t + z * st, w + x * s)


def gen_rho_inverse(m: Mat2, alg: AlgebraParams, ring: SurdRing) -> Quaternion:
    """Recover ``q`` from ``gen_rho(q)``; entries must lie in the image."""
    half = Fraction(1, 2)
    s_inv = ring.s * (1 / ring.a)
    t_inv = ring.t * (1 / ring.b)
    st_inv = ring.s * ring.t * (1 / (ring.a * ring.b))
    w = (m.m00 + m.m11) * half
    x = (m.m11 - m.m00) * half * s_inv
    y = (m.m01 + m.m10) * half * t_inv
    z = (m.m10 - m.m01) * half * st_inv
    return Quaternion(w.to_base(), x.to_base(), y.to_base(), z.to_base(), alg)


def conj_transpose_pullback(q: Quaternion, ring: SurdRing | None = None) -> Quaternion:
    """The involution ``gen_rho^-1(conj(gen_rho(q))^T)``, computed exactly."""
    if ring is None:
        d = next((c.field.d for c in q.coeffs if isinstance(c, QuadExt)), 1)
        ring = surd_ring_for(q.alg, d)
    return gen_rho_inverse(gen_rho(q, ring).conj_transpose(), q.alg, ring)


# -- uniqueness of the involution ----------------------------------------------------

@dataclass(frozen=True)
class CandidateInvolution:
    """``q -> sum_k signs[k] * conj(coeff_k) * e_k`` on the basis 1, i, j, ij."""

    signs: tuple[int, int, int, int]
    is_involution: bool
    signature: tuple[int, int]

    @property
    def qualifies(self) -> bool:
        return self.is_involution and self.signature == (1, 3)


def apply_pattern(q: Quaternion, signs) -> Quaternion:
    return Quaternion(*(s * conj(c) for s, c in zip(signs, q.coeffs)), alg=q.alg)


def _check_involution(signs, ctx: GenAlgebraContext) -> bool:
    # conjugate-semilinear maps are determined by the Q-basis {e_k, r e_k};
    # checking the axioms on all pairs of these is exhaustive
    r = ctx.qfield.r
    qbasis = list(basis(ctx.alg, ctx.scalar(1)))
    qbasis += [e * r for e in qbasis]
    for p in qbasis:
        if apply_pattern(apply_pattern(p, signs), signs) != p:
            return False
        for q in qbasis:
            lhs = apply_pattern(qmul(p, q), signs)
            rhs = qmul(apply_pattern(q, signs), apply_pattern(p, signs))
            if lhs != rhs:
                return False
            if apply_pattern(p + q, signs) != apply_pattern(p, signs) + apply_pattern(q, signs):
                return False
    return True


def _symmetric_signature(signs, ctx: GenAlgebraContext) -> tuple[int, int]:
    # the fixed space is spanned by e_k (sign +1) or sqrt(-d) e_k (sign -1)
    r = ctx.qfield.r
    pos = neg = 0
    for s, e in zip(signs, basis(ctx.alg, ctx.scalar(1))):
        v = e if s == 1 else e * r
        n = norm(v)
        if n.v != 0:
            raise AssertionError("norm on a fixed vector is not rational")
        if n.u > 0:
            pos += 1
        elif n.u < 0:
            neg += 1
    return pos, neg


def enumerate_dagger_candidates(ctx: GenAlgebraContext) -> list[CandidateInvolution]:
    out = []
    for signs in itertools.product((1, -1), repeat=4):
        out.append(CandidateInvolution(
            signs, _check_involution(signs, ctx), _symmetric_signature(signs, ctx)))
    return out

"""Conversions between the quaternion hyperboloid and the classical models.

The hyperboloid point ``w + x i + y j + z sqrt(-1) ij`` corresponds to the
Minkowski vector ``(w, x, y, z)``.  Upper half-space points ``x1 + x2 I + x3 J``
live in Hamilton's quaternions, realized here as the algebra (-1,-1/R) so the
Moebius action ``(a p + b)(c p + d)^-1`` is computed with ordinary quaternion
arithmetic.

The map to upper half-space is

    iota(w + x i + y j + z sqrt(-1) ij) = (y - z I + J) / (w + x),

which is the composition ``iota_inv_sphere . iota_perm . iota_proj``.  The sign
in front of ``z I`` is fixed by requiring ``iota(u p dagger(u))`` to equal the
Moebius image of ``iota(p)`` under ``rho(u)``; the opposite sign fails that test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import HAMILTON, STANDARD, Mat2, Quaternion, qinv, qmul, rho
from .macfarlane import (
    DomainError,
    HyperboloidPoint,
    act,
    act_extended,
    _as_q,
)
from .scalar import DEFAULT_TOL

BOUNDARY_TOL = 1e-9


class BoundaryError(DomainError):
    pass


@dataclass(frozen=True)
class MinkowskiVec:
    v0: float
    v1: float
    v2: float
    v3: float

    def __iter__(self):
        return iter((self.v0, self.v1, self.v2, self.v3))


@dataclass(frozen=True)
class BallPoint:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.x * self.x + self.y * self.y + self.z * self.z >= 1:
            raise DomainError("ball point must have norm < 1")

    def __iter__(self):
        return iter((self.x, self.y, self.z))


@dataclass(frozen=True)
class UpperHalfSpacePoint:
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        if not self.x3 > BOUNDARY_TOL:
            raise BoundaryError(f"x3 = {self.x3} is not positive")

    def __iter__(self):
        return iter((self.x1, self.x2, self.x3))


def phi(v) -> float:
    v0, v1, v2, v3 = v
    return v0 * v0 - v1 * v1 - v2 * v2 - v3 * v3


def to_minkowski(p) -> MinkowskiVec:
    q = _as_q(p)
    return MinkowskiVec(complex(q.w).real, complex(q.x).real, complex(q.y).real,
                        complex(q.z).imag)


def from_minkowski(v) -> Quaternion:
    v0, v1, v2, v3 = v
    return Quaternion(complex(v0), complex(v1), complex(v2), complex(0, v3), STANDARD)


def hyperboloid_point(v, tol: float = DEFAULT_TOL) -> HyperboloidPoint:
    return HyperboloidPoint(from_minkowski(v), tol)


# -- Hermitian matrices and the spinor action -------------------------------

def eta(v) -> Mat2:
    w, x, y, z = v
    return Mat2(complex(w - x), complex(y, -z), complex(y, z), complex(w + x))


def eta_inv(m: Mat2, tol: float = DEFAULT_TOL) -> MinkowskiVec:
    a, b, c, d = (complex(e) for e in m.entries)
    if abs(a.imag) > tol or abs(d.imag) > tol or abs(b - c.conjugate()) > tol:
        raise DomainError("matrix is not Hermitian")
    return MinkowskiVec((a.real + d.real) / 2, (d.real - a.real) / 2,
                        (b.real + c.real) / 2, (c.imag - b.imag) / 2)


def wigner_act(m: Mat2, v, tol: float = DEFAULT_TOL) -> MinkowskiVec:
    """``eta^-1(m eta(v) m^H)`` for ``det m = 1`` and ``v`` on the hyperboloid."""
    if abs(complex(m.det()) - 1) > tol:
        raise DomainError("matrix must have determinant 1")
    if abs(phi(v) - 1) > tol or not tuple(v)[0] > 0:
        raise DomainError("vector is not on the upper hyperboloid")
    h = m.to_complex() @ eta(v) @ m.to_complex().conj_transpose()
    # m eta m^H is Hermitian up to rounding that scales with |m|^2
    scale = max(1.0, m.max_abs() ** 2 * max(abs(c) for c in v))
    return eta_inv(h, tol * scale)


# -- ball model ---------------------------------------------------------------

def iota_proj(p) -> BallPoint:
    """Projection from the hyperboloid to the unit ball through ``-1``."""
    v = to_minkowski(p)
    s = 1 + v.v0
    return BallPoint(v.v1 / s, v.v2 / s, v.v3 / s)


def ball_lift(b: BallPoint) -> HyperboloidPoint:
    r2 = b.x * b.x + b.y * b.y + b.z * b.z
    k = 1 / (1 - r2)
    return HyperboloidPoint._trusted(
        from_minkowski(((1 + r2) * k, 2 * b.x * k, 2 * b.y * k, 2 * b.z * k)))


def iota_perm(b: BallPoint) -> BallPoint:
    """``x i + y j + z I ij -> y i - z j + x I ij``."""
    return BallPoint(b.y, -b.z, b.x)


def iota_perm_inverse(b: BallPoint) -> BallPoint:
    return BallPoint(b.z, b.x, -b.y)


def iota_inv_sphere(b: BallPoint) -> UpperHalfSpacePoint:
    """Inversion in the sphere of radius sqrt(2) about ``-J`` (ball -> upper half-space)."""
    x, y, z = b
    den = x * x + y * y + (z + 1) ** 2
    return UpperHalfSpacePoint(2 * x / den, 2 * y / den, (1 - x * x - y * y - z * z) / den)


def uhs_to_ball(h: UpperHalfSpacePoint) -> BallPoint:
    """Inverse of :func:`iota_inv_sphere`."""
    x1, x2, x3 = h
    den = x1 * x1 + x2 * x2 + (x3 + 1) ** 2
    return BallPoint(2 * x1 / den, 2 * x2 / den, (1 - x1 * x1 - x2 * x2 - x3 * x3) / den)


def iota_composed(p) -> UpperHalfSpacePoint:
    return iota_inv_sphere(iota_perm(iota_proj(p)))


def iota(p, tol: float = BOUNDARY_TOL) -> UpperHalfSpacePoint:
    """Closed form ``(y - z I + J) / (w + x)``."""
    w, x, y, z = to_minkowski(p)
    s = w + x
    if s <= tol:
        raise BoundaryError(f"w + x = {s} is not positive")
    return UpperHalfSpacePoint(y / s, -z / s, 1 / s)


def iota_inverse(h: UpperHalfSpacePoint) -> HyperboloidPoint:
    x1, x2, x3 = h
    s = 1 / x3
    y, z = x1 * s, -x2 * s
    diff = x3 * (1 + y * y + z * z)
    return HyperboloidPoint._trusted(
        from_minkowski(((s + diff) / 2, (s - diff) / 2, y, z)))


def uhs_distance(h1: UpperHalfSpacePoint, h2: UpperHalfSpacePoint) -> float:
    """``cosh d = 1 + |h1 - h2|^2 / (2 x3 x3')``, evaluated through asinh."""
    sq = (h1.x1 - h2.x1) ** 2 + (h1.x2 - h2.x2) ** 2 + (h1.x3 - h2.x3) ** 2
    return 2 * math.asinh(math.sqrt(sq / (4 * h1.x3 * h2.x3)))


def ball_distance(b1: BallPoint, b2: BallPoint) -> float:
    sq = sum((a - c) ** 2 for a, c in zip(b1, b2))
    r1 = 1 - sum(a * a for a in b1)
    r2 = 1 - sum(a * a for a in b2)
    return 2 * math.asinh(math.sqrt(sq / (r1 * r2)))


# -- Moebius action in Hamilton's quaternions -----------------------------------

def _ham(c) -> Quaternion:
    c = complex(c)
    return Quaternion(c.real, c.imag, 0.0, 0.0, HAMILTON)


def uhs_to_hamilton(h: UpperHalfSpacePoint) -> Quaternion:
    return Quaternion(float(h.x1), float(h.x2), float(h.x3), 0.0, HAMILTON)


def hamilton_to_uhs(q: Quaternion) -> UpperHalfSpacePoint:
    # the IJ-component vanishes up to rounding
    return UpperHalfSpacePoint(q.w, q.x, q.y)


def mobius_act(m: Mat2, h: UpperHalfSpacePoint) -> UpperHalfSpacePoint:
    """``(a p + b)(c p + d)^-1`` with ``p = x1 + x2 I + x3 J``."""
    p = uhs_to_hamilton(h)
    num = qmul(_ham(m.m00), p) + _ham(m.m01)
    den = qmul(_ham(m.m10), p) + _ham(m.m11)
    return hamilton_to_uhs(qmul(num, qinv(den, tol=0.0)))


def uhs_residual(h1: UpperHalfSpacePoint, h2: UpperHalfSpacePoint) -> float:
    return math.sqrt(sum((a - b) ** 2 for a, b in zip(h1, h2)))


def equivariance_check(q, m) -> float:
    """``|iota(q m dagger(q)) - moebius(rho(q), iota(m))|``."""
    q = _as_q(q)
    lhs = iota(act(q, m))
    rhs = mobius_act(rho(q), iota(m))
    return uhs_residual(lhs, rhs)


# -- hyperbolic plane -----------------------------------------------------------

@dataclass(frozen=True)
class PlanePoint:
    """``w + x i + y j`` with ``w^2 - x^2 - y^2 = 1`` and ``w > 0``."""

    w: float
    x: float
    y: float

    def __post_init__(self):
        if not self.w > 0 or abs(self.w * self.w - self.x * self.x - self.y * self.y - 1) > 1e-9 * max(1.0, self.w * self.w):
            raise DomainError("not on the upper sheet of w^2 - x^2 - y^2 = 1")

    def quaternion(self) -> Quaternion:
        return Quaternion(self.w, self.x, self.y, 0.0, STANDARD)


def plane_isometry(w, x, y, z, tol: float = DEFAULT_TOL) -> Quaternion:
    """Real unit quaternion in (1,1/R)."""
    q = Quaternion(float(w), float(x), float(y), float(z), STANDARD)
    n = q.w * q.w - q.x * q.x - q.y * q.y + q.z * q.z
    if abs(n - 1) > tol:
        raise DomainError(f"plane isometry needs norm 1, got {n}")
    return q


def act_2d(g: Quaternion, p: PlanePoint) -> PlanePoint:
    """``g p dagger(g)`` with real coefficients (dagger flips only the ij sign)."""
    r = act_extended(g, p.quaternion())
    return PlanePoint(r.w, r.x, r.y)


def embed_plane_point(p: PlanePoint) -> HyperboloidPoint:
    return HyperboloidPoint._trusted(Quaternion(complex(p.w), complex(p.x), complex(p.y), 0j))


def embed_plane_isometry(g: Quaternion) -> Quaternion:
    return Quaternion(*(complex(c) for c in g.coeffs), alg=STANDARD)


def iota_2d(p: PlanePoint, tol: float = BOUNDARY_TOL) -> complex:
    """``(y + I) / (w + x)`` in the upper half-plane."""
    s = p.w + p.x
    if s <= tol:
        raise BoundaryError(f"w + x = {s} is not positive")
    return complex(p.y / s, 1 / s)


def real_mobius(m: Mat2, z: complex) -> complex:
    return (m.m00 * z + m.m01) / (m.m10 * z + m.m11)

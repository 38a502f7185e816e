"""Hyperbolic 3-space as the unit hyperboloid of dagger-symmetric quaternions.

Points are quaternions ``p`` with ``dagger(p) == p``, ``norm(p) == 1`` and
positive trace.  A unit quaternion ``u`` moves points by ``p -> u p dagger(u)``;
``u`` and ``-u`` give the same motion.

Length conventions
------------------
For an isometry ``u`` the complex number ``arcosh(tr(u)/2)`` is taken on a
fixed branch (see :func:`arcosh_principal`).  Two translation lengths are
exposed and they differ by a factor of two:

* :func:`translation_length` returns ``|Re arcosh(tr/2)|``;
* :func:`measured_displacement` returns the distance a point on the axis is
  actually moved, which works out to ``2 |Re arcosh(tr/2)|``.

Rotation angles have the same split: :func:`half_trace_angle` is
``Im arcosh(tr/2)`` and :func:`rotation_angle` is the geometric angle
``2 Im arcosh(tr/2)`` folded into ``[0, pi]``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    STANDARD,
    Mat2,
    Quaternion,
    allclose,
    commutator,
    dagger,
    distance_inf,
    norm,
    pure_part,
    qmul,
    rho_general,
    rho_general_inverse,
    star,
    sym_skew_split,
    trace,
)
from .scalar import DEFAULT_TOL, QuadExt, is_exact, is_real

PARABOLIC_TOL = 1e-8


class DomainError(ValueError):
    pass


class InvalidPointError(DomainError):
    pass


class UndefinedInvariantError(DomainError):
    pass


class NoAxisError(DomainError):
    pass


class DegenerateGeodesicError(DomainError):
    pass


def _exact(q: Quaternion) -> bool:
    return all(is_exact(c) for c in q.coeffs)


def _scalar_close(s, target, tol) -> bool:
    if is_exact(s):
        return s == target
    return abs(complex(s) - target) <= tol


def _positive(s, tol) -> bool:
    if isinstance(s, QuadExt):
        return s.v == 0 and s.u > 0
    if is_exact(s):
        return s > 0
    c = complex(s)
    return abs(c.imag) <= tol and c.real > tol


def one(alg=STANDARD, exact=False, field=None) -> Quaternion:
    if exact:
        u = field(1) if field is not None else Fraction(1)
        return Quaternion(u, u - u, u - u, u - u, alg)
    return Quaternion(1 + 0j, 0j, 0j, 0j, alg)


# -- membership -------------------------------------------------------------

def in_M(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """Dagger-symmetric: real w, x, y and purely imaginary ij-coefficient."""
    return allclose(dagger(q), q, tol)


def in_W(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return allclose(dagger(q), -q, tol)


def in_W1(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return in_W(q, tol) and _scalar_close(norm(q), 1, tol)


def in_M_plus_1(q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return in_M(q, tol) and _scalar_close(norm(q), 1, tol) and _positive(trace(q), tol)


class HyperboloidPoint:
    """A quaternion certified to lie on the upper unit hyperboloid."""

    __slots__ = ("q",)

    def __init__(self, q: Quaternion, tol: float = DEFAULT_TOL):
        if not in_M_plus_1(q, tol):
            raise InvalidPointError(f"not a hyperboloid point: {q!r}")
        self.q = q

    @classmethod
    def _trusted(cls, q: Quaternion) -> HyperboloidPoint:
        p = object.__new__(cls)
        p.q = q
        return p

    def __eq__(self, other):
        return isinstance(other, HyperboloidPoint) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"HyperboloidPoint({self.q!r})"


ONE = HyperboloidPoint._trusted(one())


def canonical_sign(q: Quaternion, tol: float = DEFAULT_TOL) -> tuple[Quaternion, bool]:
    """Pick the representative of ``{q, -q}`` whose first significant real
    component (in the order Re w, Im w, Re x, ..., Im z) is positive.

    Returns ``(representative, flipped)``.
    """
    exact = _exact(q)
    for c in q.coeffs:
        if isinstance(c, QuadExt):
            parts = (c.u, c.v)
        elif exact:
            parts = (c, 0)
        else:
            c = complex(c)
            parts = (c.real, c.imag)
        for part in parts:
            if (part != 0) if exact else (abs(part) > tol):
                if part < 0:
                    return -q, True
                return q, False
    return q, False


class Isometry:
    """A unit quaternion taken up to sign, stored as its canonical representative."""

    __slots__ = ("q", "flipped")

    def __init__(self, q: Quaternion, tol: float = DEFAULT_TOL):
        if not _scalar_close(norm(q), 1, tol):
            raise DomainError(f"isometry needs norm 1, got {norm(q)!r}")
        self.q, self.flipped = canonical_sign(q, tol)

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"Isometry({self.q!r})"


def normalized(q: Quaternion, tol: float = DEFAULT_TOL) -> Quaternion:
    """Scale ``q`` to norm 1, allowed only when its norm is real and positive."""
    n = complex(norm(q))
    if abs(n.imag) > tol * max(1.0, abs(n)) or n.real <= tol:
        raise DomainError(f"cannot normalize: norm {n} is not real and positive")
    return q * (1 / math.sqrt(n.real))


def _as_q(x) -> Quaternion:
    return x.q if isinstance(x, (Isometry, HyperboloidPoint)) else x


def _as_isometry(u, tol) -> Isometry:
    return u if isinstance(u, Isometry) else Isometry(u, tol)


def _as_point(p, tol) -> HyperboloidPoint:
    return p if isinstance(p, HyperboloidPoint) else HyperboloidPoint(p, tol)


# -- the action ---------------------------------------------------------------

def act_extended(q, p) -> Quaternion:
    """``q p dagger(q)`` for arbitrary quaternions."""
    q, p = _as_q(q), _as_q(p)
    return qmul(qmul(q, p), dagger(q))


def act(u, p, tol: float = DEFAULT_TOL) -> HyperboloidPoint:
    u = _as_isometry(u, tol)
    p = _as_point(p, tol)
    return HyperboloidPoint._trusted(act_extended(u.q, p.q))


def decompose_action(q) -> tuple[Quaternion, Quaternion, Quaternion]:
    """Split ``q = m + w`` into dagger-symmetric and skew parts and return
    ``(m 1 m^dagger, w 1 w^dagger, [m, w])``; then ``q dagger(q)`` equals
    ``first + second - third``.
    """
    q = _as_q(q)
    m, w = sym_skew_split(q)
    e = one(q.alg, exact=_exact(q), field=getattr(q.w, "field", None))
    return act_extended(m, e), act_extended(w, e), commutator(m, w)


# -- classification -----------------------------------------------------------

class IsometryClass(str, enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    PURELY_LOXODROMIC = "purely-loxodromic"


def classify(u, tol: float = DEFAULT_TOL) -> IsometryClass:
    q = _as_isometry(u, tol).q
    t = trace(q)
    if _exact(q):
        if q.x == 0 and q.y == 0 and q.z == 0 and (q.w == 1 or q.w == -1):
            return IsometryClass.IDENTITY
        if t == 2 or t == -2:
            return IsometryClass.PARABOLIC
        if not is_real(t):
            return IsometryClass.PURELY_LOXODROMIC
        real_t = t.u if isinstance(t, QuadExt) else t
        return IsometryClass.ELLIPTIC if abs(real_t) < 2 else IsometryClass.HYPERBOLIC
    e = one(q.alg)
    if distance_inf(q, e) <= tol or distance_inf(q, -e) <= tol:
        return IsometryClass.IDENTITY
    tc = complex(t)
    if abs(tc - 2) <= PARABOLIC_TOL or abs(tc + 2) <= PARABOLIC_TOL:
        return IsometryClass.PARABOLIC
    if is_real(tc, tol):
        return IsometryClass.ELLIPTIC if abs(tc.real) < 2 else IsometryClass.HYPERBOLIC
    return IsometryClass.PURELY_LOXODROMIC


def arcosh_principal(z) -> complex:
    """``log(z + sqrt(z-1) sqrt(z+1))`` with principal roots, sign-normalized
    so the imaginary part lies in ``[0, pi]``.
    """
    z = complex(z)
    if z.imag == 0:
        z = complex(z.real, 0.0)
    r = cmath.log(z + cmath.sqrt(z - 1) * cmath.sqrt(z + 1))
    if r.imag < 0 or (r.imag == 0 and r.real < 0):
        r = -r
    return r


def _half_trace_arcosh(q: Quaternion) -> complex:
    return arcosh_principal(complex(trace(q)) / 2)


def translation_length(u, tol: float = DEFAULT_TOL) -> float:
    """``|Re arcosh(tr/2)|``; zero for identity and elliptic elements."""
    cls = classify(u, tol)
    if cls is IsometryClass.PARABOLIC:
        raise UndefinedInvariantError("parabolic isometries have no translation length")
    if cls in (IsometryClass.IDENTITY, IsometryClass.ELLIPTIC):
        return 0.0
    return abs(_half_trace_arcosh(_as_q(u)).real)


def measured_displacement(u, tol: float = DEFAULT_TOL) -> float:
    """Distance a point on the axis of ``u`` is moved by ``u``."""
    cls = classify(u, tol)
    if cls is IsometryClass.PARABOLIC:
        raise UndefinedInvariantError("parabolic isometries have no axis")
    if cls is IsometryClass.IDENTITY:
        return 0.0
    b = axis(u, tol).basepoint
    return distance(b, act(u, b, tol))


def rotation_angle(u, tol: float = DEFAULT_TOL) -> float:
    """Geometric rotation angle about the axis, in ``[0, pi]``."""
    cls = classify(u, tol)
    if cls is IsometryClass.PARABOLIC:
        raise UndefinedInvariantError("parabolic isometries have no rotation angle")
    if cls in (IsometryClass.IDENTITY, IsometryClass.HYPERBOLIC):
        return 0.0
    theta = 2 * _half_trace_arcosh(_as_q(u)).imag
    return 2 * math.pi - theta if theta > math.pi else theta


def half_trace_angle(u, tol: float = DEFAULT_TOL) -> float:
    """``Im arcosh(tr/2)`` on the normalized branch (pi/2 for skew points)."""
    cls = classify(u, tol)
    if cls is IsometryClass.PARABOLIC:
        raise UndefinedInvariantError("parabolic isometries have no rotation angle")
    if cls is IsometryClass.IDENTITY:
        return 0.0
    return _half_trace_arcosh(_as_q(u)).imag


# -- metric -------------------------------------------------------------------

def minkowski_pairing(p, q) -> float:
    """Bilinear form of the norm: the scalar part of ``p star(q)``."""
    p, q = _as_q(p), _as_q(q)
    return complex(qmul(p, star(q)).w).real


def distance(p, q, tol: float = DEFAULT_TOL) -> float:
    p, q = _as_q(p), _as_q(q)
    pairing = minkowski_pairing(p, q)
    if pairing < 1 - tol:
        raise InvalidPointError(f"Minkowski pairing {pairing} < 1")
    # 2 asinh(|p - q| / 2) is arcosh(pairing) without the cancellation near 1
    gap = -complex(norm(p - q)).real
    return 2 * math.asinh(math.sqrt(max(0.0, gap)) / 2)


def sqrt_point(p) -> Quaternion:
    """The unique hyperboloid point ``s`` with ``s * s == p``."""
    p = _as_q(p)
    w = complex(p.w).real
    return (p + 1) * (1 / math.sqrt(2 + 2 * w))


def pure_parallel_residual(q, p) -> float:
    """How far the pure part of ``q`` is from a real multiple of the pure part of ``p``."""
    a = [complex(c) for c in _as_q(q).coeffs[1:]]
    b = [complex(c) for c in _as_q(p).coeffs[1:]]
    bb = sum(abs(c) ** 2 for c in b)
    if bb == 0:
        return max(abs(c) for c in a)
    lam = sum((x * y.conjugate()).real for x, y in zip(a, b)) / bb
    return max(abs(x - lam * y) for x, y in zip(a, b))


# -- geodesics ----------------------------------------------------------------

@dataclass(frozen=True)
class Geodesic:
    """Complete oriented geodesic through ``basepoint``.

    ``direction`` is a pure dagger-symmetric quaternion of norm -1 giving the
    unit tangent at 1; it is carried to ``basepoint`` by the square root of
    ``basepoint``.  The curve is ``point(t) = s (cosh t + sinh t * orientation
    * direction) s`` with ``s * s = basepoint``.
    """

    basepoint: HyperboloidPoint
    direction: Quaternion
    orientation: int = 1

    def _root(self) -> Quaternion:
        return sqrt_point(self.basepoint)

    def point(self, t: float) -> HyperboloidPoint:
        s = self._root()
        local = self.direction * (self.orientation * math.sinh(t)) + math.cosh(t)
        return HyperboloidPoint._trusted(qmul(qmul(s, local), s))

    def tangent(self) -> Quaternion:
        s = self._root()
        return qmul(qmul(s, self.direction), s) * self.orientation

    def residual(self, q) -> float:
        """Distance of ``q`` from the geodesic, measured as the failure of its
        pure part (in the frame of the basepoint) to be parallel to ``direction``.
        """
        s_inv = star(self._root())
        local = act_extended(s_inv, _as_q(q))
        return pure_parallel_residual(local, self.direction)

    def contains(self, q, tol: float = DEFAULT_TOL) -> bool:
        return in_M_plus_1(_as_q(q), tol) and self.residual(q) <= tol

    def parameter_of(self, q) -> float:
        """Signed arclength from the basepoint to (the projection of) ``q``."""
        local = act_extended(star(self._root()), _as_q(q))
        v = self.direction * self.orientation
        return math.asinh(-minkowski_pairing(pure_part(local), v))


def geodesic_through(p1, p2, tol: float = DEFAULT_TOL) -> Geodesic:
    p1 = _as_point(p1, tol)
    p2 = _as_point(p2, tol)
    if distance(p1, p2, tol) <= tol:
        raise DegenerateGeodesicError("points coincide")
    s = sqrt_point(p1)
    local = act_extended(star(s), p2.q)
    v = pure_part(local)
    v = v * (1 / math.sqrt(-complex(norm(v)).real))
    v, flipped = canonical_sign(v, tol)
    return Geodesic(p1, v, -1 if flipped else 1)


def _eigvec(m: Mat2, lam: complex) -> tuple[complex, complex]:
    a, b, c, d = (complex(x) for x in m.entries)
    v1 = (b, lam - a)
    v2 = (lam - d, c)
    n1 = abs(v1[0]) + abs(v1[1])
    n2 = abs(v2[0]) + abs(v2[1])
    v = v1 if n1 >= n2 else v2
    if max(n1, n2) == 0:
        raise NoAxisError("scalar matrix has no axis")
    return v


def _null_vector(v: tuple[complex, complex], alg) -> Quaternion:
    v0, v1 = v
    herm = Mat2(abs(v0) ** 2, v0 * v1.conjugate(), v1 * v0.conjugate(), abs(v1) ** 2)
    return rho_general_inverse(herm, alg)


def fixed_null_vectors(u) -> tuple[Quaternion, Quaternion]:
    """Light-like quaternions spanning the axis of ``u``, repelling end first.

    Both are eigenvectors of ``p -> u p dagger(u)``; they come from the
    eigenvectors of the 2x2 matrix of ``u``.
    """
    q = _as_q(u)
    m = rho_general(q)
    t = m.trace()
    disc = cmath.sqrt(t * t - 4 * m.det())
    l1, l2 = (t - disc) / 2, (t + disc) / 2
    if abs(l1) > abs(l2):
        l1, l2 = l2, l1
    n1 = _null_vector(_eigvec(m, l1), q.alg)
    n2 = _null_vector(_eigvec(m, l2), q.alg)
    return n1, n2


def axis(u, tol: float = DEFAULT_TOL) -> Geodesic:
    """The invariant geodesic of a non-parabolic, non-identity isometry."""
    iso = _as_isometry(u, tol)
    cls = classify(iso, tol)
    if cls in (IsometryClass.IDENTITY, IsometryClass.PARABOLIC):
        raise NoAxisError(f"{cls.value} isometries have no axis")
    q = iso.q
    e = one(q.alg)
    qc = Quaternion(*(complex(c) for c in q.coeffs), alg=q.alg)
    if in_M(qc, tol):
        p = qc if complex(qc.w).real > 0 else -qc
        return geodesic_through(HyperboloidPoint._trusted(e), HyperboloidPoint._trusted(p), tol)
    if in_W(qc, tol) and abs(complex(trace(qc))) > tol:
        return geodesic_through(HyperboloidPoint._trusted(e),
                                HyperboloidPoint._trusted(-qmul(qc, qc)), tol)
    n1, n2 = fixed_null_vectors(qc)
    pairing = minkowski_pairing(n1, n2)
    scale = 1 / math.sqrt(2 * pairing)
    base = (n1 + n2) * scale
    ahead = n1 * (scale * math.exp(-1)) + n2 * (scale * math.e)
    return geodesic_through(HyperboloidPoint._trusted(base), HyperboloidPoint._trusted(ahead), tol)


def geodesic_to_json(g: Geodesic) -> dict:
    from .algebra import to_json
    return {
        "basepoint": to_json(g.basepoint.q),
        "direction": to_json(g.direction),
        "orientation": g.orientation,
    }

"""Seeded random generators for the property suites and tests.

Every generator takes a :class:`random.Random`; callers derive one per case
with :func:`case_rng` so results do not depend on iteration order.
"""

from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

from .algebra import STANDARD, AlgebraParams, Quaternion, dagger, norm, qmul
from .scalar import QuadExt, QuadField


def case_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def _cplx(rng: random.Random, scale: float) -> complex:
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def random_quaternion(rng: random.Random, scale: float = 3.0, alg=STANDARD) -> Quaternion:
    return Quaternion(*(_cplx(rng, scale) for _ in range(4)), alg=alg)


def random_unit(rng: random.Random, bound: float = 10.0, alg=STANDARD) -> Quaternion:
    """Unit-norm quaternion with every coefficient of modulus at most ``bound``."""
    while True:
        q = random_quaternion(rng, 2.0, alg)
        n = complex(norm(q))
        if abs(n) < 1e-3:
            continue
        u = q * (1 / cmath.sqrt(n))
        if max(abs(c) for c in u.coeffs) <= bound:
            return u


def random_point(rng: random.Random, spread: float = 2.0) -> Quaternion:
    """Hyperboloid point with spatial coordinates uniform in ``[-spread, spread]``."""
    x, y, z = (rng.uniform(-spread, spread) for _ in range(3))
    w = math.sqrt(1 + x * x + y * y + z * z)
    return Quaternion(complex(w), complex(x), complex(y), complex(0, z))


def random_skew_unit(rng: random.Random, spread: float = 2.0) -> Quaternion:
    """Element of the unit skew space with nonzero trace.

    Skew elements are ``I`` times symmetric ones; ``n(I m) = -n(m)``, so the
    symmetric part must have norm -1 (a spacelike unit vector plus a time part).
    """
    while True:
        t = rng.uniform(-spread, spread)
        if abs(t) < 1e-3:
            continue
        x, y, z = (rng.gauss(0, 1) for _ in range(3))
        r = math.sqrt(x * x + y * y + z * z)
        if r < 1e-6:
            continue
        s = math.sqrt(1 + t * t) / r
        m = Quaternion(complex(t), complex(x * s), complex(y * s), complex(0, z * s))
        return m * 1j


def random_plane_point(rng: random.Random, spread: float = 2.0) -> tuple[float, float, float]:
    x, y = rng.uniform(-spread, spread), rng.uniform(-spread, spread)
    return math.sqrt(1 + x * x + y * y), x, y


def random_plane_isometry(rng: random.Random, bound: float = 10.0) -> Quaternion:
    """Real quaternion of norm ``w^2 - x^2 - y^2 + z^2 = 1``."""
    while True:
        q = Quaternion(*(rng.uniform(-2, 2) for _ in range(4)))
        n = q.w * q.w - q.x * q.x - q.y * q.y + q.z * q.z
        if n < 1e-3:
            continue
        u = q * (1 / math.sqrt(n))
        if max(abs(c) for c in u.coeffs) <= bound:
            return u


# -- exact samples ---------------------------------------------------------------

def random_rational(rng: random.Random, height: int = 9) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_exact_quaternion(rng: random.Random, alg: AlgebraParams = STANDARD,
                            field: QuadField | None = None, height: int = 9) -> Quaternion:
    f = field or QuadField(1)
    return Quaternion(*(QuadExt(random_rational(rng, height), random_rational(rng, height), f)
                        for _ in range(4)), alg=alg)


def random_exact_unit(rng: random.Random, alg: AlgebraParams = STANDARD,
                      field: QuadField | None = None, height: int = 5) -> Quaternion:
    """``q^2 / n(q)``: exact norm 1 since ``n(q^2) = n(q)^2``."""
    while True:
        q = random_exact_quaternion(rng, alg, field, height)
        n = norm(q)
        if n != 0:
            return qmul(q, q) * n.inverse()


def random_exact_point(rng: random.Random, alg: AlgebraParams = STANDARD,
                       field: QuadField | None = None, height: int = 5) -> Quaternion:
    """``u dagger(u)`` for an exact unit ``u``: symmetric, norm 1 and positive trace."""
    u = random_exact_unit(rng, alg, field, height)
    return qmul(u, dagger(u))


def random_real_rational_quaternion(rng: random.Random, alg: AlgebraParams, height: int = 9) -> Quaternion:
    return Quaternion(*(random_rational(rng, height) for _ in range(4)), alg=alg)

"""Randomized property suites behind ``mfq verify``.

Each suite draws ``n`` cases, case ``k`` from ``random.Random`` seeded with
``(seed, k)``, and reports the worst residual of every identity it checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import genmac
from .algebra import (
    HAMILTON,
    STANDARD,
    Mat2,
    Quaternion,
    dagger,
    distance_inf,
    mat_distance,
    norm,
    qmul,
    rho,
    star,
    trace,
)
from .macfarlane import (
    ONE,
    act,
    act_extended,
    arcosh_principal,
    decompose_action,
    distance,
    geodesic_through,
    one,
)
from .models import (
    PlanePoint,
    act_2d,
    embed_plane_isometry,
    embed_plane_point,
    equivariance_check,
    iota,
    iota_2d,
    real_mobius,
    to_minkowski,
    wigner_act,
)
from .sampling import (
    case_rng,
    random_exact_point,
    random_exact_quaternion,
    random_exact_unit,
    random_plane_isometry,
    random_plane_point,
    random_point,
    random_real_rational_quaternion,
    random_skew_unit,
    random_unit,
)
from .scalar import QuadField

SUITES = ("equivariance", "closure", "homomorphism", "decomposition", "axes", "2d", "generalized")
GENERALIZED_ALGEBRAS = ((1, 1, 1), (2, 3, 5), (1, 1, 3))
# identities that hold up to rounding only, checked tighter than the user tolerance
STRUCTURE_TOL = 1e-12
EMBED_TOL = 1e-10


class UnknownSuiteError(ValueError):
    pass


@dataclass
class Check:
    name: str
    tol: float
    worst: float = 0.0
    failures: int = 0

    def record(self, residual: float):
        if residual > self.worst or math.isnan(residual):
            self.worst = residual
        if not residual <= self.tol:
            self.failures += 1

    def record_exact(self, ok: bool):
        if not ok:
            self.failures += 1
            self.worst = 1.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "tol": self.tol, "max_residual": self.worst,
                "failures": self.failures, "passed": self.passed}


@dataclass
class SuiteResult:
    suite: str
    n: int
    seed: int
    mode: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def check(self, name: str, tol: float) -> Check:
        c = Check(name, tol)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.worst for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "n": self.n, "seed": self.seed, "mode": self.mode,
                "passed": self.passed, "max_residual": self.max_residual,
                "checks": [c.to_dict() for c in self.checks], "info": self.info}


def _mat_exact_equal(m: Mat2, n: Mat2) -> bool:
    return all(a == b for a, b in zip(m.entries, n.entries))


# -- float suites --------------------------------------------------------------------

def _equivariance(res: SuiteResult, tol: float):
    eq = res.check("iota_equivariance", tol)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        eq.record(equivariance_check(random_unit(rng), random_point(rng)))


def _closure(res: SuiteResult, tol: float):
    sym = res.check("dagger_symmetric", tol)
    nrm = res.check("unit_norm", tol)
    pos = res.check("positive_trace", 0.0)
    wig = res.check("matches_spinor_action", tol)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        u, m = random_unit(rng), random_point(rng)
        r = act_extended(u, m)
        sym.record(distance_inf(dagger(r), r))
        nrm.record(abs(complex(norm(r)) - 1))
        t = complex(trace(r))
        pos.record(0.0 if t.real > 0 else abs(t.real) + 1)
        lhs = to_minkowski(r)
        rhs = wigner_act(rho(u), to_minkowski(m))
        wig.record(max(abs(a - b) for a, b in zip(lhs, rhs)))


def _homomorphism(res: SuiteResult, tol: float):
    mult = res.check("rho_multiplicative", tol)
    det = res.check("det_is_norm", tol)
    tr = res.check("matrix_trace_is_trace", tol)
    adj = res.check("dagger_is_conj_transpose", tol)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        p, q = random_unit(rng), random_unit(rng)
        mp, mq = rho(p), rho(q)
        mult.record(mat_distance(rho(qmul(p, q)), mp @ mq))
        det.record(abs(complex(mp.det()) - complex(norm(p))))
        tr.record(abs(complex(mp.trace()) - complex(trace(p))))
        adj.record(mat_distance(rho(dagger(p)), mp.conj_transpose()))


def _homomorphism_exact(res: SuiteResult, tol: float):
    f = QuadField(1)
    mult = res.check("rho_multiplicative", 0.0)
    det = res.check("det_is_norm", 0.0)
    tr = res.check("matrix_trace_is_trace", 0.0)
    adj = res.check("dagger_is_conj_transpose", 0.0)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        p = random_exact_quaternion(rng, field=f)
        q = random_exact_quaternion(rng, field=f)
        mp = rho(p)
        mult.record_exact(_mat_exact_equal(rho(qmul(p, q)), mp @ rho(q)))
        det.record_exact(mp.det() == norm(p))
        tr.record_exact(mp.trace() == trace(p))
        adj.record_exact(_mat_exact_equal(rho(dagger(p)), mp.conj_transpose()))


def _decomposition(res: SuiteResult, tol: float):
    ident = res.check("decomposition_identity", tol)
    tr_add = res.check("trace_additivity", tol)
    comm = res.check("commutator_in_pure_symmetric", min(tol, STRUCTURE_TOL))
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        q = random_unit(rng)
        mm, ww, c = decompose_action(q)
        lhs = act_extended(q, one())
        ident.record(distance_inf(lhs, mm + ww - c))
        tr_add.record(abs(complex(trace(lhs)) - complex(trace(mm)) - complex(trace(ww))))
        comm.record(max(distance_inf(dagger(c), c), abs(complex(trace(c)))))


def _decomposition_exact(res: SuiteResult, tol: float):
    f = QuadField(1)
    ident = res.check("decomposition_identity", 0.0)
    tr_add = res.check("trace_additivity", 0.0)
    comm = res.check("commutator_in_pure_symmetric", 0.0)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        q = random_exact_unit(rng, field=f)
        mm, ww, c = decompose_action(q)
        lhs = act_extended(q, one(exact=True, field=f))
        ident.record_exact(lhs == mm + ww - c)
        tr_add.record_exact(trace(lhs) == trace(mm) + trace(ww))
        comm.record_exact(dagger(c) == c and trace(c) == 0)


def _closure_exact(res: SuiteResult, tol: float):
    ctx = genmac.GenAlgebraContext(1, 1, 1)
    closed = res.check("exact_closure", 0.0)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        u = random_exact_unit(rng, field=ctx.qfield)
        p = random_exact_point(rng, field=ctx.qfield)
        try:
            genmac.gen_act(u, p, ctx)
            closed.record_exact(True)
        except genmac.DomainError:
            closed.record_exact(False)


_AXIS_TIMES = (-1.5, 0.0, 0.8, 2.0)


def _axes(res: SuiteResult, tol: float):
    inv = res.check("hyperbolic_axis_invariant", tol)
    const = res.check("displacement_constant_on_axis", tol)
    twice = res.check("displacement_is_twice_arcosh", tol)
    square = res.check("skew_action_on_one_is_minus_square", min(tol, STRUCTURE_TOL))
    skew_inv = res.check("skew_axis_invariant", tol)
    quarter = res.check("skew_arcosh_imaginary_part_is_half_pi", tol)
    ratio = 0.0
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        p = random_point(rng)
        g = geodesic_through(ONE, p)
        half = complex(trace(p)).real / 2
        expected = 2 * math.acosh(half)
        disp = []
        for t in _AXIS_TIMES:
            x = g.point(t)
            y = act(p, x)
            inv.record(g.residual(y))
            disp.append(distance(x, y))
        const.record(max(disp) - min(disp))
        twice.record(max(abs(d - expected) for d in disp))
        ratio = max(ratio, abs(disp[0] / math.acosh(half) - 2))

        s = random_skew_unit(rng)
        image = act_extended(s, one())
        sq = -qmul(s, s)
        square.record(distance_inf(image, sq))
        h = geodesic_through(ONE, sq)
        for t in _AXIS_TIMES:
            skew_inv.record(h.residual(act(s, h.point(t))))
        quarter.record(abs(arcosh_principal(complex(trace(s)) / 2).imag - math.pi / 2))
    res.info["displacement_over_arcosh_half_trace_minus_2"] = ratio


def _plane(res: SuiteResult, tol: float):
    embed = res.check("embedded_action_matches_3d", min(tol, EMBED_TOL))
    mob = res.check("real_mobius_equivariance", tol)
    restrict = res.check("iota_restricts_to_plane_map", tol)
    skew_norm = res.check("skew_norm_is_plus_z_squared", 0.0)
    for k in range(res.n):
        rng = case_rng(res.seed, k)
        g = random_plane_isometry(rng)
        p = PlanePoint(*random_plane_point(rng))
        r2 = act_2d(g, p)
        r3 = act(embed_plane_isometry(g), embed_plane_point(p))
        embed.record(distance_inf(r3.q, embed_plane_point(r2).q))
        mob.record(abs(iota_2d(r2) - real_mobius(rho(g), iota_2d(p))))
        h = iota(embed_plane_point(p))
        z2 = iota_2d(p)
        restrict.record(max(abs(h.x1 - z2.real), abs(h.x2), abs(h.x3 - z2.imag)))
        z = rng.randint(-50, 50)
        skew_norm.record_exact(norm(Quaternion(0, 0, 0, z)) == z * z)
    # the unit-norm skew elements are exactly +-ij, the half-turn about 1
    res.info["unit_skew_elements"] = ["k", "-k"]
    res.info["unit_skew_trace"] = trace(Quaternion(0, 0, 0, 1))


def _generalized(res: SuiteResult, tol: float, algebras=GENERALIZED_ALGEBRAS):
    sig = res.check("signature_1_3", 0.0)
    closure = res.check("exact_closure", 0.0)
    compose = res.check("action_composes", 0.0)
    mult = res.check("rho_multiplicative", 0.0)
    adj = res.check("dagger_is_conj_transpose", 0.0)
    unique = res.check("dagger_unique_sign_pattern", 0.0)
    hamilton = res.check("hamilton_dagger_is_star", 0.0)
    for abd in algebras:
        ctx = genmac.GenAlgebraContext(*abd)
        sig.record_exact(genmac.gen_signature(ctx) == (1, 3))
        winners = [c.signs for c in genmac.enumerate_dagger_candidates(ctx) if c.qualifies]
        unique.record_exact(winners == [(1, 1, 1, -1)])
        ring = genmac.SurdRing(ctx.a, ctx.b, ctx.d)
        for k in range(res.n):
            rng = case_rng(res.seed, k)
            u = random_exact_unit(rng, ctx.alg, ctx.qfield, height=3)
            v = random_exact_unit(rng, ctx.alg, ctx.qfield, height=3)
            p = random_exact_point(rng, ctx.alg, ctx.qfield, height=3)
            try:
                first = genmac.gen_act(u, genmac.gen_act(v, p, ctx), ctx)
                closure.record_exact(True)
                compose.record_exact(first == genmac.gen_act(qmul(u, v), p, ctx))
            except genmac.DomainError:
                closure.record_exact(False)
            q = random_exact_quaternion(rng, ctx.alg, ctx.qfield, height=5)
            mult.record_exact(_mat_exact_equal(genmac.gen_rho(qmul(u, q), ring),
                                               genmac.gen_rho(u, ring) @ genmac.gen_rho(q, ring)))
            adj.record_exact(_mat_exact_equal(genmac.gen_rho(dagger(q), ring),
                                              genmac.gen_rho(q, ring).conj_transpose()))
    ham_ring = genmac.SurdRing(-1, -1, 1)
    for k in range(res.n):
        q = random_real_rational_quaternion(case_rng(res.seed, k), HAMILTON)
        hamilton.record_exact(genmac.conj_transpose_pullback(q, ham_ring) == star(q))
    res.info["algebras"] = [[str(v) for v in abd] for abd in algebras]


_FLOAT = {
    "equivariance": _equivariance,
    "closure": _closure,
    "homomorphism": _homomorphism,
    "decomposition": _decomposition,
    "axes": _axes,
    "2d": _plane,
}
_EXACT = {
    "closure": _closure_exact,
    "homomorphism": _homomorphism_exact,
    "decomposition": _decomposition_exact,
}


def run_suite(name: str, n: int = 1000, seed: int = 0, tol: float = 1e-9,
              mode: str = "float", algebras=None) -> SuiteResult:
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name, n, seed, mode)
    if name == "generalized":
        _generalized(res, tol, algebras or GENERALIZED_ALGEBRAS)
        return res
    table = _EXACT if mode == "exact" else _FLOAT
    if name not in table:
        raise UnknownSuiteError(f"suite {name!r} has no {mode} mode")
    table[name](res, tol)
    return res

"""``mfq`` command-line interface.

Exit status is 0 on success, 1 when a verification suite fails and 2 for
usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import math
import shlex
import sys
from fractions import Fraction

from . import genmac, models
from .algebra import STANDARD, AlgebraParams, Quaternion, norm, sym_skew_split, to_json, trace
from .macfarlane import (
    DomainError,
    HyperboloidPoint,
    IsometryClass,
    UndefinedInvariantError,
    act,
    act_extended,
    axis,
    classify,
    decompose_action,
    distance,
    geodesic_to_json,
    measured_displacement,
    normalized,
    one,
    half_trace_angle,
    rotation_angle,
    translation_length,
)
from .parser import ParseError, format_quaternion, parse_quaternion
from .scalar import DEFAULT_TOL, format_scalar
from .verify import SUITES, UnknownSuiteError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MODELS = ("hyperboloid", "ball", "uhs")


class UsageError(Exception):
    pass


# -- JSON with round-trip doubles ------------------------------------------------------

def _dump(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        # repr is the shortest text that reads back to the same double
        return repr(obj + 0.0) if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_dump(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _plain_item(v) -> str:
    if isinstance(v, float):
        return repr(v + 0.0)
    if isinstance(v, (list, tuple)):
        return ",".join(_plain_item(x) for x in v)
    return str(v)


def _plain(obj, prefix="") -> list[str]:
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            nested = isinstance(v, dict) or (isinstance(v, list) and v and isinstance(v[0], dict))
            lines += _plain(v, f"{prefix}{k}." if nested else f"{prefix}{k}")
        return lines
    if isinstance(obj, list) and obj and isinstance(obj[0], dict):
        return [line for i, v in enumerate(obj) for line in _plain(v, f"{prefix}{i}.")]
    if isinstance(obj, (list, tuple)):
        return [f"{prefix}: " + " ".join(_plain_item(v) for v in obj)]
    if isinstance(obj, float):
        return [f"{prefix}: {obj + 0.0!r}"]
    return [f"{prefix}: {obj}"]


def render(obj, output: str) -> str:
    if output == "plain":
        return "\n".join(_plain(obj))
    return _dump(obj)


# -- config ------------------------------------------------------------------------------

def _algebra_arg(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected a,b,d")
    try:
        vals = tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad algebra {text!r}") from None
    if any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("a, b and d must be positive")
    return vals


def _tol_arg(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}") from None
    if not t > 0 or not math.isfinite(t):
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return t


def _standard(args) -> bool:
    return tuple(args.algebra) == (1, 1, 1)


def _context(args) -> genmac.GenAlgebraContext:
    return genmac.GenAlgebraContext(*args.algebra)


def _parse(args, text: str) -> Quaternion:
    a, b, d = args.algebra
    if args.mode == "float":
        if not _standard(args):
            raise UsageError("float mode supports only --algebra 1,1,1; use --mode exact")
        return parse_quaternion(text, "float")
    alg = STANDARD if (a, b) == (1, 1) else AlgebraParams(a, b)
    return parse_quaternion(text, "exact", d=d, alg=alg)


def _unit(args, q: Quaternion) -> tuple[Quaternion, bool]:
    """Return ``q`` scaled to norm 1 and whether scaling was needed."""
    n = norm(q)
    if args.mode == "exact":
        if n != 1:
            raise DomainError(f"exact mode needs norm exactly 1, got {format_scalar(n)}")
        return q, False
    if abs(complex(n) - 1) <= args.tol:
        return q, False
    return normalized(q, args.tol), True


def _point(args, text: str) -> Quaternion:
    p = _parse(args, text)
    if args.mode == "exact":
        genmac.GenMacPoint(p, _context(args))
    else:
        HyperboloidPoint(p, args.tol)
    return p


def _float_view(args, q: Quaternion) -> Quaternion | None:
    """Complex-coefficient copy of ``q`` when the float geometry applies to it."""
    if q.alg != STANDARD:
        return None
    return Quaternion(*(complex(c) for c in q.coeffs))


def _qjson(q: Quaternion) -> dict:
    return {"text": format_quaternion(q), **to_json(q)}


def _models_of(q: Quaternion) -> dict:
    v = models.to_minkowski(q)
    out = {"minkowski": list(v), "ball": list(models.iota_proj(q))}
    try:
        out["uhs"] = list(models.iota(q))
    except models.BoundaryError:
        out["uhs"] = None
    return out


def _optional(fn, *a):
    try:
        return fn(*a)
    except UndefinedInvariantError:
        return None


# -- commands ----------------------------------------------------------------------------

def cmd_classify(args) -> tuple[dict, int]:
    q = _parse(args, args.quaternion)
    q, scaled = _unit(args, q)
    fq = _float_view(args, q)
    cls = classify(q, args.tol)
    out = {"input": args.quaternion, "normalized": scaled, "quaternion": _qjson(q),
           "class": cls.value}
    t = trace(q)
    out["trace"] = format_scalar(t) if args.mode == "exact" else [complex(t).real, complex(t).imag]
    if fq is None:
        return out, EXIT_OK
    tol = args.tol
    out["half_trace_length"] = _optional(translation_length, fq, tol)
    out["measured_displacement"] = _optional(measured_displacement, fq, tol)
    out["rotation_angle"] = _optional(rotation_angle, fq, tol)
    out["half_trace_angle"] = _optional(half_trace_angle, fq, tol)
    if cls in (IsometryClass.IDENTITY, IsometryClass.PARABOLIC):
        out["axis"] = None
    else:
        out["axis"] = geodesic_to_json(axis(fq, tol))
    return out, EXIT_OK


def cmd_act(args) -> tuple[dict, int]:
    u, u_scaled = _unit(args, _parse(args, args.isometry))
    p = _point(args, args.point)
    if args.mode == "exact":
        r = genmac.gen_act(u, p, _context(args)).q
    else:
        r = act(u, p, args.tol).q
    out = {"isometry": _qjson(u), "point": _qjson(p), "normalized": u_scaled,
           "hyperboloid": _qjson(r)}
    fr = _float_view(args, r)
    if fr is not None:
        out.update(_models_of(fr))
    return out, EXIT_OK


def _coords(values: list[str], count: int) -> list[float]:
    flat = [v for item in values for v in item.replace(",", " ").split()]
    if len(flat) != count:
        raise UsageError(f"expected {count} coordinates, got {len(flat)}")
    try:
        return [float(v) for v in flat]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_convert(args) -> tuple[dict, int]:
    src, dst = args.source, args.target
    if src == "hyperboloid":
        v = _coords(args.coords, 4)
        p = models.hyperboloid_point(v, args.tol).q
    elif src == "ball":
        p = models.ball_lift(models.BallPoint(*_coords(args.coords, 3))).q
    else:
        p = models.iota_inverse(models.UpperHalfSpacePoint(*_coords(args.coords, 3))).q
    if dst == "hyperboloid":
        coords = list(models.to_minkowski(p))
    elif dst == "ball":
        coords = list(models.iota_proj(p))
    else:
        coords = list(models.iota(p))
    return {"from": src, "to": dst, "coords": coords}, EXIT_OK


def cmd_distance(args) -> tuple[dict, int]:
    if args.mode == "exact" and not _standard(args):
        raise UsageError("distance needs the standard algebra")
    p = _point(args, args.p)
    q = _point(args, args.q)
    fp, fq = _float_view(args, p), _float_view(args, q)
    return {"distance": distance(fp, fq, args.tol)}, EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    q = _parse(args, args.quaternion)
    mm, ww, c = decompose_action(q)
    m, w = sym_skew_split(q)
    e = one(q.alg, exact=args.mode == "exact", field=getattr(q.w, "field", None))
    lhs = act_extended(q, e)
    recon = lhs - (mm + ww - c)
    out = {"m": _qjson(m), "w": _qjson(w), "mu_m": _qjson(mm), "mu_w": _qjson(ww),
           "commutator": _qjson(c), "mu_q": _qjson(lhs)}
    if args.mode == "exact":
        out["exact_identity"] = all(x == 0 for x in recon.coeffs)
        out["exact_trace_additivity"] = trace(lhs) == trace(mm) + trace(ww)
    else:
        out["reconstruction_residual"] = max(abs(complex(x)) for x in recon.coeffs)
        out["trace_residual"] = abs(complex(trace(lhs)) - complex(trace(mm)) - complex(trace(ww)))
    return out, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    algebras = None if _standard(args) else [tuple(args.algebra)]
    if algebras is not None and args.suite != "generalized":
        raise UsageError("--algebra applies to the generalized suite only")
    res = run_suite(args.suite, n=args.n, seed=args.seed, tol=args.tol, mode=args.mode,
                    algebras=algebras)
    return res.to_dict(), EXIT_OK if res.passed else EXIT_FAIL


def cmd_batch(args) -> tuple[None, int]:
    worst = EXIT_OK
    for line in args.stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            argv = shlex.split(line)
        except ValueError as exc:
            out, code = {"error": str(exc), "exit": EXIT_USAGE}, EXIT_USAGE
        else:
            if argv and argv[0] == "mfq":
                argv = argv[1:]
            if argv and argv[0] == "batch":
                out, code = {"error": "batch cannot be nested", "exit": EXIT_USAGE}, EXIT_USAGE
            else:
                out, code, output = execute(argv, args.stdin)
        print(_dump({"command": line, "exit": code, "result": out}), file=args.stdout)
        worst = max(worst, code)
    return None, worst


# -- argument parsing ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("float", "exact"), default="float")
    common.add_argument("--tol", type=_tol_arg, default=DEFAULT_TOL)
    common.add_argument("--algebra", type=_algebra_arg, default=(1, 1, 1), metavar="A,B,D")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--n", type=int, default=1000)
    common.add_argument("--output", choices=("json", "plain"), default="json")

    ap = argparse.ArgumentParser(prog="mfq", description="Quaternionic hyperbolic isometries.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a unit quaternion")
    p.add_argument("quaternion")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("act", parents=[common], help="apply u p dagger(u)")
    p.add_argument("isometry")
    p.add_argument("point")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("convert", parents=[common], help="convert between models")
    p.add_argument("source", choices=MODELS)
    p.add_argument("target", choices=MODELS)
    p.add_argument("coords", nargs="+")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("distance", parents=[common], help="hyperbolic distance of two points")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("decompose", parents=[common], help="split the action of q")
    p.add_argument("quaternion")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", parents=[common], help="run commands read from stdin")
    p.set_defaults(func=cmd_batch)
    return ap


def execute(argv, stdin=None, stdout=None) -> tuple[dict | None, int, str]:
    """Run one command; returns ``(result, exit code, output format)``."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        code = EXIT_OK if exc.code == 0 else EXIT_USAGE
        return ({"error": "invalid arguments", "exit": code} if code else None), code, "json"
    if args.n <= 0:
        return {"error": "--n must be positive", "exit": EXIT_USAGE}, EXIT_USAGE, args.output
    args.stdin = stdin or sys.stdin
    args.stdout = stdout or sys.stdout
    try:
        out, code = args.func(args)
    except (ParseError, DomainError, UsageError, UnknownSuiteError, ZeroDivisionError) as exc:
        return {"error": str(exc), "exit": EXIT_USAGE}, EXIT_USAGE, args.output
    return out, code, args.output


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    out, code, output = execute(argv, sys.stdin, stdout)
    if out is not None:
        print(render(out, output), file=stdout)
        if code == EXIT_USAGE and "error" in out:
            print(f"mfq: error: {out['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

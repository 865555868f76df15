"""Command-line front end: ``hodge curve|snc|ordinary|diagonal|projective``.

Exit codes: 0 when everything was computed and every theorem check passed,
2 when a theorem check failed (an implementation defect), 1 for bad input or
an unsupported configuration.
"""

import argparse
import json
import math
import sys

from . import closed_forms as cf
from . import projective as proj
from .errors import HodgeError
from .jets import DEFAULT_CAP
from .poly import parse
from .projective import parse_rational
from .resolution import PlaneCurve, singular_points
from .surface import hodge_ideals, is_node, verify_theorems

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK_FAILED = 2
DEFAULT_KMAX = 8


class UsageError(HodgeError):
    pass


def _split_names(text):
    names = [v.strip() for v in text.split(",") if v.strip()]
    if len(set(names)) != len(names):
        raise UsageError(f"repeated variable name in {text!r}")
    return names


def _parse_point(text):
    parts = [p for p in text.split(",")]
    if len(parts) != 2:
        raise UsageError(f"--point expects 'a,b', got {text!r}")
    return tuple(parse_rational(p) for p in parts)


def _emit(args, payload, lines):
    if args.json:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in lines:
            print(line)


# -- curve ----------------------------------------------------------------------------


def _family_lines(fam, report, names):
    c = ", ".join(str(x) for x in fam.center)
    m = fam.multiplicity
    kind = " (node)" if m == 2 and is_node(fam.curve.h, fam.center) else ""
    lines = [f"point ({c}): multiplicity {m}{kind}"]
    divs = fam.tree.divisors
    lines.append(f"  resolution: {len(divs)} exceptional divisor(s)")
    for d in divs:
        lines.append(f"    E{d.id}: ord(h) = {d.v}, discrepancy = {d.k}, ord(m) = {d.rho}, parent = {d.parent}")
    lines.append(f"  lct = {fam.lct}")
    lines.append(f"  adj(D) = {fam.adjoint.render(names)}  [colength {fam.adjoint.colength}]")
    for k, ideal in enumerate(fam.ideals):
        lines.append(f"  I_{k} = {ideal.render(names)}  [colength {ideal.colength}]")
    failed = report.failures()
    lines.append(f"  checks: {len(report.records) - len(failed)}/{len(report.records)} passed")
    for r in failed:
        lines.append(f"    FAILED {r.name} (k = {r.k}): {r.expected} {r.detail}")
    return lines


def cmd_curve(args):
    names = _split_names(args.vars)
    if len(names) != 2:
        raise UsageError("a plane curve needs exactly two variable names")
    if args.kmax < 0:
        raise UsageError("--kmax must be non-negative")
    if args.cap < DEFAULT_CAP:
        raise UsageError(f"--cap must be at least {DEFAULT_CAP}")
    h = parse(args.expr, names)
    curve = PlaneCurve(h, names)
    if args.point:
        points = [_parse_point(p) for p in args.point]
        for p in points:
            if h.evaluate(p) != 0:
                raise UsageError(f"the point ({p[0]}, {p[1]}) is not on the curve")
    else:
        points = singular_points(h)
    payload = {"curve": h.render(names), "vars": names, "kmax": args.kmax, "points": []}
    lines = [f"curve: {h.render(names)} = 0"]
    ok = True
    if not points:
        msg = "no singular rational points; all I_k trivial"
        payload["message"] = msg
        lines.append(msg)
    for p in sorted(points):
        fam = hodge_ideals(curve, p, args.kmax, cap=args.cap)
        report = verify_theorems(fam)
        ok = ok and report.passed
        entry = fam.to_json(names)
        entry["verification"] = report.to_json()
        payload["points"].append(entry)
        lines.extend(_family_lines(fam, report, names))
    payload["passed"] = ok
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# -- closed forms ---------------------------------------------------------------------


def cmd_snc(args):
    ideal = cf.snc_hodge_ideal(args.n, args.r, args.k)
    names = cf.default_names(args.n)
    payload = {"n": args.n, "r": args.r, "k": args.k, "ideal": ideal.to_json(names)}
    lines = [
        f"SNC divisor x1*...*x{args.r} = 0 in dimension {args.n}, k = {args.k}",
        f"I_{args.k} = {ideal.render(names)}",
        f"{len(ideal.generators)} generator(s)",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ordinary(args):
    q = cf.OrdinaryQuery(args.n, args.m, args.k)
    res = cf.ordinary_hodge_ideal(q)
    payload = {"n": q.n, "m": q.m, "k": q.k, "result": res.to_json(),
               "triviality_threshold": cf.triviality_threshold(q.n, q.m)}
    if isinstance(res, cf.ExactOrdinary):
        text = f"I_{q.k} = {res.render()} (exact, mk<n)"
    elif isinstance(res, cf.SandwichBounds):
        text = f"I_{q.k} bounds: {res.render()}"
    else:
        text = f"I_{q.k}: {res.render()}"
    lines = [
        f"ordinary point of multiplicity {q.m} in dimension {q.n}",
        text,
        f"I_k trivial exactly for k <= {payload['triviality_threshold']}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_diagonal(args):
    alpha = cf.diagonal_alpha(args.exponents)
    bound = alpha - 1
    top = math.floor(bound)
    payload = {"exponents": args.exponents, "alpha": str(alpha), "bound": str(bound), "max_trivial_k": top}
    if top >= 0:
        verdict = f"trivial for k ≤ {top}"
    else:
        verdict = "no k guaranteed (I_0 may already be nontrivial)"
    payload["verdict"] = verdict
    lines = [f"f = sum x_i^a_i with a = {tuple(args.exponents)}", f"alpha = {alpha}", verdict]
    _emit(args, payload, lines)
    return EXIT_OK


# -- projective -----------------------------------------------------------------------


def cmd_projective(args):
    hyp, ks = proj.load(args.file)
    if args.kmax is not None:
        ks = list(range(args.kmax + 1))
    report = proj.verify(hyp, ks)
    lines = [f"hypersurface {hyp.H.render(hyp.names)} = 0 in P^{hyp.n}, degree {hyp.d} ({hyp.mode} mode)"]
    if hyp.points:
        for p in hyp.points:
            lines.append(f"  singular point {p.render_coords()} multiplicity {p.multiplicity}")
    else:
        lines.append("  no singular points")
    for Z in report.subschemes:
        if Z.is_empty:
            lines.append(f"Z_{Z.k}: empty")
        else:
            lines.append(f"Z_{Z.k}: {len(Z.components)} point(s), degree {Z.degree}")
    for c in report.checks:
        status = "pass" if c.passed else "FAIL"
        tag = " (vacuous)" if c.vacuous else ""
        lines.append(f"  [{status}{tag}] {c.name} k={c.k}: {c.statement}; {c.detail}")
    _emit(args, report.to_json(), lines)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# -- entry point ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="hodge", description="Exact Hodge ideals of plane curves and friends.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print a JSON report instead of text")

    p = sub.add_parser("curve", help="Hodge ideals of a plane curve at its singular points")
    p.add_argument("expr", help='equation, e.g. "x^2+y^3"')
    p.add_argument("--vars", default="x,y", help="comma-separated variable names (default: x,y)")
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX, help=f"largest k (default {DEFAULT_KMAX})")
    p.add_argument("--point", action="append", metavar="a,b", help="center (repeatable); default: all singular points")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="jet truncation cap")
    common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("snc", help="I_k of a simple normal crossing divisor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_snc)

    p = sub.add_parser("ordinary", help="I_k at an ordinary singular point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_ordinary)

    p = sub.add_parser("diagonal", help="triviality bound for sum x_i^a_i")
    p.add_argument("exponents", type=int, nargs="+")
    common(p)
    p.set_defaults(func=cmd_diagonal)

    p = sub.add_parser("projective", help="Z_k checks for a projective hypersurface (JSON input file)")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_projective)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HodgeError, ValueError, OSError) as exc:
        kind = type(exc).__name__
        if getattr(args, "json", False):
            json.dump({"error": {"type": kind, "message": str(exc)}}, sys.stdout, indent=2, sort_keys=True)
            sys.stdout.write("\n")
        print(f"hodge: error: {kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

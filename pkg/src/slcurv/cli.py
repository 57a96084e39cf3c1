"""Command-line front end.

Subcommands:
  verify-sl     run the closed-form vs numeric cross-checks for SL(n)
  analyze       curvature report for a built-in or user-expression surface
  sample-image  sample Gauss-map images and report the determinant range
  report        print the exact SL(n) identity curvature table

Exit codes: 0 success, 1 numeric/check failure, 2 usage or parse failure.
JSON mode writes one document to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .fields import ParseError, determinant_field, expression_field
from .linalg import determinant
from .slgroup import (
    curvature_summary,
    gauss_map,
    gauss_map_preimage,
    principal_curvatures_identity,
    random_sl,
    random_special_orthogonal,
)
from .surfaces import (
    CriticalPointError,
    CurvatureReport,
    ImplicitHypersurface,
    OffSurfaceError,
    curvature_report,
    weingarten_apply,
)


def report_to_dict(report: CurvatureReport) -> dict:
    """Render a curvature report in the stable JSON schema."""
    return {
        "point": [float(x) for x in report.point],
        "normal": [float(x) for x in report.normal],
        "curvatures": [
            {"value": float(v), "multiplicity": int(m)} for v, m in report.curvatures
        ],
        "gauss_kronecker": float(report.gauss_kronecker),
        "mean": float(report.mean),
        "weingarten": [[float(x) for x in row] for row in report.weingarten],
    }


def _print_report_text(report: CurvatureReport):
    print(f"point            {np.array2string(report.point, precision=10)}")
    print(f"normal           {np.array2string(report.normal, precision=10)}")
    print("principal curvatures:")
    for value, mult in report.curvatures:
        print(f"  {value: .12f}  multiplicity {mult}")
    print(f"gauss_kronecker  {report.gauss_kronecker: .12e}")
    print(f"mean             {report.mean: .12e}")


def _random_trace_zero(n: int, rng) -> np.ndarray:
    h = rng.uniform(-1.0, 1.0, size=(n, n))
    return h - (np.trace(h) / n) * np.eye(n)


def run_verify_sl(n: int, tolerance: float, seed: int) -> tuple[list[dict], CurvatureReport]:
    """Execute the cross-module checks; returns (check rows, identity report)."""
    surface = ImplicitHypersurface(field=determinant_field(n), level=1.0)
    identity = np.eye(n).ravel()
    rng = np.random.default_rng(seed)
    checks = []

    def add(name: str, residual: float):
        checks.append(
            {
                "name": name,
                "residual": float(residual),
                "tolerance": float(tolerance),
                "passed": bool(residual <= tolerance),
            }
        )

    # shape operator at I against n^{-1/2} H^t, on random trace-zero directions
    worst = 0.0
    for _ in range(25):
        h = _random_trace_zero(n, rng)
        lv = weingarten_apply(surface, identity, h.ravel())
        worst = max(worst, float(np.max(np.abs(lv - h.T.ravel() / math.sqrt(n)))))
    add("weingarten_operator_identity", worst)

    # spectrum, Gauss-Kronecker, and mean at I against the closed forms
    report = curvature_report(surface, identity)
    exact = principal_curvatures_identity(n)
    if [m for _, m in report.curvatures] == [m for _, m in exact]:
        spectrum_residual = max(
            abs(v - ve) for (v, _), (ve, _) in zip(report.curvatures, exact)
        )
    else:
        spectrum_residual = math.inf
    add("principal_spectrum_identity", spectrum_residual)

    summary = curvature_summary(n)
    add(
        "gauss_kronecker_identity",
        abs(report.gauss_kronecker - summary.gauss_kronecker) / abs(summary.gauss_kronecker),
    )
    add("mean_curvature_identity", abs(report.mean - summary.mean) / abs(summary.mean))

    # Gauss map round trips through the preimage construction
    worst = 0.0
    for i in range(50):
        u = gauss_map(random_sl(n, seed + 101 * i + 1))
        worst = max(worst, float(np.max(np.abs(gauss_map(gauss_map_preimage(u)) - u))))
    add("gauss_map_roundtrip", worst)

    # eigenvalue multiset must not move under rotation points of SL(n)
    identity_eigs = np.sort(report.eigenvalues)
    worst = 0.0
    for i in range(5):
        q = random_special_orthogonal(n, seed + 211 * i + 3)
        rotated = curvature_report(surface, q.ravel())
        worst = max(worst, float(np.max(np.abs(np.sort(rotated.eigenvalues) - identity_eigs))))
    add("rotation_point_invariance", worst)

    return checks, report


def _cmd_verify_sl(args) -> int:
    if not 2 <= args.n <= 5:
        print(f"verify-sl: --n must be in [2, 5], got {args.n}", file=sys.stderr)
        return 2
    if args.tol <= 0:
        print("verify-sl: --tol must be positive", file=sys.stderr)
        return 2
    checks, report = run_verify_sl(args.n, args.tol, args.seed)
    all_passed = all(c["passed"] for c in checks)
    max_residual = max(c["residual"] for c in checks)
    if args.json:
        doc = report_to_dict(report)
        doc.update(
            {
                "n": args.n,
                "tolerance": args.tol,
                "seed": args.seed,
                "checks": checks,
                "max_residual": max_residual,
                "passed": all_passed,
            }
        )
        print(json.dumps(doc, indent=2))
    else:
        print(f"SL({args.n}) verification, tolerance {args.tol:g}, seed {args.seed}")
        print("spectrum at identity:")
        for value, mult in report.curvatures:
            print(f"  {value: .12f}  multiplicity {mult}")
        print(f"gauss_kronecker  {report.gauss_kronecker: .12e}")
        print(f"mean             {report.mean: .12e}")
        for c in checks:
            status = "PASS" if c["passed"] else "FAIL"
            print(f"{status}  {c['name']:<32} residual {c['residual']:.3e}")
    if not all_passed:
        print("verify-sl: one or more checks exceeded tolerance", file=sys.stderr)
        return 1
    return 0


def _parse_point(text: str) -> np.ndarray:
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError(f"point {text!r} is not a comma-separated list of reals", 0)
    if not values:
        raise ParseError("point list is empty", 0)
    return np.asarray(values)


def _cmd_analyze(args) -> int:
    if (args.builtin is None) == (args.expr is None):
        print("analyze: provide exactly one of --builtin or --expr", file=sys.stderr)
        return 2
    try:
        point = _parse_point(args.point)
        if args.builtin is not None:
            if args.n is None or args.n < 2:
                print("analyze: --builtin sl requires --n >= 2", file=sys.stderr)
                return 2
            field = determinant_field(args.n)
            level = 1.0
            if point.size != field.arity:
                print(
                    f"analyze: sl with n={args.n} needs {field.arity} point coordinates, "
                    f"got {point.size}",
                    file=sys.stderr,
                )
                return 2
        else:
            if args.level is None:
                print("analyze: --expr requires --level", file=sys.stderr)
                return 2
            field = expression_field(args.expr, arity=point.size)
            level = args.level
    except (ParseError, ValueError) as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 2
    surface = ImplicitHypersurface(field=field, level=level)
    try:
        report = curvature_report(surface, point)
    except (OffSurfaceError, CriticalPointError, ZeroDivisionError) as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        _print_report_text(report)
    return 0


def _cmd_sample_image(args) -> int:
    if args.n < 2:
        print("sample-image: --n must be >= 2", file=sys.stderr)
        return 2
    if args.count < 1:
        print("sample-image: --count must be >= 1", file=sys.stderr)
        return 2
    dets = []
    for i in range(args.count):
        image = gauss_map(random_sl(args.n, args.seed + i))
        dets.append(determinant(image))
    dets = np.asarray(dets)
    print(f"sampled {args.count} Gauss-map images for SL({args.n})")
    print(f"det range: min {dets.min():.6e}, max {dets.max():.6e}")
    if not np.all(dets > 0.0):
        print("sample-image: found a non-positive determinant in the image", file=sys.stderr)
        return 1
    print("all sampled images have det > 0")
    return 0


def _cmd_report(args) -> int:
    if args.n < 2:
        print("report: --n must be >= 2", file=sys.stderr)
        return 2
    s = curvature_summary(args.n)
    print(f"SL({s.n}) curvature at the identity")
    print(f"kappa_plus       {s.kappa_plus: .12f}  multiplicity {s.mult_plus}")
    print(f"kappa_minus      {s.kappa_minus: .12f}  multiplicity {s.mult_minus}")
    print(f"gauss_kronecker  {s.gauss_kronecker: .12e}")
    print(f"mean             {s.mean: .12e}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slcurv",
        description="Curvature of implicit hypersurfaces, with exact SL(n) cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-sl", help="run the closed-form vs numeric checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify_sl)

    p = sub.add_parser("analyze", help="curvature report at a point of a surface")
    p.add_argument("--builtin", choices=["sl"])
    p.add_argument("--n", type=int)
    p.add_argument("--expr", type=str)
    p.add_argument("--level", type=float)
    p.add_argument("--point", type=str, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("sample-image", help="sample Gauss-map images, check det > 0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(handler=_cmd_sample_image)

    p = sub.add_parser("report", help="print the exact identity curvature table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.handler(args)


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()

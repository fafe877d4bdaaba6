"""Batch command line front end.

JSON for structured results, CSV for traced curves, optional PNG
renderings next to file outputs.  Floats are always written with 17
significant digits so equal invocations produce byte-identical files;
an output file gets a sidecar `<name>.manifest.json` recording the
command, parameters, tool version, and timestamp (SOURCE_DATE_EPOCH is
honored for reproducible manifests).

Exit codes: 0 success (and every certificate assertion passed), 1
certification or search failure, 2 usage error, 3 collision input.
"""

import argparse
import datetime
import itertools
import json
import math
import os
import re
import sys
import warnings

import numpy as np

from .ccsystem import (
    FAMILY_FREE_COUNT,
    FAMILY_SIZE,
    SymmetricFamily,
    build_F,
    expand_family,
    family_slots,
    mass_kernel,
    pfaffian,
    positive_mass_region,
    residual,
)
from .certify import (
    certify_detH2_region,
    certify_theorem1,
    certify_theorem4,
)
from .errors import (
    CertificationError,
    CollisionError,
    NoPositiveMassError,
    OrderingError,
    ResourceLimitError,
)
from .geometry import RingConfiguration, mass_array
from .interval import rational_pi
from .solvers import (
    CASE_THETA2,
    region_check_1p4,
    region_check_1p5,
    solve_1p2p1,
    solve_symmetric_family,
    trace_zero_curve,
)
from .stability import stability_report

TOOL_VERSION = "0.1.0"

_PI_RE = re.compile(r"^(-?)(\d+)?pi(?:/(\d+))?$")


def parse_angle_token(text):
    """Float value of 'pi/6', '3pi/7', '-pi', '2pi', or a float literal."""
    t = text.strip().lower().replace(" ", "")
    m = _PI_RE.match(t)
    if m:
        num = int(m.group(2)) if m.group(2) else 1
        den = int(m.group(3)) if m.group(3) else 1
        if den == 0:
            raise ValueError(f"zero denominator in angle {text!r}")
        val = num * math.pi / den
        return -val if m.group(1) else val
    return float(t)


def parse_angle_exact(text):
    """('rational', num, den) for pi-rational syntax, else ('float', x).

    The certified paths keep pi-rationals symbolic so the enclosure is
    exact rather than a float sample."""
    t = text.strip().lower().replace(" ", "")
    m = _PI_RE.match(t)
    if m:
        num = int(m.group(2)) if m.group(2) else 1
        den = int(m.group(3)) if m.group(3) else 1
        if den == 0:
            raise ValueError(f"zero denominator in angle {text!r}")
        return ("rational", -num if m.group(1) else num, den)
    return ("float", float(t))


def parse_angle_list(text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty angle list")
    return [parse_angle_token(p) for p in parts]


def parse_float_list(text):
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty list")
    return [float(p) for p in parts]


# ---------------------------------------------------------------------------
# Canonical serialization.


def canonical_json(obj):
    """Deterministic compact JSON: 17-significant-digit floats,
    insertion-ordered keys, no whitespace."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (np.bool_,)):
        return json.dumps(bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x) or math.isinf(x):
            raise ValueError("non-finite value in JSON output")
        return format(x, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return canonical_json(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return (
            "{"
            + ",".join(
                json.dumps(str(k)) + ":" + canonical_json(v) for k, v in obj.items()
            )
            + "}"
        )
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _fmt(x):
    return format(float(x), ".17g")


def _manifest(args):
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        when = datetime.datetime.fromtimestamp(int(epoch), datetime.timezone.utc)
    else:
        when = datetime.datetime.now(datetime.timezone.utc)
    params = {}
    for key in sorted(vars(args)):
        if key == "command":
            continue
        val = getattr(args, key)
        if val is None:
            continue
        params[key] = val if isinstance(val, (bool, int, float, str)) else str(val)
    return {
        "command": args.command,
        "parameters": params,
        "tool_version": TOOL_VERSION,
        "timestamp": when.isoformat(timespec="seconds"),
    }


# ---------------------------------------------------------------------------
# Subcommand runners; each returns ("json", payload) or ("csv", text),
# plus an exit code override for certify.


def _kernel_payload(basis):
    return {
        "dimension": basis.dimension,
        "tolerance": basis.tolerance,
        "vectors": [[float(v) for v in vec] for vec in basis.vectors],
    }


def run_fmatrix(args):
    config = RingConfiguration(tuple(parse_angle_list(args.thetas)), s=args.s)
    F = build_F(config)
    basis = mass_kernel(F, tol=args.tol if args.tol is not None else 1e-9)
    return "json", {
        "thetas": [float(t) for t in config.thetas],
        "s": args.s,
        "F": [[float(v) for v in row] for row in F],
        "singular_values": [float(v) for v in basis.singular_values],
        "kernel": _kernel_payload(basis),
    }


def run_masses(args):
    config = RingConfiguration(tuple(parse_angle_list(args.thetas)), s=args.s)
    F = build_F(config)
    basis = mass_kernel(F, tol=args.tol if args.tol is not None else 1e-9)
    payload = {
        "thetas": [float(t) for t in config.thetas],
        "s": args.s,
        "kernel": _kernel_payload(basis),
        "positive_region": None,
        "example_masses": None,
    }
    if basis.dimension in (1, 2):
        region = positive_mass_region(basis.vectors)
        payload["positive_region"] = {
            "kind": region.kind,
            "sign": region.sign,
            "alpha_lo": region.alpha_lo,
            "alpha_hi": region.alpha_hi,
        }
        example = _example_masses(basis, region)
        if example is not None:
            payload["example_masses"] = [float(v) for v in example]
    return "json", payload


def _example_masses(basis, region):
    if region.is_empty:
        return None
    if basis.dimension == 1:
        vec = region.sign * basis.vectors[0]
        return vec / np.max(vec)
    lo, hi = region.alpha_lo, region.alpha_hi
    if lo is None and hi is None:
        alpha = 0.0
    elif lo is None:
        alpha = hi - 1.0
    elif hi is None:
        alpha = lo + 1.0
    else:
        alpha = 0.5 * (lo + hi)
    vec = basis.vectors[0] + alpha * basis.vectors[1]
    if region.sign < 0:
        vec = -vec
    if not np.all(vec > 0.0):
        return None
    return vec / np.max(vec)


def run_pfaffian(args):
    config = RingConfiguration(tuple(parse_angle_list(args.thetas)), s=args.s)
    value = pfaffian(build_F(config))
    return "json", {
        "thetas": [float(t) for t in config.thetas],
        "s": args.s,
        "pfaffian": float(value),
    }


def run_stability(args):
    config = RingConfiguration(tuple(parse_angle_list(args.thetas)), s=args.s)
    masses = parse_float_list(args.masses)
    report = stability_report(
        config, masses, zero_tol=args.tol if args.tol is not None else 1e-8
    )
    return "json", {
        "thetas": [float(t) for t in config.thetas],
        "masses": masses,
        "s": args.s,
        "inertia": list(report.inertia_H),
        "morse_index": report.morse_index,
        "linearization_counts": list(report.linearization_counts),
        "is_stable_candidate": report.is_stable_candidate,
        "residual": report.residual,
        "residual_warning": report.residual_warning,
    }


def run_solve_1p2p1(args):
    result = solve_1p2p1(args.m1, args.case, s=args.s)
    payload = {
        "case": result.case_label,
        "m1": result.m1,
        "s": result.s,
        "theta2": CASE_THETA2[result.case_label],
        "roots": list(result.roots),
        "count": len(result.roots),
    }
    return "json", payload, result


def run_trace(args):
    window = None
    if args.window:
        vals = [parse_angle_token(v) for v in args.window.split(",")]
        if len(vals) != 4:
            raise ValueError("window needs four comma-separated values")
        window = tuple(vals)
    result = trace_zero_curve(
        args.tag,
        args.family,
        window=window,
        grid_n=args.grid if args.grid is not None else 512,
        s=args.s,
    )
    if (args.format or "csv") == "json":
        payload = {
            "tag": result.tag,
            "family": args.family,
            "window": list(result.window),
            "grid_n": result.grid_n,
            "degenerate_cells": result.degenerate_cells,
            "ambiguous_cells": result.ambiguous_cells,
            "components": [
                {"curve_id": k, "points": [[float(p[0]), float(p[1])] for p in line.points]}
                for k, line in enumerate(result.polylines)
            ],
        }
        return "json", payload, result
    lines = ["tag,curve_id,theta1,theta2"]
    for k, line in enumerate(result.polylines):
        for p in line.points:
            lines.append(f"{result.tag},{k},{_fmt(p[0])},{_fmt(p[1])}")
    return "csv", "\n".join(lines) + "\n", result


def _default_seeds(kind):
    nfree = FAMILY_FREE_COUNT[kind]
    if nfree <= 2:
        axis = (0.25, 0.75, 1.3, 1.9, 2.5, 2.95)
    else:
        axis = (0.35, 1.15, 1.95, 2.75)
    return [
        combo
        for combo in itertools.product(axis, repeat=nfree)
        if len({abs(v) for v in combo}) == nfree
    ]


def run_solve_family(args):
    kind = args.family
    masses = parse_float_list(args.masses)
    if len(masses) != FAMILY_SIZE[kind]:
        raise ValueError(
            f"family {kind} needs {FAMILY_SIZE[kind]} masses, got {len(masses)}"
        )
    if args.seeds:
        seeds = []
        for chunk in args.seeds.split(";"):
            seeds.append(tuple(parse_angle_token(v) for v in chunk.split(",")))
    else:
        seeds = _default_seeds(kind)
    sols = solve_symmetric_family(
        kind,
        masses,
        seeds,
        s=args.s,
        tol=args.tol if args.tol is not None else 1e-12,
    )
    mm = mass_array(masses, FAMILY_SIZE[kind])
    out = []
    for fam in sols:
        config = expand_family(fam, args.s)
        res = residual(build_F(config), mm)
        out.append(
            {
                "free_angles": [float(v) for v in fam.free_angles],
                "slots": [float(v) for v in family_slots(fam)],
                "residual": float(res),
            }
        )
    return "json", {
        "family": kind,
        "masses": masses,
        "s": args.s,
        "seed_count": len(seeds),
        "solutions": out,
    }


def run_region_check(args):
    angles = parse_angle_list(args.thetas)
    caught = []
    if args.kind == "1p4":
        if len(angles) != 4:
            raise ValueError("kind 1p4 takes four ring angles")
        config = RingConfiguration(tuple(angles), s=args.s)
        with warnings.catch_warnings(record=True) as ws:
            warnings.simplefilter("always")
            inside = region_check_1p4(config)
        caught = [str(w.message) for w in ws]
    else:
        if len(angles) != 2:
            raise ValueError("kind 1p5 takes the two free angles")
        inside = region_check_1p5(angles[0], angles[1])
    return "json", {
        "kind": args.kind,
        "thetas": angles,
        "inside": bool(inside),
        "warnings": caught,
    }


def run_certify(args):
    target = args.target
    report_obj = None
    if target == "thm1":
        kwargs = {"max_depth": args.max_depth}
        if args.alpha is not None:
            kwargs["alpha"] = args.alpha
        if args.theta1 is not None:
            spec = parse_angle_exact(args.theta1)
            kwargs["theta1"] = (
                rational_pi(spec[1], spec[2]) if spec[0] == "rational" else spec[1]
            )
        report = certify_theorem1(s=args.s, **kwargs)
    elif target in ("thm4n6", "thm4n8"):
        report = certify_theorem4(
            6 if target == "thm4n6" else 8,
            alpha=args.alpha,
            s=args.s,
            max_depth=args.max_depth,
        )
    else:
        report = certify_detH2_region(
            grid_n=args.grid if args.grid is not None else 32,
            mass_sampling=args.mass_sampling,
            s=args.s,
            coverage_target=args.coverage_target,
            threads=args.threads,
        )
        report_obj = report
    payload = report.as_dict()
    return "json", payload, report_obj if report_obj is not None else report


# ---------------------------------------------------------------------------
# Parser assembly and dispatch.


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=float, default=3.0, help="potential exponent (>= 2)")
    common.add_argument("--tol", type=float, default=None, help="tolerance override")
    common.add_argument("--grid", type=int, default=None, help="grid resolution")
    common.add_argument("--out", type=str, default=None, help="output file path")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument(
        "--plot", action="store_true", help="render a PNG next to --out"
    )

    p = argparse.ArgumentParser(
        prog="coorbital",
        description="Ring central configurations: kernels, stability, certificates.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fmatrix", parents=[common], help="coefficient matrix and kernel")
    sp.add_argument("--thetas", required=True, help="comma-separated ring angles")

    sp = sub.add_parser("masses", parents=[common], help="kernel masses and positivity")
    sp.add_argument("--thetas", required=True)

    sp = sub.add_parser("pfaffian", parents=[common], help="Pfaffian of the coefficient matrix")
    sp.add_argument("--thetas", required=True)

    sp = sub.add_parser("stability", parents=[common], help="inertia and stability report")
    sp.add_argument("--thetas", required=True)
    sp.add_argument("--masses", required=True, help="comma-separated positive masses")

    sp = sub.add_parser("solve-1p2p1", parents=[common], help="test-body equilibria")
    sp.add_argument("--m1", type=float, required=True)
    sp.add_argument(
        "--case", required=True, choices=sorted(CASE_THETA2), help="massive-pair layout"
    )

    sp = sub.add_parser("trace", parents=[common], help="trace a zero curve to CSV")
    sp.add_argument("--tag", required=True, choices=("pfaffian", "z1", "z2", "z3"))
    sp.add_argument("--family", required=True, choices=sorted(FAMILY_FREE_COUNT))
    sp.add_argument("--window", default=None, help="t1lo,t1hi,t2lo,t2hi")

    sp = sub.add_parser("solve-family", parents=[common], help="symmetric family solve")
    sp.add_argument("--family", required=True, choices=sorted(FAMILY_FREE_COUNT))
    sp.add_argument("--masses", required=True)
    sp.add_argument("--seeds", default=None, help="semicolon-separated angle tuples")

    sp = sub.add_parser("region-check", parents=[common], help="convex-region membership")
    sp.add_argument("--kind", required=True, choices=("1p4", "1p5"))
    sp.add_argument("--thetas", required=True)

    sp = sub.add_parser("certify", parents=[common], help="certified reports")
    sp.add_argument("target", choices=("thm1", "thm4n6", "thm4n8", "thm5"))
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--theta1", default=None, help="override the pinned first angle")
    sp.add_argument("--mass-sampling", default="equal", dest="mass_sampling")
    sp.add_argument("--max-depth", type=int, default=48, dest="max_depth")
    sp.add_argument("--coverage-target", type=float, default=0.9, dest="coverage_target")

    return p


DISPATCH = {
    "fmatrix": run_fmatrix,
    "masses": run_masses,
    "pfaffian": run_pfaffian,
    "stability": run_stability,
    "solve-1p2p1": run_solve_1p2p1,
    "trace": run_trace,
    "solve-family": run_solve_family,
    "region-check": run_region_check,
    "certify": run_certify,
}


def _render_plot(args, extra):
    from . import figures

    base, _ = os.path.splitext(args.out)
    png = base + ".png"
    if args.command == "trace":
        figures.render_trace(extra, png)
    elif args.command == "solve-1p2p1":
        figures.render_restricted(extra, png)
    elif args.command == "certify" and getattr(extra, "slices", None) is not None:
        figures.render_region(extra, png)
    else:
        return None
    return png


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2
    if args.format == "csv" and args.command != "trace":
        print("error: csv format applies to trace outputs only", file=sys.stderr)
        return 2
    if args.plot and not args.out:
        print("error: --plot needs --out", file=sys.stderr)
        return 2

    try:
        outcome = DISPATCH[args.command](args)
    except CollisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OrderingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoPositiveMassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            sys.stdout.write(canonical_json(exc.report.as_dict()) + "\n")
        return 1
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    kind, body = outcome[0], outcome[1]
    extra = outcome[2] if len(outcome) > 2 else None

    text = canonical_json(body) + "\n" if kind == "json" else body
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        manifest_path = args.out + ".manifest.json"
        with open(manifest_path, "w") as fh:
            fh.write(canonical_json(_manifest(args)) + "\n")
        written = [args.out, manifest_path]
        if args.plot and extra is not None:
            png = _render_plot(args, extra)
            if png:
                written.append(png)
        print("wrote " + " ".join(written))
    else:
        sys.stdout.write(text)

    if args.command == "certify":
        return 0 if body.get("certified") else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

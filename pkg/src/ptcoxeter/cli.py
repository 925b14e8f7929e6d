"""Command-line front end.

Subcommands: roots, deform, potential, spectrum, verify, figure. Reports are
``{"meta", "data", "checks"}`` records (JSON) or plain row tables (CSV).
Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Dict, List, Optional, Sequence

from . import __version__
from .checks import CheckResult, run_checks
from .cmsmodel import (
    CMSModel,
    PolarMode,
    PotentialKind,
    RootSubset,
    SingularEvaluationError,
    assemble_potential,
    polar_potential_a2,
    polar_potential_g2,
)
from .ptdeform import (
    ClosureError,
    Variant,
    check_inner_products,
    check_orthogonality,
    closure_drift,
    generate_deformed_system,
    standard_scheme,
    typeB_scheme,
)
from .rootsys import build_group, get_embedding
from .spectra import PROFILES, degeneracy_pairs, energy_levels

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _finite(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return x


def _nonneg(text: str) -> float:
    x = _finite(text)
    if x < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return x


def _count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return n


def _vector(text: str) -> tuple:
    parts = text.split(",")
    return tuple(_finite(p) for p in parts)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--group", choices=["a2", "g2"], default="g2")
    p.add_argument("--scheme", choices=["typeA", "typeB"], default="typeA")
    p.add_argument("--epsilon", type=_nonneg, default=0.0)
    p.add_argument("--gs", type=_finite, default=2.0)
    p.add_argument("--gl", type=_finite, default=2.0)
    p.add_argument("--omega", type=_finite, default=1.0)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output", default=None, help="write the report here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptcoxeter",
                                     description="PT-deformed A2/G2 root systems and CMS models")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    sub.add_parser("roots", parents=[common], help="root table with embeddings")
    sub.add_parser("deform", parents=[common], help="deformed roots and their checks")

    pot = sub.add_parser("potential", parents=[common], help="evaluate the potential")
    pot.add_argument("--point", type=_vector, action="append", default=[],
                     metavar="Q1,Q2,Q3", help="standard coordinates (repeatable)")
    pot.add_argument("--polar", type=_vector, action="append", default=[],
                     metavar="R,PHI", help="polar Jacobi coordinates (repeatable)")
    pot.add_argument("--kind", choices=[k.value for k in PotentialKind], default="rational")
    pot.add_argument("--mode", choices=[m.value for m in PolarMode], default="phiShift")
    pot.add_argument("--subset", choices=[s.value for s in RootSubset], default="all")
    pot.add_argument("--mass", type=_finite, default=0.0)

    spec = sub.add_parser("spectrum", parents=[common], help="energy levels and degeneracies")
    spec.add_argument("--profile", choices=sorted(PROFILES), default="undeformed")
    spec.add_argument("--nmax", type=_count, default=3)
    spec.add_argument("--lmax", type=_count, default=3)

    sub.add_parser("verify", parents=[common], help="run the full verification suite")
    sub.add_parser("figure", parents=[common], help="Re/Im parts of deformed roots in the plane")
    return parser


def _fmt(x) -> str:
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _render(report: Dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    rows = report["data"]
    buf = io.StringIO()
    if rows:
        cols = list(rows[0])
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([_fmt(row[c]) for c in cols])
    return buf.getvalue()


def _checks_payload(checks: Sequence[CheckResult]) -> List[Dict]:
    return [{"name": c.name, "pass": bool(c.passed), "residual": float(c.residual),
             "detail": c.detail} for c in checks]


def _system(args):
    group = build_group(args.group.upper())
    if args.scheme == "typeA":
        scheme = standard_scheme(group.name)
    else:
        scheme = typeB_scheme()
    try:
        ds = generate_deformed_system(group, scheme, args.epsilon)
    except ClosureError as exc:
        return group, None, [CheckResult("closure", False, math.inf, str(exc))]
    return group, ds, []


def _cmd_roots(args):
    group = build_group(args.group.upper())
    std, plane = get_embedding(group, "standard3d"), get_embedding(group, "plane2d")
    rows = []
    for root in sorted(group.roots):
        s, p = std(root), plane(root)
        rows.append({
            "label": root.label(), "length": group.length_class(root),
            "x1": s[0], "x2": s[1], "x3": s[2], "p1": p[0], "p2": p[1],
        })
    return rows, []


def _deformed_rows(ds, basis: str):
    emb = get_embedding(ds.parent, basis)
    rows = []
    for d in sorted(ds.roots, key=lambda d: d.label):
        v = d.value(emb)
        row = {"label": d.label.label(), "re_coef": d.re_coef.label(),
               "im_coef": d.im_coef.label()}
        for k, x in enumerate(v.re, 1):
            row[f"re{k}"] = x
        for k, x in enumerate(v.im, 1):
            row[f"im{k}"] = x
        rows.append(row)
    return rows


def _cmd_deform(args):
    group, ds, failed = _system(args)
    if ds is None:
        return [], failed
    drift, word = closure_drift(ds, max_length=5)
    checks = [CheckResult("closure", drift <= 1e-12, drift, f"word={list(word)}")]
    if ds.scheme.variant is Variant.TYPE_A:
        ortho = max(check_orthogonality(d, group) for d in ds.roots)
        inner = check_inner_products(ds)
        checks += [
            CheckResult("orthogonality", ortho <= 1e-12, ortho),
            CheckResult("inner_products", inner.passed, inner.max_drift,
                        "worst pair " + "/".join(inner.worst_pair)),
        ]
    return _deformed_rows(ds, "standard3d"), checks


def _cmd_figure(args):
    _, ds, failed = _system(args)
    if ds is None:
        return [], failed
    return _deformed_rows(ds, "plane2d"), []


def _cmd_potential(args):
    if not args.point and not args.polar:
        raise UsageError("potential needs at least one --point or --polar")
    rows = []
    if args.point:
        group, ds, failed = _system(args)
        if ds is None:
            return [], failed
        model = CMSModel(ds, gs=args.gs, gl=args.gl, mass=args.mass, kind=args.kind,
                         root_subset=args.subset)
        for q in args.point:
            if len(q) != 3:
                raise UsageError("--point needs three comma-separated numbers")
            v = assemble_potential(model, q)
            rows.append({"coords": "standard", "x1": q[0], "x2": q[1], "x3": q[2],
                         "re": v.real, "im": v.imag})
    for pt in args.polar:
        if len(pt) != 2:
            raise UsageError("--polar needs R,PHI")
        r, phi = pt
        if args.group == "a2":
            v = polar_potential_a2(args.gs, args.kind, r, phi, args.epsilon, args.mode)
        else:
            v = polar_potential_g2(args.gs, args.gl, args.kind, r, phi, args.epsilon, args.mode)
        rows.append({"coords": "polar", "x1": r, "x2": phi, "x3": 0.0,
                     "re": v.real, "im": v.imag})
    return rows, []


def _cmd_spectrum(args):
    # A2 is the gl = 0 specialisation of the G2 formulas.
    gl = 0.0 if args.group == "a2" else args.gl
    levels = energy_levels(args.profile, args.omega, args.gs, gl, args.nmax, args.lmax)
    rows = [{"kind": "level", "branch": lv.branch, "ell": lv.ell, "n": lv.n,
             "lam": lv.lam, "energy": lv.value, "partner": ""} for lv in levels]
    for (n, ell), (n2, ell2) in degeneracy_pairs(args.gs, gl, args.omega, args.nmax,
                                                 args.lmax):
        rows.append({"kind": "degeneracy", "branch": "+-", "ell": ell, "n": n,
                     "lam": 0.0, "energy": 0.0, "partner": f"{n2}:{ell2}"})
    return rows, []


def _cmd_verify(args):
    checks = run_checks()
    rows = [{"name": c.name, "pass": int(c.passed), "residual": float(c.residual)}
            for c in checks]
    return rows, checks


_COMMANDS = {
    "roots": _cmd_roots,
    "deform": _cmd_deform,
    "potential": _cmd_potential,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "figure": _cmd_figure,
}

_META_KEYS = ("group", "scheme", "epsilon", "gs", "gl", "omega", "format", "profile",
              "nmax", "lmax", "kind", "mode", "subset", "mass", "point", "polar")


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        rows, checks = _COMMANDS[args.command](args)
    except (UsageError, SingularEvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        parser.print_usage(stderr)
        return EXIT_USAGE
    flags = {k: getattr(args, k) for k in _META_KEYS if hasattr(args, k)}
    report = {
        "meta": {"tool": "ptcoxeter", "version": __version__, "command": args.command,
                 "flags": flags},
        "data": rows,
        "checks": _checks_payload(checks),
    }
    text = _render(report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    failed = [c for c in checks if not c.passed]
    if failed:
        print(f"check failed: {failed[0].name} (residual {failed[0].residual:.3g})", file=stderr)
        return EXIT_CHECK
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

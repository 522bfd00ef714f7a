"""Command-line frontend.

Subcommands: complete, fill, slopes, similar, commensurable, tangent,
trace.  Human-readable tables by default, machine-readable JSON with
--json; exit codes: 0 success, 2 input error, 3 numerical failure.
"""

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import boundary_trace as bt
from . import commensurability_xk as cx
from . import slopes_symmetry as ss
from .deformation import (
    ContinuationError,
    ConvergenceError,
    FillingSpec,
    GKSignature,
    jacobian,
    solve_complete,
    solve_filling,
    tangent_basis,
)
from .hyptrig import DomainError
from .report import build_report, report_to_dict, report_to_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def _env_float(name, default):
    val = os.environ.get(name)
    if val is None:
        return default
    return float(val)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fmt_c(z) -> str:
    return "%.12g%+.12gi" % (z.real, z.imag)


def _parse_slope_set(text: str, k: int) -> ss.SlopeSet:
    """Parse "p/q@torus" entries (tori numbered 1..k), comma-separated."""
    entries = {}
    if text.strip():
        for item in text.split(","):
            item = item.strip()
            if "@" not in item:
                raise DomainError("cannot parse slope entry %r (want p/q@i)" % item)
            pq, at = item.rsplit("@", 1)
            torus = int(at)
            if not 1 <= torus <= k:
                raise DomainError("torus index %d outside 1..%d" % (torus, k))
            if torus - 1 in entries:
                raise DomainError("torus %d given two slopes" % torus)
            ps, qs = pq.split("/", 1)
            entries[torus - 1] = ss.Slope.of(int(ps), int(qs))
    return ss.make_slope_set(k, entries)


def _report_lines(rep) -> str:
    lines = []
    lines.append("signature       g=%d k=%d" % (rep.g, rep.k))
    lines.append(
        "filling         %s"
        % ", ".join("inf" if pq is None else "%g/%g" % pq for pq in rep.filling)
    )
    lines.append("residual max    %.3g" % rep.residual_max)
    for i, c in enumerate(rep.cusps):
        coeff = "inf" if c.coefficients is None else "(%.9g, %.9g)" % c.coefficients
        extra = ""
        if c.modulus is not None:
            extra = "  modulus %s" % _fmt_c(c.modulus)
        if c.complex_length is not None:
            extra = "  core length %s" % _fmt_c(c.complex_length)
        lines.append(
            "cusp %-2d         u %s  v %s  coeff %s%s"
            % (i + 1, _fmt_c(c.u), _fmt_c(c.v), coeff, extra)
        )
    lines.append("return path     %.12g" % rep.return_path_length)
    lines.append("homology rank   %d" % rep.homology_rank)
    lines.append("heegaard genus  %d" % rep.heegaard_genus)
    if rep.abc is not None:
        lines.append("abc             (%.12g, %.12g, %.12g)" % rep.abc)
    return "\n".join(lines)


def _emit_report(args, rep) -> None:
    _emit(args, report_to_json(rep) if args.json else _report_lines(rep))


def cmd_complete(args) -> int:
    sig = GKSignature(args.g, args.k)
    sol = solve_complete(sig)
    spec = FillingSpec.unfilled(sig.k)
    rep = build_report(sig, spec, sol.x0, residual_tol=args.tol_residual)
    _emit_report(args, rep)
    return EXIT_OK


def _solve_one(sig, coeffs, args):
    spec = FillingSpec.parse(coeffs, sig.k)
    if args.allow_short:
        x = solve_filling(sig, spec, check_length=False)
    else:
        if not ss.hyperbolic_filling_check(spec):
            raise DomainError(
                "a filled slope is shorter than sqrt(7): filling is not hyperbolic"
            )
        x = solve_filling(sig, spec)
    return build_report(sig, spec, x, residual_tol=args.tol_residual)


def cmd_fill(args) -> int:
    sig = GKSignature(args.g, args.k)
    if args.batch:
        jobs = [c.strip() for c in args.coeffs.split(";") if c.strip()]
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(lambda c: _solve_one(sig, c, args), jobs))
        if args.json:
            _emit(args, json.dumps([report_to_dict(r) for r in reports], indent=2))
        else:
            _emit(args, "\n\n".join(_report_lines(r) for r in reports))
    else:
        _emit_report(args, _solve_one(sig, args.coeffs, args))
    return EXIT_OK


def cmd_slopes(args) -> int:
    table = ss.classify_slopes(args.max_len_sq)
    if args.json:
        doc = {
            "schema": "mgk/1",
            "max_len_sq": args.max_len_sq,
            "orbits": [
                {
                    "length_sq": lsq,
                    "length": math.sqrt(lsq),
                    "orbits": [[[s.p, s.q] for s in orb] for orb in orbits],
                }
                for lsq, orbits in table
            ],
        }
        _emit(args, json.dumps(doc, indent=2))
        return EXIT_OK
    lines = ["L^2   L        orbit size  representatives"]
    for lsq, orbits in table:
        for orb in orbits:
            reps = " ".join("%d/%d" % (s.p, s.q) for s in orb)
            lines.append("%-5d %-8.5g %-11d %s" % (lsq, math.sqrt(lsq), len(orb), reps))
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_similar(args) -> int:
    a = _parse_slope_set(args.set_a, args.k)
    b = _parse_slope_set(args.set_b, args.k)
    witness = ss.slope_sets_equivalent(
        a, b, orientation_preserving=not args.reflections
    )
    if args.json:
        doc = {
            "schema": "mgk/1",
            "equivalent": witness is not None,
            "witness": None
            if witness is None
            else {
                "perm": list(witness.perm),
                "local": [[e.rot, int(e.refl)] for e in witness.local],
                "orientation_preserving": witness.orientation_preserving,
            },
        }
        _emit(args, json.dumps(doc, indent=2))
    elif witness is None:
        _emit(args, "not equivalent: no witness isometry")
    else:
        moves = ", ".join(
            "torus %d -> %d via r^%d%s" % (i + 1, witness.perm[i] + 1, e.rot, " s" if e.refl else "")
            for i, e in enumerate(witness.local)
        )
        _emit(args, "equivalent: %s" % moves)
    return EXIT_OK


def cmd_commensurable(args) -> int:
    sig = cx.XkSignature(args.k)
    gk = sig.gk

    def solve_set(sset):
        pairs = [None if s is None else (float(s.p), float(s.q)) for s in sset]
        return solve_filling(gk, FillingSpec.from_pairs(gk.k, pairs))

    sets = [_parse_slope_set(text, args.k) for text in args.sets]
    points = [solve_set(sset) for sset in sets]
    labels = list(args.sets)
    if args.rotated:
        extra = []
        for x, lab in zip(points, labels):
            y1 = cx.theta_r(x, sig)
            y2 = cx.theta_r(y1, sig)
            extra += [(y1, lab + " (rotated)"), (y2, lab + " (rotated twice)")]
        points += [p for p, _ in extra]
        labels += [l for _, l in extra]
    rows = []
    for x, lab in zip(points, labels):
        inv = cx.abc(x, sig)
        rows.append({"label": lab, "abc": [inv.a, inv.b, inv.c]})
    verdicts = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            verdict = cx.commensurable(points[i], points[j], sig, tol=args.tol_invariant)
            verdicts.append(
                {
                    "pair": [labels[i], labels[j]],
                    "commensurable": verdict,
                }
            )
    if args.json:
        _emit(args, json.dumps({"schema": "mgk/1", "structures": rows, "pairs": verdicts}, indent=2))
    else:
        lines = []
        for r in rows:
            lines.append("%-28s abc = (%.12g, %.12g, %.12g)" % (r["label"], *r["abc"]))
        for v in verdicts:
            word = {True: "commensurable", False: "NOT commensurable", None: "indeterminate"}[
                v["commensurable"]
            ]
            lines.append("%s vs %s: %s" % (v["pair"][0], v["pair"][1], word))
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_tangent(args) -> int:
    sig = GKSignature(args.g, args.k)
    sol = solve_complete(sig)
    basis = tangent_basis(sig)
    J = jacobian(sig, sol.x0)
    jn = np.max(np.abs(J @ basis.T))
    sv = np.linalg.svd(np.vstack([J, np.zeros((2 * sig.k, sig.n_coords))]), compute_uv=False)
    if args.json:
        doc = {
            "schema": "mgk/1",
            "dimension": 2 * sig.k,
            "basis": [[float(v) for v in row] for row in basis],
            "max_jacobian_product": float(jn),
            "singular_values": [float(s) for s in sv],
        }
        _emit(args, json.dumps(doc, indent=2))
    else:
        lines = ["tangent space dimension %d" % (2 * sig.k)]
        lines.append("max |J b| over basis vectors: %.3g" % jn)
        for row in basis:
            lines.append("  [" + ", ".join("%.9g" % v for v in row) + "]")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_trace(args) -> int:
    sig = GKSignature(args.g, args.k)
    rows = []
    r0_values = (
        [args.r0]
        if args.grid is None
        else list(np.linspace(0.1, args.grid_max, args.grid))
    )
    for r0 in r0_values:
        try:
            data = bt.varsigma_trace_data(sig, args.delta, r0)
        except DomainError:
            continue
        tr0 = bt.trace_gamma(data.lambda0, data.eta0, data.zeta0)
        tdd = bt.trace_second_derivative(data)
        rows.append(
            {
                "r0": r0,
                "lambda0": data.lambda0,
                "eta0": data.eta0,
                "zeta0": data.zeta0,
                "trace": tr0,
                "trace_dd": tdd,
                "stima_positive": bt.stima_inequality(data.lambda0, data.eta0, data.zeta0),
            }
        )
    if not rows:
        raise DomainError("no admissible r0 values in the requested range")
    if args.json:
        _emit(args, json.dumps({"schema": "mgk/1", "delta": args.delta, "rows": rows}, indent=2))
    else:
        lines = ["r0        trace       trace''     stima>0"]
        for r in rows:
            lines.append(
                "%-9.5g %-11.6g %-11.6g %s" % (r["r0"], r["trace"], r["trace_dd"], r["stima_positive"])
            )
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _add_common(parser, top_level: bool) -> None:
    # registered on the top parser with real defaults and on every
    # subparser with SUPPRESS, so the flags work on either side of the
    # subcommand and a later occurrence wins
    sup = argparse.SUPPRESS
    parser.add_argument(
        "--json",
        action="store_true",
        default=False if top_level else sup,
        help="machine-readable output",
    )
    parser.add_argument(
        "--out",
        default=None if top_level else sup,
        help="write output to this file instead of stdout",
    )
    parser.add_argument(
        "--tol-residual",
        type=float,
        default=_env_float("MGK_TOL_RESIDUAL", 1e-9) if top_level else sup,
        help="reporting residual tolerance (env MGK_TOL_RESIDUAL)",
    )
    parser.add_argument(
        "--tol-invariant",
        type=float,
        default=_env_float("MGK_TOL_INVARIANT", 1e-8) if top_level else sup,
        help="invariant comparison tolerance (env MGK_TOL_INVARIANT)",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mgk",
        description="Hyperbolic structures, Dehn fillings and invariants "
        "of the (g, k) family of manifolds with geodesic boundary.",
    )
    _add_common(ap, top_level=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="solve the complete structure")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("fill", help="solve a Dehn filling")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coeffs", required=True, help='e.g. "inf,5/1"; with --batch, ";"-separated lists')
    p.add_argument("--batch", action="store_true", help="solve several coefficient lists")
    p.add_argument("--threads", type=int, default=4)
    p.add_argument("--allow-short", action="store_true", help="skip the sqrt(7) slope-length check")
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_fill)

    p = sub.add_parser("slopes", help="classify short slopes into isometry orbits")
    p.add_argument("--max-len-sq", type=int, required=True)
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_slopes)

    p = sub.add_parser("similar", help="decide equivalence of two slope sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("set_a", help='e.g. "3/1@1,5/1@2"')
    p.add_argument("set_b")
    p.add_argument("--reflections", action="store_true", help="allow orientation-reversing witnesses")
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("commensurable", help="compare fillings of the odd-k chain manifold")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("sets", nargs="+", help='slope sets, e.g. "7/2@1"')
    p.add_argument("--rotated", action="store_true", help="include the two rotated companions")
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_commensurable)

    p = sub.add_parser("tangent", help="tangent space at the complete solution")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("trace", help="boundary-trace second derivative data")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, choices=(0, 1), default=0)
    p.add_argument("--r0", type=float, default=1.0)
    p.add_argument("--grid", type=int, default=None, help="scan this many r0 values instead")
    p.add_argument("--grid-max", type=float, default=2.8)
    _add_common(p, top_level=False)
    p.set_defaults(func=cmd_trace)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except DomainError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except ContinuationError as exc:
        print(
            "numerical failure: %s (last good multiplier %.6g)" % (exc, exc.last_good_t),
            file=sys.stderr,
        )
        return EXIT_NUMERIC
    except ConvergenceError as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()

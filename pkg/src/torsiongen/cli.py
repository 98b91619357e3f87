"""Command-line surface: analysis reports, point/grid evaluation, averages,
resultant and unit tools; JSON/CSV output.

Polynomial arguments use the ascending-degree text form: "1,-1,1" is
1 - t + t**2, "6,-13,6" is 6 - 13 t + 6 t**2, "-2,1" is -2 + t (index =
power, always).  Exact integers serialize as decimal strings so arbitrary
precision survives JSON.

Exit codes: 0 success, 2 usage errors, 3 natural boundary where a
continuation was demanded, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import cmath
import csv
import json
import math
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import boundary, lvalues, resultants, torsion
from .continuation import ContinuationParams, rx_continued
from .errors import (NaturalBoundary, NonConvergence, PoleHit, TorsiongenError)
from .polyalg import IntPoly, classify_roots
from .rxcore import rx_series

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NATURAL_BOUNDARY = 3
EXIT_NUMERICAL = 4


def _c2pair(z):
    return [z.real, z.imag] if z is not None else None


def _parse_complex(text: str) -> complex:
    """complex from "re" or "re,im"."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    return complex(float(parts[0]), float(parts[1]))


def _parse_m(text: str):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text), 1)


def _params(args) -> ContinuationParams | None:
    if args.tail_tol is None and args.max_terms is None:
        return None
    return None  # built per-x; the knobs are threaded via _params_for


def _params_for(args, x):
    from .continuation import choose_K

    return ContinuationParams(
        K=choose_K(x),
        tail_tol=args.tail_tol if args.tail_tol else 1e-10,
        max_terms=args.max_terms if args.max_terms else 10 ** 5,
    )


def _emit(args, payload):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


# ----------------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    delta = IntPoly.parse(args.poly)
    prof = classify_roots(delta)
    report = {
        "poly": delta.text(),
        "mahler": prof.mahler,
        "roots": [
            {
                "value": _c2pair(r.value),
                "multiplicity": r.multiplicity,
                "class": r.kind,
                "order": r.order,
                "provenance": r.provenance,
            }
            for r in prof.roots
        ],
    }
    g = torsion.gordon_classify(delta)
    report["gordon"] = {
        "periodic": g.periodic,
        "period": g.period,
        "evidence": [list(e) for e in g.evidence],
    }
    table = torsion.torsion_table(delta, args.rmax)
    report["torsion"] = [
        {"r": r, "value": str(v)} for r, v in sorted(table.entries.items())
    ]
    report["omitted"] = sorted(table.omitted)
    if prof.diophantine:
        report["diophantine"] = {
            "roots": [_c2pair(r.value) for r in prof.diophantine],
            "note": (
                "the unit circle is a natural boundary: no meromorphic "
                "continuation exists; probe boundary behaviour with the "
                "'radial' command (Cesaro/Abel estimates of "
                "limrad (1-|z|) E(z))"
            ),
        }
    else:
        lau = torsion.laurent_at_one(delta)
        report["laurent"] = {
            "c_minus2": lau.c_minus2,
            "c_minus1": lau.c_minus1,
            "c_0": lau.c_0,
        }
        poles = torsion.pole_set(delta, args.radius)
        report["poles"] = [
            {
                "re": p.location.real,
                "im": p.location.imag,
                "order": p.order,
                "generator": _c2pair(p.generator),
                "exponent": p.exponent,
                "residue": _c2pair(p.residue_estimate),
            }
            for p in poles
        ]
    _emit(args, report)
    return EXIT_OK


# ----------------------------------------------------------------------------
# eval / grid
# ----------------------------------------------------------------------------

def _quantity_value(args, quantity: str, z: complex):
    if quantity.startswith("e-series"):
        n = int(quantity.split(":")[1]) if ":" in quantity else 300
        delta = IntPoly.parse(args.poly)
        coeffs = torsion.e_series(delta, n)
        return sum(v * z ** r for r, v in coeffs)
    if quantity == "e-cont":
        delta = IntPoly.parse(args.poly)
        return torsion.e_continued(delta, z, _params(args)).value
    if quantity == "t-cont":
        f = IntPoly.parse(args.poly)
        return resultants.t_f_continued(f, z, _params(args)).value
    if quantity == "r-cont":
        x = _parse_complex(args.x)
        return rx_continued(x, z, _params_for(args, x if abs(x) < 1 else 1 / x)).value
    if quantity == "r-series":
        x = _parse_complex(args.x)
        return rx_series(x, z, args.max_terms or 2000).value
    raise ValueError(f"unknown quantity {quantity!r}")


def _transform(value: complex, how: str):
    if how == "complex":
        return f"{value.real:.12g}{value.imag:+.12g}j"
    if how == "abs":
        return f"{abs(value):.12g}"
    if how == "log-abs":
        return f"{math.log(abs(value)):.12g}" if value != 0 else "-inf"
    if how == "re":
        return f"{value.real:.12g}"
    if how == "im":
        return f"{value.imag:.12g}"
    raise ValueError(f"unknown transform {how!r}")


def cmd_eval(args) -> int:
    z = _parse_complex(args.z)
    value = _quantity_value(args, args.quantity, z)
    _emit(args, {"z": _c2pair(z), "quantity": args.quantity,
                 "value": _c2pair(value)})
    return EXIT_OK


def _pole_locations(args):
    try:
        delta = IntPoly.parse(args.poly)
        prof = classify_roots(delta)
        if prof.diophantine:
            return []
        reports = torsion.pole_set(delta, 1e6, compute_residues=False)
        return [p.location for p in reports]
    except Exception:
        return []


def cmd_grid(args) -> int:
    if args.nx < 2 or args.ny < 2:
        raise ValueError("grid needs nx, ny >= 2")
    quantity = args.quantity
    if args.poly:
        prof = classify_roots(IntPoly.parse(args.poly))
        if prof.diophantine and not quantity.startswith("e-series"):
            raise NaturalBoundary([r.value for r in prof.diophantine])
    poles = [] if quantity.startswith("e-series") else _pole_locations(args)
    xs = [
        args.re_min + (args.re_max - args.re_min) * i / (args.nx - 1)
        for i in range(args.nx)
    ]
    ys = [
        args.im_min + (args.im_max - args.im_min) * j / (args.ny - 1)
        for j in range(args.ny)
    ]

    def row(j):
        out = []
        y = ys[j]
        for x in xs:
            z = complex(x, y)
            if any(abs(z - p) < 1e-6 for p in poles):
                out.append((x, y, "POLE"))
                continue
            try:
                v = _quantity_value(args, quantity, z)
                out.append((x, y, _transform(v, args.transform)))
            except PoleHit:
                out.append((x, y, "POLE"))
        return out

    threads = max(1, args.grid_threads if args.grid_threads else args.threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(args.ny)))
    else:
        rows = [row(j) for j in range(args.ny)]
    dest = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(dest)
        writer.writerow(["re", "im", "value"])
        for r in rows:
            for x, y, v in r:
                writer.writerow([f"{x:.12g}", f"{y:.12g}", v])
    finally:
        if args.out:
            dest.close()
    return EXIT_OK


# ----------------------------------------------------------------------------
# torsion / cyclic / units / lvalue / average / radial
# ----------------------------------------------------------------------------

def cmd_torsion(args) -> int:
    delta = IntPoly.parse(args.poly)
    table = torsion.torsion_table(delta, args.rmax)
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["r", "value", "omitted"])
        for r in range(1, args.rmax + 1):
            if r in table.omitted:
                writer.writerow([r, "0", "1"])
            else:
                writer.writerow([r, str(table.entries[r]), "0"])
    else:
        _emit(args, {
            "poly": delta.text(),
            "torsion": [{"r": r, "value": str(v)}
                        for r, v in sorted(table.entries.items())],
            "omitted": sorted(table.omitted),
        })
    return EXIT_OK


def cmd_cyclic(args) -> int:
    f = IntPoly.parse(args.poly)
    rs = resultants.cyclic_resultants(f, args.M)
    if args.g:
        g = IntPoly.parse(args.g)
        equal = resultants.hillar_equal(f, g, args.M)
        payload = {
            "f": f.text(),
            "g": g.text(),
            "M": args.M,
            "equal_abs_cyclic_resultants": equal,
        }
        if equal:
            try:
                dec = resultants.hillar_decompose(f, g)
                payload["decomposition"] = {
                    "u": [str(c) for c in dec.u],
                    "v": [str(c) for c in dec.v],
                    "l1": dec.l1,
                    "l2": dec.l2,
                    "sign": dec.sign,
                    "integral": dec.integral,
                }
            except TorsiongenError as exc:
                payload["decomposition"] = {"error": str(exc)}
        _emit(args, payload)
        return EXIT_OK
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["m", "r_m", "is_unit"])
        for m, r in enumerate(rs, start=1):
            writer.writerow([m, str(r), int(abs(r) == 1)])
    else:
        _emit(args, {
            "poly": f.text(),
            "cyclic_resultants": [
                {"m": m, "r_m": str(r), "is_unit": abs(r) == 1}
                for m, r in enumerate(rs, start=1)
            ],
        })
    return EXIT_OK


def cmd_units(args) -> int:
    minpoly = IntPoly.parse(args.poly)
    scan = resultants.exceptional_scan(minpoly, args.M)
    _emit(args, {
        "minpoly": minpoly.text(),
        "M": scan.M,
        "E0": scan.E0,
        "unit_indices": scan.unit_indices,
        "count_within_bound": scan.count_within_bound,
        "lower_bound_only": True,
        "norms": [str(n) for n in scan.norms],
    })
    return EXIT_OK


def cmd_lvalue(args) -> int:
    table = lvalues.characters(args.modulus)
    chars = []
    for i, chi in enumerate(table.characters):
        entry = {
            "index": i,
            "exponents": list(chi.exponents),
            "principal": chi.is_principal,
        }
        if not chi.is_principal:
            val = lvalues.l_one_periodic(chi.periodic_fn())
            entry["L1"] = _c2pair(val)
        chars.append(entry)
    _emit(args, {
        "modulus": args.modulus,
        "phi": len(table.characters),
        "generator_orders": list(table.generator_orders),
        "characters": chars,
    })
    return EXIT_OK


def cmd_average(args) -> int:
    m = _parse_m(args.m)
    spec = boundary.AverageSpec(
        theta=args.theta,
        m_num=m.numerator,
        m_den=m.denominator,
        N=args.N,
        alpha=args.alpha,
        frac_weight=args.frac_weight,
    )
    val = boundary.ergodic_average(spec)
    _emit(args, {
        "theta": args.theta,
        "alpha": args.alpha,
        "m": str(m),
        "N": args.N,
        "frac_weight": args.frac_weight,
        "average": _c2pair(val),
    })
    return EXIT_OK


def cmd_radial(args) -> int:
    bits = args.precision_bits
    if args.poly:
        stream = boundary.e_log_stream(IntPoly.parse(args.poly))
    elif args.theta:
        stream = boundary.unimodular_log_stream(
            boundary.parse_theta_spec(args.theta, bits)
        )
    else:
        raise ValueError("radial needs a polynomial or --theta")
    angle = boundary.parse_theta_spec(args.p, bits)
    p = cmath.exp(2j * math.pi * float(angle))
    res = boundary.radial_limit(stream, p, args.mode)
    _emit(args, {
        "p_angle": float(angle),
        "mode": res.mode,
        "value": res.value,
        "imag": res.imag,
        "err_estimate": res.err,
        "n_used": res.n_used,
    })
    return EXIT_OK


# ----------------------------------------------------------------------------
# parser / main
# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="torsiongen",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ap.add_argument("--tail-tol", type=float, default=None,
                    help="series truncation tolerance (default 1e-10)")
    ap.add_argument("--max-terms", type=int, default=None,
                    help="series term cap per index (default 1e5)")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker threads for grid evaluation")
    ap.add_argument("--precision-bits", type=int, default=160,
                    help="working precision for angle extraction / PSLQ")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for a polynomial")
    p.add_argument("poly")
    p.add_argument("--rmax", type=int, default=64)
    p.add_argument("--radius", type=float, default=4.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("eval", help="evaluate one quantity at one point")
    p.add_argument("poly", nargs="?")
    p.add_argument("--x", help="parameter x for r-cont/r-series")
    p.add_argument("--z", required=True, help='evaluation point "re,im"')
    p.add_argument("--quantity", default="e-cont",
                   choices=["e-cont", "t-cont", "r-cont", "r-series"],
                   help="which function to evaluate")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="CSV grid evaluation (re, im, value)")
    p.add_argument("poly", nargs="?")
    p.add_argument("--x", help="parameter x for r-cont")
    p.add_argument("--quantity", default="e-cont",
                   help="e-cont | t-cont | r-cont | e-series[:N]")
    p.add_argument("--transform", default="re",
                   choices=["complex", "abs", "log-abs", "re", "im"])
    p.add_argument("--re-min", type=float, required=True)
    p.add_argument("--re-max", type=float, required=True)
    p.add_argument("--im-min", type=float, required=True)
    p.add_argument("--im-max", type=float, required=True)
    p.add_argument("--nx", type=int, default=101)
    p.add_argument("--ny", type=int, default=101)
    p.add_argument("--threads", dest="grid_threads", type=int, default=None,
                   help="worker threads (also accepted as a global flag)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("torsion", help="exact torsion table")
    p.add_argument("poly")
    p.add_argument("--rmax", type=int, default=64)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("average", help="ergodic averages")
    p.add_argument("--theta", required=True,
                   help='decimal, "root:<poly>:<i>", or "pair:<poly>:<i>:<j>"')
    p.add_argument("--alpha", default=None,
                   help="independent direction for the 2d average")
    p.add_argument("--m", default="0", help='integer or fraction "u/v"')
    p.add_argument("--N", type=int, default=10 ** 6)
    p.add_argument("--frac-weight", action="store_true",
                   help="weight e^{2 pi i m {n theta}} instead of the literal product")
    p.add_argument("--out")
    p.set_defaults(func=cmd_average)

    p = sub.add_parser("cyclic", help="cyclic resultants / Hillar comparison")
    p.add_argument("poly")
    p.add_argument("--g", help="second polynomial for the Hillar comparison")
    p.add_argument("--M", type=int, default=12)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("units", help="exceptional-unit scan")
    p.add_argument("poly")
    p.add_argument("--M", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("lvalue", help="Dirichlet characters mod m and L(1, chi)")
    p.add_argument("modulus", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lvalue)

    p = sub.add_parser("radial", help="radial-limit estimation at the boundary")
    p.add_argument("poly", nargs="?")
    p.add_argument("--theta", help="angle spec for a bare unimodular stream")
    p.add_argument("--p", required=True, help="boundary point as an angle spec")
    p.add_argument("--mode", default="abel", choices=["cesaro", "abel"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_radial)
    return ap


def main(argv=None) -> int:
    warnings.simplefilter("ignore")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NaturalBoundary as exc:
        print(f"natural boundary: {exc}", file=sys.stderr)
        return EXIT_NATURAL_BOUNDARY
    except (PoleHit, NonConvergence, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, KeyError, IndexError, TorsiongenError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 when every check passes, 1 on a failed assertion, 2 on a
usage or domain error.  Data goes to stdout, messages to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cocycle import commutation_table, cocycle_gamma, render_table_text
from .differentials import Window, basis_of, independence_certificate, oracle_reduce, reduce_mod_dR
from .errors import SuperellipticError
from .families import DJKM, Elliptic, FourPoint, ThreePoint, dimension_report, preset_curve
from .lie import load_lie, sl2
from .parsing import parse_curve, parse_differential, parse_element
from .report import render_table
from .ring import CurveSpec, q_str
from .verify import SUITES, run_suites


class UsageError(Exception):
    pass


def _q(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from exc


def _int_range(s: str) -> range:
    """``a:b`` inclusive."""
    try:
        lo, hi = (int(x) for x in s.split(":"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {s!r}") from exc
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {s!r}")
    return range(lo, hi + 1)


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from exc


def _add_curve_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("curve")
    g.add_argument("--m", type=int, help="exponent of u")
    g.add_argument("--p", help="monic polynomial in t, e.g. 't^3-t^2+t'")
    g.add_argument("--preset", choices=["elliptic", "djkm", "threepoint", "fourpoint"])
    g.add_argument("--b", type=_q)
    g.add_argument("--c", type=_q)
    g.add_argument("--a", type=_q, help="four-point parameter a; b = (a+1)/(a-1)")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superelliptic",
                                 description="Kaehler differentials modulo exact forms on u^m = p(t).")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="list the basis of Omega/dR")
    _add_curve_args(p)
    _add_format(p)
    p.add_argument("--certify", action="store_true", help="also run the independence certificate")

    p = sub.add_parser("reduce", help="reduce a differential to basis coordinates")
    _add_curve_args(p)
    _add_format(p)
    p.add_argument("--expr", required=True)
    p.add_argument("--window", type=_int_range, help="use the window oracle on LO:HI instead of the rewriter")

    p = sub.add_parser("cocycle", help="evaluate gamma(f, g) = class of f dg")
    _add_curve_args(p)
    _add_format(p)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = sub.add_parser("table", help="commutation table of the extended loop algebra")
    _add_curve_args(p)
    _add_format(p)
    p.add_argument("--lie", default="sl2", help="sl2 or file:PATH")
    p.add_argument("--range", type=_int_range, default=range(-1, 2), help="t-degrees LO:HI")
    p.add_argument("--grades", type=_int_list, default=None, help="u-grades, comma separated")

    p = sub.add_parser("verify", help="run seeded verification suites")
    _add_format(p)
    p.add_argument("--suite", default="all", help=f"all or comma list of {','.join(SUITES)}")
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("preset", help="show a preset curve with its basis")
    _add_curve_args(p)
    _add_format(p)

    p = sub.add_parser("dims", help="dimension diagnostics against closed-form counts")
    _add_curve_args(p)
    _add_format(p)
    return ap


def resolve_curve(ns: argparse.Namespace) -> CurveSpec:
    if ns.preset:
        if ns.m is not None or ns.p is not None:
            raise UsageError("--m/--p cannot be combined with --preset")
        return preset_curve(_preset_id(ns))
    if ns.m is None or ns.p is None:
        raise UsageError("give either --preset or both --m and --p")
    return parse_curve(ns.m, ns.p)


def _need(ns, *names):
    missing = [n for n in names if getattr(ns, n) is None]
    if missing:
        raise UsageError(f"preset {ns.preset} needs " + ", ".join(f"--{n}" for n in missing))


def _preset_id(ns):
    if ns.preset == "elliptic":
        _need(ns, "b")
        return Elliptic(ns.b)
    if ns.preset == "djkm":
        _need(ns, "b", "c")
        return DJKM(ns.b, ns.c)
    if ns.preset == "threepoint":
        return ThreePoint()
    if ns.b is None and ns.a is None:
        raise UsageError("preset fourpoint needs --b or --a")
    return FourPoint(b=ns.b, a=ns.a)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _class_text(cls) -> str:
    rows = [[str(lab), q_str(v)] for lab, v in cls.items()]
    return render_table(["class", "coefficient"], rows) if rows else "0"


def _cmd_basis(ns, out) -> int:
    c = resolve_curve(ns)
    labels = basis_of(c)
    cert = independence_certificate(c) if ns.certify else None
    if ns.format == "json":
        obj = {"curve": {"m": c.m, "p": c.p_string()}, "dimension": len(labels),
               "basis": [str(lab) for lab in labels]}
        if cert:
            obj["certificate"] = cert.to_json()
        out.write(_dump(obj) + "\n")
    else:
        for lab in labels:
            out.write(f"{lab}\t{lab.monomial_str()}\n")
        if cert:
            out.write(f"certificate: {'PASS' if cert.passed else 'FAIL'}\n")
    return 0 if cert is None or cert.passed else 1


def _cmd_reduce(ns, out) -> int:
    c = resolve_curve(ns)
    w = parse_differential(ns.expr, c)
    if ns.window is not None:
        cls = oracle_reduce(w, c, Window(ns.window.start, ns.window.stop - 1))
    else:
        cls = reduce_mod_dR(w, c)
    out.write((_dump(cls.to_json()) if ns.format == "json" else _class_text(cls)) + "\n")
    return 0


def _cmd_cocycle(ns, out) -> int:
    c = resolve_curve(ns)
    f, g = parse_element(ns.f, c), parse_element(ns.g, c)
    cls = cocycle_gamma(f, g, c)
    out.write((_dump(cls.to_json()) if ns.format == "json" else _class_text(cls)) + "\n")
    return 0


def _load_lie(spec: str):
    if spec == "sl2":
        return sl2()
    if spec.startswith("file:"):
        return load_lie(spec[5:])
    raise UsageError("--lie takes sl2 or file:PATH")


def _cmd_table(ns, out) -> int:
    c = resolve_curve(ns)
    lie = _load_lie(ns.lie)
    grades = ns.grades if ns.grades is not None else list(range(c.m))
    bad = [g for g in grades if not 0 <= g < c.m]
    if bad:
        raise UsageError(f"grades must lie in [0, {c.m - 1}], got {bad}")
    rows = commutation_table(lie, c, ns.range, grades)
    if ns.format == "json":
        out.write(_dump([r.to_json(lie) for r in rows]) + "\n")
    else:
        out.write(render_table_text(rows, lie) + "\n")
    return 0


def _cmd_verify(ns, out) -> int:
    names = list(SUITES) if ns.suite == "all" else [s.strip() for s in ns.suite.split(",") if s.strip()]
    unknown = [n for n in names if n not in SUITES]
    if unknown or not names:
        raise UsageError(f"unknown suite(s) {unknown}; choose from all,{','.join(SUITES)}")
    reports = run_suites(names, ns.seed)
    if ns.format == "json":
        out.write(_dump({"seed": ns.seed, "suites": names,
                         "reports": [r.to_json() for r in reports]}) + "\n")
    else:
        for r in reports:
            out.write(r.summary_line() + "\n")
            for f in r.failures:
                out.write(f"    {'flag' if r.diagnostic else 'FAIL'}: {f}\n")
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"{len(failed)} suite(s) failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def _cmd_preset(ns, out) -> int:
    if not ns.preset:
        raise UsageError("preset needs --preset")
    c = resolve_curve(ns)
    labels = basis_of(c)
    if ns.format == "json":
        out.write(_dump({"preset": ns.preset, "m": c.m, "p": c.p_string(),
                         "coefficients": [q_str(a) for a in c.coeffs],
                         "basis": [str(lab) for lab in labels]}) + "\n")
    else:
        out.write(f"{ns.preset}: u^{c.m} = {c.p_string()}\n")
        out.write("basis: " + ", ".join(str(lab) for lab in labels) + "\n")
    return 0


def _cmd_dims(ns, out) -> int:
    rep = dimension_report(resolve_curve(ns))
    out.write((_dump(rep.to_json()) if ns.format == "json" else rep.to_text()) + "\n")
    return 0 if rep.certificate_passed else 1


COMMANDS = {
    "basis": _cmd_basis, "reduce": _cmd_reduce, "cocycle": _cmd_cocycle, "table": _cmd_table,
    "verify": _cmd_verify, "preset": _cmd_preset, "dims": _cmd_dims,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return COMMANDS[ns.command](ns, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SuperellipticError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

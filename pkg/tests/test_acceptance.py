"""Acceptance criteria 1-8, one PASS/FAIL line each.

The lines are printed as each test runs and repeated in the pytest
terminal summary (see conftest.py).
"""
import io
import random
import time
from fractions import Fraction

import pytest

from superelliptic import (DJKM, OMEGA0, BasisLabel, Elliptic, FourPoint, ThreePoint, basis_of,
                           check_two_cocycle, derive, dimension_report, expected_dimension,
                           gegenbauer_check, independence_certificate, oracle_reduce, poly_seq,
                           pollaczek_transfer_check, preset_curve, prop_q_check, prop_uu_check,
                           qk_polynomial, reduce_mod_dR, sl2)
from superelliptic.cli import main
from superelliptic.cocycle import affine_delta_check
from superelliptic.families import P_SEQ, Q_SEQ
from superelliptic.randgen import random_differential, random_element
from superelliptic.verify import grid_curves

RESULTS: dict[int, str] = {}
SEED = 7
W = BasisLabel


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_1_published_bases():
    cases = {
        "djkm": (DJKM(2, 3), {OMEGA0, W(-1, 1), W(-2, 1), W(-3, 1), W(-4, 1)}),
        "elliptic": (Elliptic(Fraction(1, 2)), {OMEGA0, W(-1, 1), W(-2, 1)}),
        "threepoint": (ThreePoint(), {OMEGA0, W(-1, 1)}),
        "fourpoint": (FourPoint(b=2), {OMEGA0, W(-2, 1), W(-1, 1)}),
    }
    bad, slowest = [], 0.0
    for name, (pid, want) in cases.items():
        t0 = time.perf_counter()
        c = preset_curve(pid)
        got = basis_of(c)
        cert = independence_certificate(c)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if set(got) != want or len(got) != len(want) or not cert.passed or dt >= 1.0:
            bad.append(name)
    record(1, not bad, f"4 presets, exact basis sets and certificates, slowest {slowest:.2f}s"
           + (f"; failing {bad}" if bad else ""))


def test_criterion_2_grid():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    curves = grid_curves(SEED)
    bad_dim, bad_cert, mismatches, n = 0, 0, 0, 0
    for c in curves:
        if len(basis_of(c)) != expected_dimension(c):
            bad_dim += 1
        cert = independence_certificate(c)
        if not cert.passed or cert.dimension != expected_dimension(c):
            bad_cert += 1
        for _ in range(200):
            w = random_differential(rng, c.m)
            n += 1
            if reduce_mod_dR(w, c) != oracle_reduce(w, c):
                mismatches += 1
    dt = time.perf_counter() - t0
    ok = len(curves) == 48 and not (bad_dim or bad_cert or mismatches) and dt < 60
    record(2, ok, f"{len(curves)} curves, {n} reductions vs oracle, {mismatches} mismatches, "
           f"{bad_dim} dimension / {bad_cert} certificate failures, {dt:.1f}s (< 60s)")


def test_criterion_3_exactness():
    rng = random.Random(SEED + 1)
    n, bad = 0, 0
    for c in grid_curves(SEED):
        for _ in range(200):
            h = random_element(rng, c.m)
            n += 1
            if reduce_mod_dR(derive(h), c):
                bad += 1
    record(3, bad == 0, f"{n} exact forms d(h), {bad} with nonzero class")


def test_criterion_4_cocycle_axioms():
    lie = sl2()
    presets = [Elliptic(Fraction(1, 2)), DJKM(2, 3), ThreePoint(), FourPoint(b=2)]
    failures = []
    for k, pid in enumerate(presets):
        rep = check_two_cocycle(preset_curve(pid), 100, SEED + k, lie, 50)
        if not rep.passed or rep.checked != 250:
            failures.append(rep.name)
    record(4, not failures, "antisymmetry + cyclic on 100 triples, sl2 Jacobi on 50 triples, 4 presets"
           + (f"; failing {failures}" if failures else ""))


def test_criterion_5_propositions():
    ell = preset_curve(Elliptic(Fraction(1, 2)))
    delta = affine_delta_check(ell, 8)
    uu_bad, uu_n = 0, 0
    for c in grid_curves(SEED):
        r = prop_uu_check(c, 6)
        uu_n += r.checked
        uu_bad += len(r.failures)
    complete = True
    flagged = 0
    for pid in (Elliptic(Fraction(1, 2)), DJKM(2, 3), ThreePoint(), FourPoint(b=2)):
        c = preset_curve(pid)
        q = prop_q_check(c, 4)
        rows = q.info["rows"]
        complete &= len(rows) == 81 * (c.m - 1) and q.passed
        complete &= all(r["stated"] in ("match", "MISMATCH", "SINGULAR") for r in rows)
        flagged += len(q.failures)
    ok = delta.passed and delta.checked == 289 and uu_bad == 0 and complete
    record(5, ok, f"t^i d(t^j) {delta.checked} exact, prop_uu {uu_n} exact with {uu_bad} failures, "
           f"prop_q tables complete ({flagged} stated-form mismatches recorded, diagnostic)")


def test_criterion_6_polynomial_families():
    bs = [Fraction(1, 2), Fraction(2), Fraction(-1, 3), Fraction(5, 7), Fraction(0)]
    p, q = poly_seq(P_SEQ, 1), poly_seq(Q_SEQ, 1)
    initials = (p[0], p[1], q[0], q[1]) == (0, 1, 1, 0)
    geg = gegenbauer_check(Fraction(-1, 2), bs, 20)
    divisible = True
    for k in range(21):
        try:
            qk_polynomial(k)
        except ArithmeticError:
            divisible = False
    tr = pollaczek_transfer_check(bs[:3], range(13))
    first = tr.info["first_divergence"]
    rows_ok = tr.checked == 39 and len(tr.info["rows"]) == 39
    # archived regression values: the engine disagrees with the quoted beta from k = 2 on
    archived = first == {"literal": 1, "omega_plus": 2} and tr.info["fitted_beta"] == "0"
    ok = initials and geg.passed and geg.checked == 105 and divisible and rows_ok and archived
    record(6, ok, f"initials {'ok' if initials else 'wrong'}, Gegenbauer {geg.checked} exact, "
           f"Q_k divisible k<=20, transfer rows {tr.checked}, first divergence {first['omega_plus']} "
           f"(literal reading {first['literal']}), engine fits beta={tr.info['fitted_beta']}")


def test_criterion_7_discrepancy_ledger():
    djkm = dimension_report(preset_curve(DJKM(2, 3)))
    ell = dimension_report(preset_curve(Elliptic(Fraction(1, 2))))
    ok = ((djkm.certified, djkm.theorem_formula) == (5, 7) and (ell.certified, ell.theorem_formula) == (3, 4)
          and djkm.certificate_passed and ell.certificate_passed
          and any("theorem" in f for f in djkm.flags) and any("theorem" in f for f in ell.flags)
          and any("2g+n-1" in f for f in ell.flags))
    record(7, ok, f"DJKM certified {djkm.certified} vs formula {djkm.theorem_formula}, "
           f"elliptic certified {ell.certified} vs formula {ell.theorem_formula}; "
           f"{len(djkm.flags) + len(ell.flags)} flags raised")


def test_criterion_8_determinism():
    t0 = time.perf_counter()
    outs, codes = [], []
    for _ in range(2):
        buf = io.StringIO()
        codes.append(main(["verify", "--suite", "all", "--seed", "7"], out=buf))
        outs.append(buf.getvalue())
    dt = time.perf_counter() - t0
    ok = codes == [0, 0] and outs[0] == outs[1] and len(outs[0]) > 0 and dt < 300
    record(8, ok, f"verify --suite all --seed 7 twice: exit {codes}, "
           f"{'identical' if outs[0] == outs[1] else 'DIFFERENT'} output ({len(outs[0])} bytes), {dt:.1f}s")

"""Seeded verification suites over the presets and the (m, d) grid."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .cocycle import (affine_delta_check, affine_subtable_mismatches, check_two_cocycle,
                      commutation_table, prop_q_check, prop_uu_check)
from .differentials import (basis_of, expected_dimension, independence_certificate,
                            oracle_reduce, reduce_mod_dR)
from .families import (DJKM, Elliptic, FourPoint, ThreePoint, dimension_report,
                       gegenbauer_check, poly_seq, P_SEQ, Q_SEQ, pollaczek_transfer_check,
                       preset_curve, qk_polynomial)
from .lie import sl2
from .randgen import random_curve, random_differential, random_element
from .report import CheckReport
from .ring import CurveSpec, derive

GRID_M = (2, 3, 4, 5)
GRID_D = (1, 2, 3, 4, 5, 6)

PRESETS = {
    "elliptic": Elliptic(Fraction(1, 2)),
    "djkm": DJKM(Fraction(2), Fraction(3)),
    "threepoint": ThreePoint(),
    "fourpoint": FourPoint(b=Fraction(2)),
}


def grid_curves(seed: int) -> list[CurveSpec]:
    """One random monic p with a_0 != 0 and one with a_0 = 0 per (m, d)."""
    rng = random.Random(seed)
    out = []
    for m in GRID_M:
        for d in GRID_D:
            for a0_zero in (False, True):
                out.append(random_curve(rng, m, d, a0_zero))
    return out


def suite_bases(seed: int) -> list[CheckReport]:
    rep = CheckReport("preset bases")
    for name, pid in PRESETS.items():
        c = preset_curve(pid)
        cert = independence_certificate(c)
        rep.checked += 1
        if not cert.passed:
            rep.fail(f"{name}: certificate failed")
        rep.info[name] = [str(lab) for lab in basis_of(c)]
    return [rep]


def suite_dimensions(seed: int) -> list[CheckReport]:
    rep = CheckReport("grid dimensions")
    for c in grid_curves(seed):
        cert = independence_certificate(c)
        rep.checked += 1
        if not cert.passed or cert.dimension != expected_dimension(c):
            rep.fail(f"{c}: dim {cert.dimension}, certificate {cert.passed}")
    return [rep]


def suite_oracle(seed: int, samples: int = 200) -> list[CheckReport]:
    rng = random.Random(seed)
    rep = CheckReport(f"rewriter == oracle ({samples} per grid curve)")
    for c in grid_curves(seed):
        for _ in range(samples):
            w = random_differential(rng, c.m)
            rep.checked += 1
            if reduce_mod_dR(w, c) != oracle_reduce(w, c):
                rep.fail(f"{c}: {w}")
    return [rep]


def suite_exactness(seed: int, samples: int = 200) -> list[CheckReport]:
    rng = random.Random(seed + 1)
    rep = CheckReport(f"reduce(d h) == 0 ({samples} per grid curve)")
    for c in grid_curves(seed):
        for _ in range(samples):
            h = random_element(rng, c.m)
            rep.checked += 1
            got = reduce_mod_dR(derive(h), c)
            if got:
                rep.fail(f"{c}: h={h} -> {got}")
    return [rep]


def suite_cocycle(seed: int, samples: int = 100, jacobi: int = 50) -> list[CheckReport]:
    lie = sl2()
    return [check_two_cocycle(preset_curve(pid), samples, seed + k, lie, jacobi)
            for k, pid in enumerate(PRESETS.values())]


def suite_props(seed: int) -> list[CheckReport]:
    reps = [affine_delta_check(preset_curve(PRESETS["elliptic"]), 8)]
    uu = CheckReport("prop_uu on grid, |i|,|j| <= 6")
    for c in grid_curves(seed):
        r = prop_uu_check(c, 6)
        uu.checked += r.checked
        uu.failures.extend(f"{c}: {f}" for f in r.failures)
    reps.append(uu)
    lie = sl2()
    tab = CheckReport("affine sub-table (sl2, elliptic, [-2,2])")
    rows = commutation_table(lie, preset_curve(PRESETS["elliptic"]), range(-2, 3), [0])
    tab.checked = len(rows)
    tab.failures = [f"row {r.x},{r.f},{r.y},{r.g}" for r in affine_subtable_mismatches(rows, lie)]
    reps.append(tab)
    return reps


def suite_prop_q(seed: int) -> list[CheckReport]:
    return [prop_q_check(preset_curve(pid), 4) for pid in PRESETS.values()]


def suite_polynomials(seed: int) -> list[CheckReport]:
    bs = [Fraction(1, 2), Fraction(2), Fraction(-1, 3), Fraction(5, 7), Fraction(0)]
    reps = [gegenbauer_check(Fraction(-1, 2), bs, 20)]
    init = CheckReport("pollaczek initials")
    p, q = poly_seq(P_SEQ, 1), poly_seq(Q_SEQ, 1)
    init.checked = 4
    if [p[0], p[1], q[0], q[1]] != [0, 1, 1, 0]:
        init.fail(f"got p0={p[0]} p1={p[1]} q0={q[0]} q1={q[1]}")
    reps.append(init)
    div = CheckReport("Q_k divisibility, k <= 20")
    for k in range(21):
        div.checked += 1
        try:
            qk_polynomial(k)
        except ArithmeticError as exc:
            div.fail(str(exc))
    reps.append(div)
    reps.append(pollaczek_transfer_check(bs[:3], range(13)))
    return reps


def suite_discrepancies(seed: int) -> list[CheckReport]:
    rep = CheckReport("dimension discrepancy ledger", diagnostic=True)
    for name in ("djkm", "elliptic", "fourpoint", "threepoint"):
        dr = dimension_report(preset_curve(PRESETS[name]))
        rep.checked += 1
        rep.info[name] = dr.to_json()
        rep.failures.extend(f"{name}: {f}" for f in dr.flags)
    return [rep]


SUITES: dict[str, Callable[[int], list[CheckReport]]] = {
    "bases": suite_bases,
    "dimensions": suite_dimensions,
    "oracle": suite_oracle,
    "exactness": suite_exactness,
    "cocycle": suite_cocycle,
    "props": suite_props,
    "prop_q": suite_prop_q,
    "polynomials": suite_polynomials,
    "discrepancies": suite_discrepancies,
}


def run_suites(names: list[str], seed: int) -> list[CheckReport]:
    out: list[CheckReport] = []
    for n in names:
        out.extend(SUITES[n](seed))
    return out

"""Hyperelliptic presets, Pollaczek/Gegenbauer families and dimension diagnostics."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .differentials import (BasisLabel, DiffClass, basis_of, independence_certificate,
                            reduce_mod_dR)
from .errors import BadParameter, CurveError, DivisibilityFailure, ZeroDenominator
from .qpoly import QPoly
from .report import CheckReport, render_table
from .ring import CurveSpec, Differential, RingElement, make_curve, q_str, to_q

OMEGA_PLUS = BasisLabel(-1, 1)
OMEGA_MINUS = BasisLabel(-2, 1)


# ---------------------------------------------------------------------------
# presets

@dataclass(frozen=True)
class Elliptic:
    b: Fraction


@dataclass(frozen=True)
class DJKM:
    b: Fraction
    c: Fraction


@dataclass(frozen=True)
class ThreePoint:
    pass


@dataclass(frozen=True)
class FourPoint:
    b: Fraction | None = None
    a: Fraction | None = None

    def resolved_b(self) -> Fraction:
        if (self.a is None) == (self.b is None):
            raise BadParameter("FourPoint takes exactly one of b or a")
        if self.a is not None:
            a = to_q(self.a)
            if a in (0, 1):
                raise BadParameter("a must avoid {0, 1}")
            return (a + 1) / (a - 1)
        return to_q(self.b)


PresetId = Elliptic | DJKM | ThreePoint | FourPoint


def preset_curve(p: PresetId) -> CurveSpec:
    try:
        if isinstance(p, Elliptic):
            b = to_q(p.b)
            return make_curve(2, [0, 1, -2 * b, 1])
        if isinstance(p, DJKM):
            b, c = to_q(p.b), to_q(p.c)
            if b in (c, -c):
                raise BadParameter("DJKM needs b not in {-c, c}")
            return make_curve(2, [b * b * c * c, 0, -(b * b + c * c), 0, 1])
        if isinstance(p, ThreePoint):
            return make_curve(2, [0, 4, 1])
        if isinstance(p, FourPoint):
            b = p.resolved_b()
            if b in (1, -1):
                raise BadParameter("FourPoint needs b != +-1")
            return make_curve(2, [1, -2 * b, 1])
    except CurveError as exc:
        raise BadParameter(f"{p}: {exc}") from exc
    raise TypeError(f"unknown preset {p!r}")


# ---------------------------------------------------------------------------
# polynomial families

@dataclass(frozen=True)
class Pollaczek:
    lam: Fraction
    alpha: Fraction
    beta: Fraction
    gamma: Fraction


@dataclass(frozen=True)
class Gegenbauer:
    lam: Fraction


@dataclass(frozen=True)
class PolySeqSpec:
    family: Pollaczek | Gegenbauer
    initials: tuple[QPoly, ...] = ()


# parameters quoted for the elliptic transfer coefficients
ELLIPTIC_POLLACZEK = Pollaczek(Fraction(-1, 2), Fraction(0), Fraction(-1), Fraction(1, 2))
P_SEQ = PolySeqSpec(ELLIPTIC_POLLACZEK, (QPoly.const(0), QPoly.const(1)))
Q_SEQ = PolySeqSpec(ELLIPTIC_POLLACZEK, (QPoly.const(1), QPoly.const(0)))


def poly_seq(spec: PolySeqSpec, k_max: int) -> list[QPoly]:
    """P_0..P_{k_max} from the family's three-term recursion."""
    fam = spec.family
    b = QPoly.x()
    if isinstance(fam, Gegenbauer):
        lam = to_q(fam.lam)
        seq = list(spec.initials) or [QPoly.const(1), b * (2 * lam)]
        for k in range(len(seq), k_max + 1):
            # k C_k = 2 (k + lam - 1) b C_{k-1} - (k + 2 lam - 2) C_{k-2}
            seq.append((b * (2 * (k + lam - 1)) * seq[k - 1] - seq[k - 2] * (k + 2 * lam - 2)) * Fraction(1, k))
        return seq[:k_max + 1]
    lam, al, be, ga = (to_q(x) for x in (fam.lam, fam.alpha, fam.beta, fam.gamma))
    if len(spec.initials) < 2:
        raise BadParameter("Pollaczek sequences need two initial polynomials")
    seq = list(spec.initials)
    for k in range(2, k_max + 1):
        den = k + ga
        if den == 0:
            raise ZeroDenominator(f"k + gamma = 0 at k = {k}")
        lin = b * (2 * (k + lam + al + ga - 1)) + 2 * be
        seq.append((lin * seq[k - 1] - seq[k - 2] * (k + 2 * lam + ga - 2)) * (1 / den))
    return seq[:k_max + 1]


def gegenbauer_series(lam, n: int) -> list[QPoly]:
    """Coefficients of z^0..z^n in (1 - 2bz + z^2)^(-lam), by binomial expansion.

    Independent of the recursion: sum_r binom(-lam, r) X^r with X = z^2 - 2bz,
    truncated at z^n, with series coefficients kept as polynomials in b.
    """
    alpha = -to_q(lam)
    b = QPoly.x()
    X = [QPoly(), b * -2, QPoly.const(1)]  # z-coefficients of X
    out = [QPoly() for _ in range(n + 1)]
    power = [QPoly.const(1)] + [QPoly() for _ in range(n)]  # X^0
    binom = Fraction(1)
    for r in range(n + 1):
        for k in range(n + 1):
            if power[k]:
                out[k] = out[k] + power[k] * binom
        # X^(r+1), truncated
        nxt = [QPoly() for _ in range(n + 1)]
        for k, pk in enumerate(power):
            if not pk:
                continue
            for e, xe in enumerate(X):
                if xe and k + e <= n:
                    nxt[k + e] = nxt[k + e] + pk * xe
        power = nxt
        binom = binom * (alpha - r) / (r + 1)
    return out


def gegenbauer_check(lam, b_values, k_max: int) -> CheckReport:
    rep = CheckReport(f"gegenbauer lam={q_str(to_q(lam))} recursion vs series, k <= {k_max}")
    rec = poly_seq(PolySeqSpec(Gegenbauer(to_q(lam))), k_max)
    ser = gegenbauer_series(lam, k_max)
    for k in range(k_max + 1):
        if rec[k] != ser[k]:
            rep.fail(f"k={k}: polynomials differ: {rec[k]} vs {ser[k]}")
        for b in b_values:
            rep.checked += 1
            if rec[k](b) != ser[k](b):
                rep.fail(f"k={k} b={b}")
    return rep


def qk_polynomial(k: int) -> QPoly:
    """Q_k(b) = -P_(k+2)(b) / (b^2 - 1) with P the lam = -1/2 Gegenbauer family."""
    if k < 0:
        raise BadParameter("k must be >= 0")
    P = poly_seq(PolySeqSpec(Gegenbauer(Fraction(-1, 2))), k + 2)[k + 2]
    q, r = P.divmod(QPoly([-1, 0, 1]))
    if r:
        raise DivisibilityFailure(f"P_{k + 2} leaves remainder {r} mod b^2 - 1")
    return -q


def qk_fourpoint(k: int, b) -> Fraction:
    b = to_q(b)
    if b in (1, -1):
        raise BadParameter("b must not be +-1")
    return qk_polynomial(k)(b)


def poly_table_csv(polys: list[QPoly], name: str = "P") -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", name, "coefficients_ascending"])
    for k, p in enumerate(polys):
        w.writerow([k, str(p), ";".join(q_str(x) for x in p.c)])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# elliptic transfer coefficients

def _elliptic_class(k: int, c: CurveSpec) -> DiffClass:
    return reduce_mod_dR(Differential.dt(RingElement.monomial(k, 1)), c)


def engine_transfer(k: int, c: CurveSpec) -> tuple[Fraction, Fraction]:
    """(p, q) with class(t^(k-2) u dt) = p omega_+ + q omega_-."""
    x = _elliptic_class(k - 2, c)
    return x.get(OMEGA_PLUS), x.get(OMEGA_MINUS)


def pollaczek_transfer_check(b_samples, k_range) -> CheckReport:
    """Compare engine reductions on the elliptic ring with the quoted Pollaczek data.

    Two readings of the defining identity are tabulated: ``literal`` pairs
    p_k with class(t^(k-1) u dt), ``omega_plus`` pairs it with omega_+.  The
    report also fits beta from k = 2 and tests whether the engine's
    coefficients obey the recursion with that beta for every k.
    """
    ks = list(k_range)
    k_max = max(ks) if ks else 0
    p_seq = poly_seq(P_SEQ, max(k_max, 1))
    q_seq = poly_seq(Q_SEQ, max(k_max, 1))
    rep = CheckReport("pollaczek transfer", diagnostic=True)
    rows = []
    first = {"literal": None, "omega_plus": None}
    for b in (to_q(x) for x in b_samples):
        c = preset_curve(Elliptic(b))
        for k in ks:
            pk, qk = p_seq[k](b), q_seq[k](b)
            x = _elliptic_class(k - 2, c)
            lit = _elliptic_class(k - 1, c).scale(pk) + DiffClass({OMEGA_MINUS: qk})
            opl = DiffClass({OMEGA_PLUS: pk, OMEGA_MINUS: qk})
            ep, eq = engine_transfer(k, c)
            st = {"literal": x == lit, "omega_plus": x == opl}
            for key, ok in st.items():
                if not ok and (first[key] is None or k < first[key]):
                    first[key] = k
            rep.checked += 1
            if not st["omega_plus"]:
                rep.fail(f"b={q_str(b)} k={k}: engine ({q_str(ep)}, {q_str(eq)}) vs published ({q_str(pk)}, {q_str(qk)})")
            rows.append({"b": q_str(b), "k": k, "published_p": q_str(pk), "published_q": q_str(qk),
                         "engine_p": q_str(ep), "engine_q": q_str(eq),
                         "literal": "match" if st["literal"] else "MISMATCH",
                         "omega_plus": "match" if st["omega_plus"] else "MISMATCH"})
    fitted = fit_beta(b_samples, k_max)
    rep.info = {"first_divergence": first, "fitted_beta": fitted, "rows": rows}
    return rep


def fit_beta(b_samples, k_max: int) -> str | None:
    """beta making the engine's (p_k, q_k) satisfy the recursion for all k <= k_max, or None."""
    fam = ELLIPTIC_POLLACZEK
    lam, al, ga = fam.lam, fam.alpha, fam.gamma
    betas = set()
    for b in (to_q(x) for x in b_samples):
        c = preset_curve(Elliptic(b))
        pq = [engine_transfer(k, c) for k in range(k_max + 1)]
        if k_max < 2:
            return None
        # k = 2 with p_1 = 1, p_0 = 0 pins beta
        beta = (2 + ga) * pq[2][0] / 2 - (1 + lam + al + ga) * b
        for k in range(2, k_max + 1):
            for s in (0, 1):
                lhs = (k + ga) * pq[k][s]
                rhs = 2 * ((k + lam + al + ga - 1) * b + beta) * pq[k - 1][s] - (k + 2 * lam + ga - 2) * pq[k - 2][s]
                if lhs != rhs:
                    return None
        betas.add(beta)
    return q_str(betas.pop()) if len(betas) == 1 else None


def render_transfer(rep: CheckReport) -> str:
    rows = rep.info["rows"]
    keys = ["b", "k", "published_p", "published_q", "engine_p", "engine_q", "literal", "omega_plus"]
    return render_table(keys, [[str(r[k]) for k in keys] for r in rows])


# ---------------------------------------------------------------------------
# dimension diagnostics

@dataclass
class DimensionReport:
    curve: CurveSpec
    certified: int
    certificate_passed: bool
    theorem_formula: int
    genus: Fraction
    punctures: int
    genus_formula: Fraction
    punctures_swapped: int
    genus_formula_swapped: Fraction
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "curve": {"m": self.curve.m, "p": self.curve.p_string()},
            "certified_dimension": self.certified,
            "certificate": "PASS" if self.certificate_passed else "FAIL",
            "theorem_formula": self.theorem_formula,
            "genus": q_str(self.genus), "punctures": self.punctures,
            "two_g_plus_n_minus_1": q_str(self.genus_formula),
            "punctures_cases_swapped": self.punctures_swapped,
            "two_g_plus_n_minus_1_swapped": q_str(self.genus_formula_swapped),
            "flags": list(self.flags),
        }

    def to_text(self) -> str:
        j = self.to_json()
        lines = [f"curve: u^{self.curve.m} = {self.curve.p_string()}"]
        for key in ("certified_dimension", "certificate", "theorem_formula", "genus", "punctures",
                    "two_g_plus_n_minus_1", "punctures_cases_swapped", "two_g_plus_n_minus_1_swapped"):
            lines.append(f"  {key}: {j[key]}")
        lines.extend(f"  FLAG: {f}" for f in self.flags)
        return "\n".join(lines)


def dimension_report(c: CurveSpec) -> DimensionReport:
    cert = independence_certificate(c)
    m, d = c.m, c.d
    g_ = math.gcd(m, d)
    thm = m * (d - 1) + 1 - (m - 1 if c.a0_zero else 0)
    genus = Fraction(m * (d - 1) - d - g_, 2) + 1
    n = g_ + (m if c.a0_zero else 1)
    n_swapped = g_ + (1 if c.a0_zero else m)
    rep = DimensionReport(c, len(basis_of(c)), cert.passed, thm, genus, n,
                          2 * genus + n - 1, n_swapped, 2 * genus + n_swapped - 1)
    if thm != rep.certified:
        rep.flags.append(f"theorem formula gives {thm}, certified {rep.certified}")
    if rep.genus_formula != rep.certified:
        rep.flags.append(f"2g+n-1 gives {q_str(rep.genus_formula)}, certified {rep.certified}")
    if not cert.passed:
        rep.flags.append("independence certificate FAILED")
    return rep

"""The universal 2-cocycle and the extended bracket on (g (x) R) + Omega/dR."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .differentials import OMEGA0, BasisLabel, DiffClass, reduce_mod_dR
from .errors import DimensionMismatch
from .lie import LieData
from .randgen import random_element
from .report import CheckReport, render_table
from .ring import (CurveSpec, Differential, RingElement, f_dg, q_str, ring_mul,
                   u_power)


def cocycle_gamma(f: RingElement, g: RingElement, c: CurveSpec) -> DiffClass:
    """gamma(f, g) = class of f dg in Omega^1_R/dR."""
    return reduce_mod_dR(f_dg(f, g, c), c)


@dataclass(frozen=True)
class LoopElement:
    """sum_i x_i (x) f_i, keyed by Lie basis index."""

    parts: tuple = ()

    @classmethod
    def of(cls, parts: Mapping[int, RingElement]) -> "LoopElement":
        return cls(tuple(sorted((i, f) for i, f in parts.items() if f)))

    @classmethod
    def basis(cls, i: int, f: RingElement) -> "LoopElement":
        return cls.of({i: f})

    def as_dict(self) -> dict[int, RingElement]:
        return dict(self.parts)

    def __add__(self, other: "LoopElement") -> "LoopElement":
        acc = self.as_dict()
        for i, f in other.parts:
            acc[i] = acc[i] + f if i in acc else f
        return LoopElement.of(acc)

    def scale(self, s) -> "LoopElement":
        return LoopElement.of({i: f.scale(s) for i, f in self.parts})


@dataclass(frozen=True)
class ExtElement:
    loop: LoopElement = field(default_factory=LoopElement)
    central: DiffClass = field(default_factory=DiffClass)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return ExtElement(self.loop + other.loop, self.central + other.central)

    def is_zero(self) -> bool:
        return not self.loop.parts and not self.central


def bracket_loop(x: LoopElement, y: LoopElement, lie: LieData, c: CurveSpec) -> LoopElement:
    acc: dict[int, RingElement] = {}
    for i, f in x.parts:
        for j, g in y.parts:
            fg = None
            for k, ck in lie.c[i][j]:
                if fg is None:
                    fg = ring_mul(f, g, c)
                term = fg.scale(ck)
                acc[k] = acc[k] + term if k in acc else term
    return LoopElement.of(acc)


def bracket_ext(x: ExtElement, y: ExtElement, lie: LieData, c: CurveSpec,
                gamma=None) -> ExtElement:
    """[x (x) f, y (x) g] = [x, y] (x) fg + (x, y) gamma(f, g); central parts drop out."""
    gamma = gamma or cocycle_gamma
    for i, _ in x.loop.parts + y.loop.parts:
        if not 0 <= i < lie.dim:
            raise DimensionMismatch(f"Lie index {i} outside dimension {lie.dim}")
    central = DiffClass()
    for i, f in x.loop.parts:
        for j, g in y.loop.parts:
            b = lie.B[i][j]
            if b:
                central = central + gamma(f, g, c).scale(b)
    return ExtElement(bracket_loop(x.loop, y.loop, lie, c), central)


# ---------------------------------------------------------------------------
# checks

def _random_ext(rng: random.Random, lie: LieData, m: int) -> ExtElement:
    idx = rng.sample(range(lie.dim), rng.randint(1, min(2, lie.dim)))
    return ExtElement(LoopElement.of({i: random_element(rng, m, max_terms=2) for i in idx}))


def check_two_cocycle(c: CurveSpec, samples: int, seed: int, lie: LieData | None = None,
                      jacobi_samples: int | None = None) -> CheckReport:
    """Antisymmetry and the cyclic identity on random triples, plus Jacobi."""
    rng = random.Random(seed)
    rep = CheckReport(f"cocycle axioms on {c}")
    m = c.m
    for _ in range(samples):
        f, g, h = (random_element(rng, m) for _ in range(3))
        if cocycle_gamma(f, g, c) + cocycle_gamma(g, f, c):
            rep.fail(f"antisymmetry: f={f}, g={g}")
        cyc = (cocycle_gamma(ring_mul(f, g, c), h, c)
               + cocycle_gamma(ring_mul(g, h, c), f, c)
               + cocycle_gamma(ring_mul(h, f, c), g, c))
        if cyc:
            rep.fail(f"cyclic: f={f}, g={g}, h={h} -> {cyc}")
        rep.checked += 2
    if lie is not None:
        n = samples if jacobi_samples is None else jacobi_samples
        for _ in range(n):
            x, y, z = (_random_ext(rng, lie, m) for _ in range(3))
            if not jacobi_defect(x, y, z, lie, c).is_zero():
                rep.fail(f"Jacobi: {x}, {y}, {z}")
            rep.checked += 1
    return rep


def jacobi_defect(x: ExtElement, y: ExtElement, z: ExtElement, lie: LieData, c: CurveSpec) -> ExtElement:
    br = lambda a, b: bracket_ext(a, b, lie, c)
    return br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y)


def prop_uu_check(c: CurveSpec, rng_: int) -> CheckReport:
    """class(t^i u^l d(t^j u^l)) == ((j-i)/2) class(t^(i+j-1) u^(2l) dt)."""
    rep = CheckReport(f"prop_uu on {c}, |i|,|j| <= {rng_}")
    for l in range(1, c.m):
        u2l = u_power(2 * l, c)
        for i in range(-rng_, rng_ + 1):
            f = RingElement.monomial(i, l)
            for j in range(-rng_, rng_ + 1):
                lhs = cocycle_gamma(f, RingElement.monomial(j, l), c)
                rhs_form = Differential.dt(u2l.shift(i + j - 1))
                rhs = reduce_mod_dR(rhs_form, c).scale(Fraction(j - i, 2))
                rep.checked += 1
                if lhs != rhs:
                    rep.fail(f"i={i} j={j} l={l}: lhs={lhs} rhs={rhs}")
    return rep


def affine_delta_check(c: CurveSpec, rng_: int) -> CheckReport:
    """class(t^i d(t^j)) == j delta_{i+j,0} omega0."""
    rep = CheckReport(f"t^i d(t^j) on {c}, |i|,|j| <= {rng_}")
    for i in range(-rng_, rng_ + 1):
        for j in range(-rng_, rng_ + 1):
            got = cocycle_gamma(RingElement.monomial(i), RingElement.monomial(j), c)
            want = DiffClass({OMEGA0: j} if i + j == 0 else {})
            rep.checked += 1
            if got != want:
                rep.fail(f"i={i} j={j}: {got} != {want}")
    return rep


@dataclass
class PropQRow:
    i: int
    j: int
    l: int
    lhs: DiffClass
    stated: DiffClass | None
    proof_line: DiffClass | None
    one_step: DiffClass | None

    @property
    def singular(self) -> bool:
        return self.stated is None

    def status(self, which: str) -> str:
        val = getattr(self, which)
        if val is None:
            return "SINGULAR"
        return "match" if val == self.lhs else "MISMATCH"


def prop_q_rows(c: CurveSpec, rng_: int) -> list[PropQRow]:
    """Evaluate the t^i u^l d(t^j) closed form three ways against direct reduction.

    ``stated`` is the closed form with Q_{k+d+i+j-3, l}; ``proof_line`` keeps
    the factor (k + m(k+i+j-d)) that appears in its derivation; ``one_step``
    is a single step of the grade-l relation solved for t^(i+j-1), with
    exponents k+i+j-d-1 and the general-l coefficients.
    """
    m, d = c.m, c.d
    Q = lambda k, l: reduce_mod_dR(Differential.dt(RingElement.monomial(k, l)), c)
    rows = []
    for l in range(1, m):
        for i in range(-rng_, rng_ + 1):
            for j in range(-rng_, rng_ + 1):
                lhs = reduce_mod_dR(Differential.dt(RingElement.monomial(i + j - 1, l, j)), c)
                den = d + m * (i + j)
                stated = proof = None
                if den:
                    pref = Fraction(-j, den)
                    stated = DiffClass()
                    proof = DiffClass()
                    for k in range(d):
                        ak = c.coeffs[k]
                        if ak:
                            q = Q(k + d + i + j - 3, l)
                            stated = stated + q.scale(pref * ak)
                            proof = proof + q.scale(pref * ak * (k + m * (k + i + j - d)))
                jp = i + j - d
                den1 = (m + l) * d + m * jp
                one = None
                if den1:
                    one = DiffClass()
                    for k in range(d):
                        ak = c.coeffs[k]
                        if ak:
                            one = one + Q(k + jp - 1, l).scale(Fraction(-j, den1) * ak * ((m + l) * k + m * jp))
                rows.append(PropQRow(i, j, l, lhs, stated, proof, one))
    return rows


def prop_q_check(c: CurveSpec, rng_: int) -> CheckReport:
    """Diagnostic table for the t^i u^l d(t^j) proposition; never fails."""
    rows = prop_q_rows(c, rng_)
    rep = CheckReport(f"prop_q on {c}, |i|,|j| <= {rng_}", diagnostic=True)
    counts: dict[str, dict[str, int]] = {}
    for r in rows:
        rep.checked += 1
        for which in ("stated", "proof_line", "one_step"):
            st = r.status(which)
            counts.setdefault(which, {}).setdefault(st, 0)
            counts[which][st] += 1
        if r.status("stated") == "MISMATCH":
            rep.fail(f"i={r.i} j={r.j} l={r.l}")
    rep.info = {"counts": counts, "rows": [
        {"i": r.i, "j": r.j, "l": r.l, "lhs": r.lhs.to_json(),
         "stated": r.status("stated"), "proof_line": r.status("proof_line"),
         "one_step": r.status("one_step")} for r in rows]}
    return rep


def render_prop_q(rows: list[PropQRow]) -> str:
    body = [[str(r.i), str(r.j), str(r.l), str(r.lhs), r.status("stated"),
             r.status("proof_line"), r.status("one_step")] for r in rows]
    return render_table(["i", "j", "l", "lhs", "stated", "proof_line", "one_step"], body)


# ---------------------------------------------------------------------------
# commutation tables

@dataclass
class TableRow:
    x: int
    f: tuple[int, int]
    y: int
    g: tuple[int, int]
    loop: LoopElement
    central: DiffClass

    def to_json(self, lie: LieData) -> dict:
        return {
            "xi": lie.names[self.x], "fi": str(RingElement.monomial(*self.f)),
            "yj": lie.names[self.y], "gj": str(RingElement.monomial(*self.g)),
            "loop_part": {lie.names[k]: str(v) for k, v in self.loop.parts},
            "central": self.central.to_json(),
        }


def commutation_table(lie: LieData, c: CurveSpec, degree_range: Iterable[int],
                      grades: Iterable[int]) -> list[TableRow]:
    """All [x (x) t^i u^a, y (x) t^j u^b] over basis x, y and the given indices."""
    degs = list(degree_range)
    grs = sorted(set(grades))
    cache: dict = {}
    rows = []
    for a in grs:
        for b in grs:
            for i in degs:
                for j in degs:
                    f = RingElement.monomial(i, a)
                    g = RingElement.monomial(j, b)
                    key = (i, a, j, b)
                    if key not in cache:
                        cache[key] = (cocycle_gamma(f, g, c), ring_mul(f, g, c))
                    gam, fg = cache[key]
                    for x in range(lie.dim):
                        for y in range(lie.dim):
                            loop = {k: fg.scale(ck) for k, ck in lie.c[x][y]}
                            rows.append(TableRow(x, (i, a), y, (j, b), LoopElement.of(loop),
                                                 gam.scale(lie.B[x][y])))
    return rows


def affine_subtable_mismatches(rows: list[TableRow], lie: LieData) -> list[TableRow]:
    """Grade-0 rows that differ from [x t^i, y t^j] = [x,y] t^(i+j) + (x,y) j delta omega0."""
    bad = []
    for r in rows:
        if r.f[1] or r.g[1]:
            continue
        i, j = r.f[0], r.g[0]
        want_loop = LoopElement.of({k: RingElement.monomial(i + j, 0, ck) for k, ck in lie.c[r.x][r.y]})
        want_c = DiffClass({OMEGA0: j * lie.B[r.x][r.y]} if i + j == 0 else {})
        if r.loop != want_loop or r.central != want_c:
            bad.append(r)
    return bad


def render_table_text(rows: list[TableRow], lie: LieData) -> str:
    body = []
    for r in rows:
        loop = " + ".join(f"{lie.names[k]}*({v})" for k, v in r.loop.parts) or "0"
        central = ", ".join(f"{lab}: {q_str(v)}" for lab, v in r.central.items()) or "0"
        body.append([lie.names[r.x], str(RingElement.monomial(*r.f)),
                     lie.names[r.y], str(RingElement.monomial(*r.g)), loop, central])
    return render_table(["x", "f", "y", "g", "loop", "central"], body)

"""Omega^1_R / dR: basis, fast reduction, and the window oracle.

Two independent engines compute the class of a differential:

* :func:`reduce_mod_dR` eliminates ``du`` and then runs, on each u-grade l,
  the banded relation

      sum_k a_k ((m+l) k + m j) t^(k+j-1) u^l dt  ==  0   (mod dR)

  downward from large exponents and upward from small ones until only the
  basis window is left.
* :func:`oracle_reduce` never uses that relation.  It builds the raw
  generators of dR (all d(t^j u^l)) and of the Kaehler relation
  (t^i u^a (m u^(m-1) du - p' dt)) inside a finite exponent window and
  reduces the query by sparse Gaussian elimination with the basis columns
  ordered last.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import WindowTooSmall
from .linalg import Echelon
from .ring import CurveSpec, Differential, _accumulate, q_str, to_q


class BasisLabel(NamedTuple):
    """Class of t^k u^l dt.  ``(k, l) = (-1, 0)`` is omega_0."""

    k: int
    l: int

    @property
    def is_omega0(self) -> bool:
        return self.l == 0 and self.k == -1

    @property
    def grade(self) -> int:
        return self.l

    def __str__(self):
        return "omega0" if self.is_omega0 else f"W({self.k},{self.l})"

    def monomial_str(self) -> str:
        t = f"t^{self.k}"
        if self.l == 0:
            return f"{t} dt"
        return f"{t}*u dt" if self.l == 1 else f"{t}*u^{self.l} dt"


OMEGA0 = BasisLabel(-1, 0)


def label_sort_key(lab: BasisLabel):
    return (lab.l, -lab.k)


class DiffClass:
    """Coordinates of a class in Omega^1_R/dR over the basis labels."""

    __slots__ = ("_c",)

    def __init__(self, coords: Mapping[BasisLabel, object] | None = None):
        self._c = {BasisLabel(*k): to_q(v) for k, v in (coords or {}).items() if v != 0}

    @property
    def coords(self) -> dict[BasisLabel, Fraction]:
        return dict(self._c)

    def get(self, lab: BasisLabel) -> Fraction:
        return self._c.get(lab, Fraction(0))

    def items(self):
        return sorted(self._c.items(), key=lambda kv: label_sort_key(kv[0]))

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, DiffClass):
            return self._c == other._c
        if isinstance(other, dict):
            return self == DiffClass(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "DiffClass") -> "DiffClass":
        acc = dict(self._c)
        for k, v in other._c.items():
            _accumulate(acc, k, v)
        return DiffClass(acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffClass":
        c = to_q(c)
        return DiffClass({k: c * v for k, v in self._c.items()})

    def grades(self) -> set[int]:
        return {k.l for k in self._c}

    def to_json(self) -> dict:
        w = [{"k": lab.k, "l": lab.l, "c": q_str(v)} for lab, v in self.items() if not lab.is_omega0]
        return {"omega0": q_str(self.get(OMEGA0)), "w": w}

    @classmethod
    def from_json(cls, obj: dict) -> "DiffClass":
        coords = {OMEGA0: Fraction(obj.get("omega0", "0"))}
        for row in obj.get("w", []):
            coords[BasisLabel(int(row["k"]), int(row["l"]))] = Fraction(row["c"])
        return cls(coords)

    def __str__(self):
        if not self._c:
            return "{}"
        return "{" + ", ".join(f"{lab}: {q_str(v)}" for lab, v in self.items()) + "}"

    __repr__ = __str__


@dataclass(frozen=True)
class Window:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def contains(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def doubled(self) -> "Window":
        pad = (self.hi - self.lo + 1) // 2 + 1
        return Window(self.lo - pad, self.hi + pad)


def basis_exponent_range(c: CurveSpec) -> tuple[int, int]:
    """t-exponents k of the W(k, l) labels."""
    return (-(c.d - 1) if c.a0_zero else -c.d), -1


def basis_of(c: CurveSpec) -> list[BasisLabel]:
    lo, hi = basis_exponent_range(c)
    labels = [OMEGA0]
    for l in range(1, c.m):
        labels.extend(BasisLabel(k, l) for k in range(hi, lo - 1, -1))
    return labels


def expected_dimension(c: CurveSpec) -> int:
    return 1 + (c.d - 1 if c.a0_zero else c.d) * (c.m - 1)


# ---------------------------------------------------------------------------
# fast path

def eliminate_du(w: Differential, c: CurveSpec) -> Differential:
    """Rewrite every du term as dt terms, modulo dR.

    t^i u^(m-1) du = (1/m) t^i p'(t) dt holds in Omega^1_R exactly; for
    b <= m-2, d(t^i u^(b+1)) gives t^i u^b du == -(i/(b+1)) t^(i-1) u^(b+1) dt.
    """
    m = c.m
    dt = dict(w.dt_terms)
    for (i, b), v in w.du_terms.items():
        if b == m - 1:
            for k in range(1, c.d + 1):
                if c.coeffs[k]:
                    _accumulate(dt, (i + k - 1, 0), v * k * c.coeffs[k] / m)
        elif i:
            _accumulate(dt, (i - 1, b + 1), -v * Fraction(i, b + 1))
    return Differential(dt, None)


def recurrence_coefficients(c: CurveSpec, l: int, j: int) -> dict[int, Fraction]:
    """Exponent -> coefficient of the grade-l relation indexed by j.

    Obtained by eliminating du from t^j u^l (m u^(m-1) du - p' dt) with the
    dR rule.
    """
    m = c.m
    out: dict[int, Fraction] = {}
    for k, ak in enumerate(c.coeffs):
        if ak:
            coef = ak * ((m + l) * k + m * j)
            if coef:
                out[k + j - 1] = coef
    return out


def _reduce_stream(vec: dict[int, Fraction], c: CurveSpec, l: int):
    """Push a grade-l dt stream into the basis window in place.

    Returns None on success, or the exponent whose pivot vanished.
    """
    m, d = c.m, c.d
    lo, hi = basis_exponent_range(c)
    while vec:
        top = max(vec)
        if top > hi:
            j = top - d + 1
        else:
            bot = min(vec)
            if bot >= lo:
                return None
            j = bot + 1 if not c.a0_zero else bot
        rel = recurrence_coefficients(c, l, j)
        pivot_exp = top if top > hi else bot
        pivot = rel.get(pivot_exp, 0)
        if pivot == 0:
            return pivot_exp
        f = vec[pivot_exp] / pivot
        for e, coef in rel.items():
            _accumulate(vec, e, -f * coef)
    return None


def reduce_mod_dR(w: Differential, c: CurveSpec) -> DiffClass:
    """Coordinates of the class of w over :func:`basis_of`."""
    v = eliminate_du(w, c)
    streams: dict[int, dict[int, Fraction]] = {}
    for (i, a), coef in v.dt_terms.items():
        streams.setdefault(a, {})[i] = coef
    out: dict[BasisLabel, Fraction] = {}
    for l, vec in streams.items():
        if l == 0:
            if vec.get(-1):
                out[OMEGA0] = vec[-1]
            continue
        stuck = _reduce_stream(vec, c, l)
        if stuck is not None:
            # a vanishing pivot; hand the remainder of this stream to the oracle
            rest = Differential({(i, l): x for i, x in vec.items()}, None)
            for lab, x in oracle_reduce(rest, c).items():
                out[lab] = out.get(lab, 0) + x
            continue
        for i, x in vec.items():
            out[BasisLabel(i, l)] = x
    return DiffClass(out)


def reduce_class(w: DiffClass, c: CurveSpec) -> DiffClass:
    """Re-reduce a class given by coordinates (identity on reduced input)."""
    return reduce_mod_dR(class_representative(w), c)


def class_representative(cls: DiffClass) -> Differential:
    return Differential({(lab.k, lab.l): v for lab, v in cls.items()}, None)


# ---------------------------------------------------------------------------
# oracle

_DU, _DT = 0, 1


def _grade_columns(w: Differential, m: int) -> dict[int, dict[tuple[int, int], Fraction]]:
    out: dict[int, dict] = {}
    for (i, a), v in w.dt_terms.items():
        out.setdefault(a % m, {})[(_DT, i)] = v
    for (i, b), v in w.du_terms.items():
        out.setdefault((b + 1) % m, {})[(_DU, i)] = v
    return out


def grade_relations(c: CurveSpec, g: int, lo: int, hi: int) -> list[dict]:
    """Raw generators of dR and of the Kaehler relation in grade g.

    Columns are ``(_DT, i)`` for t^i u^g dt and ``(_DU, i)`` for
    t^i u^((g-1) mod m) du.  Only relations whose support lies in
    ``[lo, hi]`` are returned.
    """
    m, d = c.m, c.d
    rels = []
    inside = lambda row: all(lo <= i <= hi for (_, i) in row)
    for j in range(lo, hi + 2):
        row = {}
        if j:
            row[(_DT, j - 1)] = Fraction(j)
        if g:
            row[(_DU, j)] = Fraction(g)
        if row and inside(row):
            rels.append(row)
    for i in range(lo - d, hi + 2):
        row: dict = {}
        if g == 0:
            # t^i (m u^(m-1) du - p' dt)
            row[(_DU, i)] = Fraction(m)
        else:
            # t^i u^g (m u^(m-1) du - p' dt) = m t^i p u^(g-1) du - t^i u^g p' dt
            for k, ak in enumerate(c.coeffs):
                if ak:
                    row[(_DU, i + k)] = m * ak
        for k in range(1, d + 1):
            if c.coeffs[k]:
                key = (_DT, i + k - 1)
                row[key] = row.get(key, 0) - k * c.coeffs[k]
        row = {kk: v for kk, v in row.items() if v}
        if row and inside(row):
            rels.append(row)
    return rels


def _basis_columns(c: CurveSpec, g: int) -> set:
    if g == 0:
        return {(_DT, -1)}
    lo, hi = basis_exponent_range(c)
    return {(_DT, k) for k in range(lo, hi + 1)}


def _priority_for(c: CurveSpec, g: int):
    return _priority(_basis_columns(c, g))


def _priority(basis: set):
    # an empty basis (p = t, grades >= 1) measures distance from t^-1
    blo = min((i for _, i in basis), default=-1)
    bhi = max((i for _, i in basis), default=-1)

    def prio(col):
        kind, i = col
        if col in basis:
            return (0, 0, -i)
        dist = blo - i if i < blo else i - bhi
        # du first, then far exponents, then lowest exponent
        return (1 + (kind == _DU), dist, -i)

    return prio


@functools.lru_cache(maxsize=512)
def _grade_echelon(c: CurveSpec, g: int, lo: int, hi: int) -> Echelon:
    ech = Echelon(_priority_for(c, g))
    for row in grade_relations(c, g, lo, hi):
        ech.insert(row)
    return ech


def default_window(w: Differential, c: CurveSpec) -> Window:
    """Query support padded by d+2, joined with the basis range, snapped to multiples of 8."""
    blo, _ = basis_exponent_range(c)
    sup = w.t_support() or [-1]
    lo = min(min(sup) - (c.d + 2), blo - (c.d + 2))
    hi = max(max(sup) + (c.d + 2), c.d + 1)
    return Window((lo // 8) * 8, -((-hi) // 8) * 8)


def oracle_reduce(w: Differential, c: CurveSpec, win: Window | None = None,
                  max_retries: int = 10) -> DiffClass:
    """Class of w computed by elimination in a finite window.

    With an explicit window a single attempt is made and
    :class:`WindowTooSmall` propagates.  Otherwise the default window is
    doubled on failure, at most ``max_retries`` times.
    """
    if win is not None:
        return _oracle_once(w, c, win)
    win = default_window(w, c)
    for _ in range(max_retries + 1):
        try:
            return _oracle_once(w, c, win)
        except WindowTooSmall:
            win = win.doubled()
    raise WindowTooSmall(f"no window up to [{win.lo}, {win.hi}] suffices")


def _oracle_once(w: Differential, c: CurveSpec, win: Window) -> DiffClass:
    sup = w.t_support()
    if sup and (sup[0] < win.lo or sup[-1] > win.hi):
        raise WindowTooSmall(f"query support [{sup[0]}, {sup[-1]}] leaves window [{win.lo}, {win.hi}]")
    out: dict[BasisLabel, Fraction] = {}
    for g, vec in sorted(_grade_columns(w, c.m).items()):
        ech = _grade_echelon(c, g, win.lo, win.hi)
        rem = ech.reduce(vec)
        basis = _basis_columns(c, g)
        stray = [col for col in rem if col not in basis]
        if stray:
            raise WindowTooSmall(f"grade {g}: {len(stray)} columns not eliminated in [{win.lo}, {win.hi}]")
        for (_, i), v in rem.items():
            out[BasisLabel(i, g)] = v
    return DiffClass(out)


# ---------------------------------------------------------------------------
# independence certificate

@dataclass
class GradeCertificate:
    grade: int
    window: Window
    multiplier_range: tuple[int, int] | None
    n_relations: int
    rank_relations: int
    rank_with_basis: int
    n_basis: int

    @property
    def passed(self) -> bool:
        return self.rank_with_basis == self.rank_relations + self.n_basis


@dataclass
class IndependenceReport:
    curve: CurveSpec
    dimension: int
    grades: list[GradeCertificate] = field(default_factory=list)
    counterexample: DiffClass | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None and all(g.passed for g in self.grades)

    def to_json(self) -> dict:
        return {
            "status": "PASS" if self.passed else "FAIL",
            "dimension": self.dimension,
            "grades": [
                {"grade": g.grade, "window": [g.window.lo, g.window.hi],
                 "multiplier_range": list(g.multiplier_range) if g.multiplier_range else None,
                 "relations": g.n_relations, "rank": g.rank_relations,
                 "rank_with_basis": g.rank_with_basis, "basis": g.n_basis}
                for g in self.grades
            ],
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }


def multiplier_range(c: CurveSpec, l: int, exponents: tuple[int, int] | None = None
                     ) -> tuple[int, int] | None:
    """Bound the Kaehler multiplier of any dependency among grade-l basis labels.

    Suppose sum_k c_k t^k u^l dt = d(alpha u^l) + beta t^0 u^l (m u^(m-1) du - p' dt)
    with Laurent polynomials alpha, beta.  Matching du parts forces
    l alpha = -m beta p, and then the dt parts read
    C = -(m/l) beta' p - ((m+l)/l) beta p'.  The top exponent T of beta
    contributes -(1/l)(m T + (m+l) d) t^(T+d-1), the bottom exponent B
    contributes -(a_k0/l)(m B + (m+l) k0) t^(B+k0-1) with k0 the lowest
    nonzero coefficient.  Unless those vanish they must land in the basis
    range, which pins T and B.  Returns ``None`` when beta must be zero.
    """
    m, d = c.m, c.d
    blo, bhi = exponents or basis_exponent_range(c)
    k0 = 1 if c.a0_zero else 0
    tops = [bhi - d + 1]
    # T with m T + (m+l) d == 0
    if ((m + l) * d) % m == 0:
        tops.append(-((m + l) * d) // m)
    bots = [blo - k0 + 1]
    if ((m + l) * k0) % m == 0:
        bots.append(-((m + l) * k0) // m)
    t_max, b_min = max(tops), min(bots)
    return (b_min, t_max) if b_min <= t_max else None


def independence_certificate(c: CurveSpec, margin: int = 3,
                             labels: list[BasisLabel] | None = None) -> IndependenceReport:
    """Certify that the basis labels are linearly independent modulo dR.

    For each grade the possible dependencies involve only relations with
    bounded support (see :func:`multiplier_range`; in grade 0 the du column
    forces the Kaehler multiplier to vanish).  All raw relations inside a
    window covering that bound, plus ``margin``, are ranked with and without
    the basis vectors.  ``labels`` replaces the basis, e.g. to confirm that
    an over-complete set is caught.
    """
    d = c.d
    labels = basis_of(c) if labels is None else list(labels)
    report = IndependenceReport(c, len(labels))
    dependency: dict[BasisLabel, Fraction] = {}
    for g in range(c.m):
        glabels = [lab for lab in labels if lab.l == g]
        if not glabels:
            continue
        blo = min(lab.k for lab in glabels)
        bhi = max(lab.k for lab in glabels)
        if g == 0:
            rng = None
            lo, hi = min(blo, -1), max(bhi + 1, 0)
        else:
            rng = multiplier_range(c, g, (blo, bhi))
            lo, hi = blo, bhi
            if rng is not None:
                lo, hi = min(lo, rng[0] - 1), max(hi, rng[1] + d)
        win = Window(lo - margin, hi + margin)
        rels = grade_relations(c, g, win.lo, win.hi)
        base_prio = _priority({(_DT, lab.k) for lab in glabels})
        tag = lambda col: (-1, 0, col[1]) if col[0] == "tag" else base_prio(col)
        ech = Echelon(tag)
        for row in rels:
            ech.insert(row)
        rank_rel = ech.rank
        for idx, lab in enumerate(glabels):
            r = ech.insert({(_DT, lab.k): Fraction(1), ("tag", idx): Fraction(1)})
            if r is not None and r[0] == "tag":
                row = ech._pivots[r]
                for col, v in row.items():
                    dependency[glabels[col[1]]] = v
                break
        rank_basis = sum(1 for col in ech.pivot_columns if col[0] != "tag")
        report.grades.append(GradeCertificate(g, win, rng, len(rels), rank_rel, rank_basis, len(glabels)))
    if dependency:
        report.counterexample = DiffClass(dependency)
    return report


def dimension(c: CurveSpec) -> int:
    """Certified dimension of Omega^1_R/dR; raises if the certificate fails."""
    rep = independence_certificate(c)
    if not rep.passed:
        raise AssertionError(f"independence certificate failed for {c}")
    return rep.dimension


def classes_equal(ws: Iterable[Differential], c: CurveSpec) -> bool:
    vals = [reduce_mod_dR(w, c) for w in ws]
    return all(v == vals[0] for v in vals)

"""Exact arithmetic in R = Q[t, 1/t, u] / (u^m - p(t)) and the derivation d.

Elements are sparse maps ``(t_exponent, u_grade) -> Fraction`` with the
u-grade kept in ``[0, m-1]``.  Differentials are pairs of such maps, one for
the ``dt`` terms and one for the ``du`` terms; the Kaehler relation
``m u^(m-1) du = p'(t) dt`` is never applied behind the caller's back (see
:func:`canonical_form`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BothA0A1Zero, DegreeZero, MTooSmall, NotMonic

Key = tuple[int, int]


def to_q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def q_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CurveSpec:
    """The pair (m, p) defining u^m = p(t); ``coeffs[i]`` is a_i."""

    m: int
    coeffs: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def a0_zero(self) -> bool:
        return self.coeffs[0] == 0

    def a(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.d else Fraction(0)

    def p_derivative(self) -> tuple[Fraction, ...]:
        return tuple(k * self.coeffs[k] for k in range(1, self.d + 1))

    def p_element(self) -> "RingElement":
        return RingElement({(k, 0): a for k, a in enumerate(self.coeffs) if a})

    def p_string(self) -> str:
        return str(self.p_element())

    def __str__(self):
        return f"u^{self.m} = {self.p_string()}"


def make_curve(m: int, coeffs: Iterable) -> CurveSpec:
    """Validate ``(m, [a_0, ..., a_d])`` and return a CurveSpec.

    Trailing zero coefficients are dropped before the degree is read off.
    """
    qs = [to_q(c) for c in coeffs]
    while qs and qs[-1] == 0:
        qs.pop()
    if not isinstance(m, int) or m < 2:
        raise MTooSmall(f"m must be an integer >= 2, got {m!r}")
    if len(qs) < 2:
        raise DegreeZero("p(t) must have degree d >= 1")
    if qs[-1] != 1:
        raise NotMonic(f"p(t) must be monic (a_d = 1), got leading coefficient {qs[-1]}")
    if qs[0] == 0 and qs[1] == 0:
        raise BothA0A1Zero("a_0 and a_1 may not both vanish (0 would be a multiple root)")
    return CurveSpec(m, tuple(qs))


def _clean(terms: Mapping) -> dict:
    return {k: to_q(v) for k, v in terms.items() if v != 0}


def _accumulate(acc: dict, key, value) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class RingElement:
    """Finitely supported sum of c * t^i * u^l; immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, object] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def monomial(cls, i: int, l: int = 0, c=1) -> "RingElement":
        return cls({(i, l): to_q(c)})

    @classmethod
    def constant(cls, c) -> "RingElement":
        return cls({(0, 0): to_q(c)})

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: by u-grade, then t-exponent."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def grades(self) -> set[int]:
        return {l for (_, l) in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == RingElement.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "RingElement") -> "RingElement":
        acc = dict(self._terms)
        for k, v in other._terms.items():
            _accumulate(acc, k, v)
        return RingElement(acc)

    def __neg__(self):
        return RingElement({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RingElement":
        c = to_q(c)
        return RingElement({k: c * v for k, v in self._terms.items()})

    def shift(self, di: int = 0) -> "RingElement":
        """Multiply by t^di."""
        return RingElement({(i + di, l): v for (i, l), v in self._terms.items()})

    def __repr__(self):
        return f"RingElement({str(self)!r})"

    def __str__(self):
        return format_terms(self.items())


def _mono_str(i: int, l: int) -> str:
    parts = []
    if i == 1:
        parts.append("t")
    elif i:
        parts.append(f"t^{i}")
    if l == 1:
        parts.append("u")
    elif l:
        parts.append(f"u^{l}")
    return "*".join(parts)


def format_terms(items, suffix: str = "") -> str:
    """Render ``[((i, l), c), ...]`` in the expression grammar."""
    out = []
    for (i, l), c in items:
        mono = _mono_str(i, l)
        mag = abs(c)
        if not mono:
            body = q_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{q_str(mag)}*{mono}"
        if suffix:
            body = f"{body} {suffix}" if body != "1" else suffix
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    if not out:
        return f"0 {suffix}".strip()
    return " ".join(out)


def ring_mul(x: RingElement, y: RingElement, c: CurveSpec) -> RingElement:
    """Product in R; any u^a with a >= m is rewritten through u^m = p(t)."""
    m = c.m
    acc: dict[Key, Fraction] = {}
    for (i, a), cx in x._terms.items():
        if not 0 <= a < m:
            raise ValueError(f"u-grade {a} outside [0, {m - 1}]")
        for (j, b), cy in y._terms.items():
            if not 0 <= b < m:
                raise ValueError(f"u-grade {b} outside [0, {m - 1}]")
            coef = cx * cy
            s = a + b
            if s < m:
                _accumulate(acc, (i + j, s), coef)
            else:
                for k, ak in enumerate(c.coeffs):
                    if ak:
                        _accumulate(acc, (i + j + k, s - m), coef * ak)
    return RingElement(acc)


def ring_pow(x: RingElement, n: int, c: CurveSpec) -> RingElement:
    out = RingElement.constant(1)
    for _ in range(n):
        out = ring_mul(out, x, c)
    return out


def u_power(a: int, c: CurveSpec) -> RingElement:
    """u^a reduced into grades [0, m-1], for any a >= 0."""
    return ring_pow(RingElement.monomial(0, 1), a, c) if a >= c.m else RingElement.monomial(0, a)


class Differential:
    """Formal sum of c t^i u^a dt and c t^i u^b du; immutable.

    Two differentials compare equal only when their term maps agree; equality
    in Omega^1_R needs :func:`canonical_form` first.
    """

    __slots__ = ("_dt", "_du")

    def __init__(self, dt_terms: Mapping[Key, object] | None = None,
                 du_terms: Mapping[Key, object] | None = None):
        self._dt = _clean(dt_terms or {})
        self._du = _clean(du_terms or {})

    @classmethod
    def dt(cls, f: RingElement) -> "Differential":
        return cls(f._terms, None)

    @classmethod
    def du(cls, f: RingElement) -> "Differential":
        return cls(None, f._terms)

    @property
    def dt_terms(self) -> dict[Key, Fraction]:
        return dict(self._dt)

    @property
    def du_terms(self) -> dict[Key, Fraction]:
        return dict(self._du)

    @property
    def dt_part(self) -> RingElement:
        return RingElement(self._dt)

    @property
    def du_part(self) -> RingElement:
        return RingElement(self._du)

    def is_zero(self) -> bool:
        return not self._dt and not self._du

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Differential):
            return NotImplemented
        return self._dt == other._dt and self._du == other._du

    def __hash__(self):
        return hash((frozenset(self._dt.items()), frozenset(self._du.items())))

    def __add__(self, other: "Differential") -> "Differential":
        dt, du = dict(self._dt), dict(self._du)
        for k, v in other._dt.items():
            _accumulate(dt, k, v)
        for k, v in other._du.items():
            _accumulate(du, k, v)
        return Differential(dt, du)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Differential":
        c = to_q(c)
        return Differential({k: c * v for k, v in self._dt.items()},
                            {k: c * v for k, v in self._du.items()})

    def t_support(self) -> list[int]:
        return sorted({i for (i, _) in self._dt} | {i for (i, _) in self._du})

    def __repr__(self):
        return f"Differential({str(self)!r})"

    def __str__(self):
        dt = sorted(self._dt.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        du = sorted(self._du.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        if not dt and not du:
            return "0 dt"
        left = format_terms(dt, "dt") if dt else ""
        right = format_terms(du, "du") if du else ""
        if not left:
            return right
        if not right:
            return left
        if right.startswith("-"):
            return f"{left} - {right[1:]}"
        return f"{left} + {right}"


def mul_form(f: RingElement, w: Differential, c: CurveSpec) -> Differential:
    """The R-module action f * w."""
    return Differential(ring_mul(f, w.dt_part, c)._terms, ring_mul(f, w.du_part, c)._terms)


def derive(f: RingElement) -> Differential:
    """d(t^j u^l) = j t^(j-1) u^l dt + l t^j u^(l-1) du, extended linearly."""
    dt: dict[Key, Fraction] = {}
    du: dict[Key, Fraction] = {}
    for (j, l), c in f._terms.items():
        if j:
            _accumulate(dt, (j - 1, l), c * j)
        if l:
            _accumulate(du, (j, l - 1), c * l)
    return Differential(dt, du)


def f_dg(f: RingElement, g: RingElement, c: CurveSpec) -> Differential:
    return mul_form(f, derive(g), c)


def canonical_form(w: Differential, c: CurveSpec) -> Differential:
    """Unique representative of w in Omega^1_R (not modulo dR).

    Omega^1_R is (R dt + R du) modulo the R-span of m u^(m-1) du - p' dt.
    Multiplying that relation by t^i u^a gives, for a = 0, the identity
    t^i u^(m-1) du = (1/m) t^i p' dt and, for a >= 1,
    m t^i p u^(a-1) du = t^i u^a p' dt.  The first removes u^(m-1) du; the
    second divides each du-stream by p in Q[t, 1/t], leaving a remainder
    with t-exponents in [0, d-1] (or [1, d-1] when a_0 = 0).
    """
    m, d = c.m, c.d
    dt = dict(w._dt)
    streams: dict[int, dict[int, Fraction]] = {}
    for (i, b), v in w._du.items():
        if b == m - 1:
            for k in range(1, d + 1):
                if c.coeffs[k]:
                    _accumulate(dt, (i + k - 1, 0), v * k * c.coeffs[k] / m)
        else:
            streams.setdefault(b, {})[i] = v
    lo = 1 if c.a0_zero else 0
    low_k = 1 if c.a0_zero else 0
    du: dict[Key, Fraction] = {}
    for b, vec in streams.items():
        # vec - sum(q_s t^s p) stays in the same class; move q_s * (1/m) t^s u^(b+1) p' dt over
        while vec:
            top = max(vec)
            if top > d - 1:
                s, q = top - d, vec[top]
            else:
                bot = min(vec)
                if bot >= lo:
                    break
                s, q = bot - low_k, vec[bot] / c.coeffs[low_k]
            for k, ak in enumerate(c.coeffs):
                if ak:
                    _accumulate(vec, s + k, -q * ak)
            for k in range(1, d + 1):
                if c.coeffs[k]:
                    _accumulate(dt, (s + k - 1, b + 1), q * k * c.coeffs[k] / m)
        for i, v in vec.items():
            du[(i, b)] = v
    return Differential(dt, du)

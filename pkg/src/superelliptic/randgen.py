"""Seeded random ring elements and differentials for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .ring import CurveSpec, Differential, RingElement, make_curve

COEFFS = [c for c in range(-3, 4) if c]


def random_element(rng: random.Random, m: int, lo: int = -6, hi: int = 6,
                   max_terms: int = 4) -> RingElement:
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(lo, hi), rng.randint(0, m - 1))
        terms[key] = terms.get(key, 0) + Fraction(rng.choice(COEFFS))
    return RingElement(terms)


def random_differential(rng: random.Random, m: int, lo: int = -6, hi: int = 6,
                        max_terms: int = 4) -> Differential:
    dt: dict = {}
    du: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(lo, hi), rng.randint(0, m - 1))
        target = dt if rng.random() < 0.5 else du
        target[key] = target.get(key, 0) + Fraction(rng.choice(COEFFS))
    return Differential(dt, du)


def random_monic(rng: random.Random, d: int, a0_zero: bool, lo: int = -3, hi: int = 3) -> list[Fraction]:
    """Monic degree-d coefficients; a_0 = 0 forces a_1 != 0 and vice versa."""
    coeffs = [Fraction(rng.randint(lo, hi)) for _ in range(d)] + [Fraction(1)]
    nz = [c for c in range(lo, hi + 1) if c]
    if a0_zero:
        coeffs[0] = Fraction(0)
        if d >= 2:
            coeffs[1] = Fraction(rng.choice(nz))
    elif d >= 1:
        coeffs[0] = Fraction(rng.choice(nz))
    return coeffs


def random_curve(rng: random.Random, m: int, d: int, a0_zero: bool) -> CurveSpec:
    return make_curve(m, random_monic(rng, d, a0_zero))

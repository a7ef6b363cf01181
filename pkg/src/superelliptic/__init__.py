"""Kaehler differentials modulo exact forms on superelliptic rings Q[t, 1/t, u]/(u^m - p(t)).

The main entry points:

* :func:`make_curve` and :func:`parse_curve` build a :class:`CurveSpec`;
* :func:`reduce_mod_dR` gives the coordinates of a differential in the
  basis :func:`basis_of`, and :func:`oracle_reduce` recomputes them by
  exact elimination in a finite window;
* :func:`cocycle_gamma` evaluates gamma(f, g) = class of f dg;
* :mod:`superelliptic.families` holds the hyperelliptic presets and the
  Pollaczek / Gegenbauer polynomial families.
"""
from .cocycle import (ExtElement, LoopElement, bracket_ext, bracket_loop, check_two_cocycle,
                      cocycle_gamma, commutation_table, prop_q_check, prop_uu_check)
from .differentials import (OMEGA0, BasisLabel, DiffClass, Window, basis_of, dimension,
                            eliminate_du, expected_dimension, independence_certificate,
                            oracle_reduce, reduce_mod_dR)
from .errors import (BadParameter, BothA0A1Zero, CurveError, DegreeZero, DimensionMismatch,
                     DivisibilityFailure, ExprSyntaxError, GradeOverflow, LieDataError,
                     MTooSmall, NotMonic, SuperellipticError, WindowTooSmall, ZeroDenominator)
from .families import (DJKM, OMEGA_MINUS, OMEGA_PLUS, Elliptic, FourPoint, Gegenbauer, Pollaczek,
                       PolySeqSpec, ThreePoint, dimension_report, gegenbauer_check, poly_seq,
                       pollaczek_transfer_check, preset_curve, qk_fourpoint, qk_polynomial)
from .lie import LieData, load_lie, make_lie, sl2
from .parsing import parse_curve, parse_differential, parse_element, parse_expression
from .qpoly import QPoly
from .ring import (CurveSpec, Differential, RingElement, canonical_form, derive, f_dg,
                   make_curve, mul_form, ring_mul, ring_pow, u_power)

__version__ = "0.1.0"

"""Finite-dimensional Lie algebras given by structure constants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path

from .errors import LieDataError
from .ring import q_str, to_q


@dataclass(frozen=True)
class LieData:
    """[e_i, e_j] = sum_k c[i][j][k] e_k, invariant form B[i][j]."""

    dim: int
    c: tuple  # c[i][j] -> tuple of (k, Fraction)
    B: tuple  # B[i][j] -> Fraction
    names: tuple[str, ...]

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return dict(self.c[i][j])

    def form(self, i: int, j: int) -> Fraction:
        return self.B[i][j]

    def bracket(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, xi in x.items():
            for j, yj in y.items():
                for k, ck in self.c[i][j]:
                    out[k] = out.get(k, 0) + xi * yj * ck
        return {k: v for k, v in out.items() if v}

    def form_vec(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> Fraction:
        return sum((xi * yj * self.B[i][j] for i, xi in x.items() for j, yj in y.items()), Fraction(0))

    def validation_errors(self) -> list[str]:
        """Antisymmetry, Jacobi, symmetry and invariance of B, on basis triples."""
        errs = []
        n = self.dim
        basis = [{i: Fraction(1)} for i in range(n)]
        for i, j in product(range(n), repeat=2):
            if self.bracket(basis[i], basis[j]) != {k: -v for k, v in self.bracket(basis[j], basis[i]).items()}:
                errs.append(f"antisymmetry fails for ({self.names[i]}, {self.names[j]})")
            if self.B[i][j] != self.B[j][i]:
                errs.append(f"form not symmetric at ({self.names[i]}, {self.names[j]})")
        for i, j, k in product(range(n), repeat=3):
            x, y, z = basis[i], basis[j], basis[k]
            acc: dict[int, Fraction] = {}
            for a, b, cc in ((x, y, z), (y, z, x), (z, x, y)):
                for key, v in self.bracket(self.bracket(a, b), cc).items():
                    acc[key] = acc.get(key, 0) + v
            if any(acc.values()):
                errs.append(f"Jacobi fails for ({self.names[i]}, {self.names[j]}, {self.names[k]})")
            if self.form_vec(self.bracket(x, y), z) != self.form_vec(x, self.bracket(y, z)):
                errs.append(f"form not invariant at ({self.names[i]}, {self.names[j]}, {self.names[k]})")
        return errs


def make_lie(dim: int, entries, form, names=None, validate: bool = True) -> LieData:
    """Build LieData from ``[(i, j, k, c), ...]`` and ``[(i, j, b), ...]``."""
    c = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, j, k, v in entries:
        for idx in (i, j, k):
            if not 0 <= int(idx) < dim:
                raise LieDataError(f"index {idx} outside [0, {dim - 1}]")
        v = to_q(v)
        if v:
            c[i][j][k] = c[i][j].get(k, 0) + v
    B = [[Fraction(0)] * dim for _ in range(dim)]
    for i, j, v in form:
        for idx in (i, j):
            if not 0 <= int(idx) < dim:
                raise LieDataError(f"form index {idx} outside [0, {dim - 1}]")
        B[int(i)][int(j)] = to_q(v)
    names = tuple(names) if names else tuple(f"e{i}" for i in range(dim))
    lie = LieData(dim,
                  tuple(tuple(tuple(sorted(cell.items())) for cell in row) for row in c),
                  tuple(tuple(row) for row in B),
                  names)
    if validate:
        errs = lie.validation_errors()
        if errs:
            raise LieDataError("; ".join(errs[:5]))
    return lie


def sl2(scale=4) -> LieData:
    """sl_2 in the basis (e, h, f); the form is ``scale`` times the trace form.

    scale = 4 is the Killing form: (e, f) = 4, (h, h) = 8.
    """
    s = to_q(scale)
    E, H, F = 0, 1, 2
    entries = [
        (E, F, H, 1), (F, E, H, -1),
        (H, E, E, 2), (E, H, E, -2),
        (H, F, F, -2), (F, H, F, 2),
    ]
    form = [(E, F, s), (F, E, s), (H, H, 2 * s)]
    return make_lie(3, entries, form, names=("e", "h", "f"))


def load_lie(path: str | Path) -> LieData:
    """Read ``{dim, c: [[i,j,k,"p/q"],...], B: [[i,j,"p/q"],...], names?}``."""
    try:
        obj = json.loads(Path(path).read_text())
        return make_lie(int(obj["dim"]), obj["c"], obj["B"], obj.get("names"))
    except LieDataError:
        raise
    except OSError as exc:
        raise LieDataError(f"cannot read {path}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise LieDataError(f"malformed structure-constant file: {exc}") from exc


def dump_lie(lie: LieData) -> dict:
    entries = [[i, j, k, q_str(v)] for i in range(lie.dim) for j in range(lie.dim) for k, v in lie.c[i][j]]
    form = [[i, j, q_str(lie.B[i][j])] for i in range(lie.dim) for j in range(lie.dim) if lie.B[i][j]]
    return {"dim": lie.dim, "names": list(lie.names), "c": entries, "B": form}

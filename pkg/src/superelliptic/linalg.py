"""Sparse exact row echelon forms over Q.

Rows are dicts ``column -> Fraction``.  Each column carries an integer
priority; a row's pivot is its highest-priority column.  Reduction cancels
pivot columns from the top down, so whatever survives is the unique
representative of the coset ``v + span(rows)`` that avoids every pivot
column.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Mapping


class Echelon:
    def __init__(self, priority: Callable[[Hashable], tuple]):
        self._priority = priority
        self._pivots: dict[Hashable, dict[Hashable, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivot_columns(self) -> set:
        return set(self._pivots)

    def reduce(self, vec: Mapping[Hashable, Fraction]) -> dict[Hashable, Fraction]:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        out: dict[Hashable, Fraction] = {}
        prio = self._priority
        while v:
            col = max(v, key=prio)
            c = v.pop(col)
            row = self._pivots.get(col)
            if row is None:
                out[col] = c
                continue
            for k, rc in row.items():
                if k == col:
                    continue
                nv = v.get(k, 0) - c * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return out

    def insert(self, vec: Mapping[Hashable, Fraction]) -> Hashable | None:
        """Add a row; return its pivot column, or None if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        col = max(r, key=self._priority)
        lead = r[col]
        self._pivots[col] = {k: c / lead for k, c in r.items()}
        return col

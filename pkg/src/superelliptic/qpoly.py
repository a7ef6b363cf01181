"""Dense univariate polynomials over Q (the parameter b of the families)."""
from __future__ import annotations

from fractions import Fraction

from .ring import q_str, to_q


class QPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [to_q(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs)

    @classmethod
    def const(cls, v) -> "QPoly":
        return cls([v])

    @classmethod
    def x(cls) -> "QPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self == QPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.c), len(other.c))
        return QPoly([(self.c[i] if i < len(self.c) else 0) + (other.c[i] if i < len(other.c) else 0)
                      for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.c or not other.c:
            return QPoly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, b) -> Fraction:
        b = to_q(b)
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * b + a
        return acc

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        q = [Fraction(0)] * max(len(rem) - len(other.c) + 1, 0)
        lead = other.c[-1]
        for k in range(len(q) - 1, -1, -1):
            f = rem[k + len(other.c) - 1] / lead
            q[k] = f
            if f:
                for i, o in enumerate(other.c):
                    rem[k + i] -= f * o
        return QPoly(q), QPoly(rem[:len(other.c) - 1])

    def __str__(self):
        """Descending powers of b."""
        if not self.c:
            return "0"
        out = []
        for e in range(len(self.c) - 1, -1, -1):
            a = self.c[e]
            if not a:
                continue
            mono = "" if e == 0 else ("b" if e == 1 else f"b^{e}")
            mag = abs(a)
            body = q_str(mag) if not mono else (mono if mag == 1 else f"{q_str(mag)}*{mono}")
            if not out:
                out.append(body if a > 0 else f"-{body}")
            else:
                out.append(("+ " if a > 0 else "- ") + body)
        return " ".join(out)

    __repr__ = __str__


def _lift(x) -> QPoly:
    return x if isinstance(x, QPoly) else QPoly.const(x)

"""Exception hierarchy shared by all modules."""


class SuperellipticError(Exception):
    """Base class for every error raised by this package."""


class CurveError(SuperellipticError, ValueError):
    """A (m, p(t)) pair violates the standing hypotheses."""


class NotMonic(CurveError):
    pass


class BothA0A1Zero(CurveError):
    pass


class DegreeZero(CurveError):
    pass


class MTooSmall(CurveError):
    pass


class BadParameter(SuperellipticError, ValueError):
    """A preset or polynomial-family parameter is outside its allowed range."""


class ZeroDenominator(SuperellipticError, ArithmeticError):
    pass


class DivisibilityFailure(SuperellipticError, ArithmeticError):
    pass


class WindowTooSmall(SuperellipticError):
    """The oracle window cannot express the query; enlarge and retry."""


class DimensionMismatch(SuperellipticError, ValueError):
    pass


class LieDataError(SuperellipticError, ValueError):
    """Structure constants or bilinear form fail validation."""


class GradeOverflow(SuperellipticError, ValueError):
    pass


class ExprSyntaxError(SuperellipticError, ValueError):
    """Malformed expression text, with a 1-based position."""

    def __init__(self, line, col, expected, src=""):
        self.line = line
        self.col = col
        self.expected = expected
        self.src = src
        super().__init__(f"line {line}, col {col}: expected {expected}")

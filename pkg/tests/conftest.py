from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from superelliptic import RingElement, make_curve

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# a spread of curves: both a_0 cases, m = 2..4
CURVES = [
    make_curve(2, [0, 1, -1, 1]),          # elliptic, b = 1/2
    make_curve(2, [36, 0, -13, 0, 1]),     # (t^2-4)(t^2-9)
    make_curve(2, [0, 4, 1]),              # t^2 + 4t
    make_curve(3, [1, 0, 0, 1]),           # t^3 + 1
    make_curve(3, [0, 1, 1]),              # t^2 + t
    make_curve(4, [2, -1, 1]),
]

coef = st.integers(-4, 4).filter(bool).map(Fraction) | st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(bool)


def elements(m: int, lo: int = -5, hi: int = 5, max_size: int = 4):
    keys = st.tuples(st.integers(lo, hi), st.integers(0, m - 1))
    return st.dictionaries(keys, coef, max_size=max_size).map(RingElement)


@st.composite
def curve_and_elements(draw, n: int = 2):
    c = draw(st.sampled_from(CURVES))
    return (c, *[draw(elements(c.m)) for _ in range(n)])


@pytest.fixture
def elliptic():
    return CURVES[0]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])

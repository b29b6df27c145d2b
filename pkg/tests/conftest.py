import random
import sys
from fractions import Fraction

import pytest

from wedgekit.geometry import DoubleWedge, Line, Point, Segment


def rand_rational(rng: random.Random, span: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def rand_point(rng, span=6, den=4) -> Point:
    return Point(rand_rational(rng, span, den), rand_rational(rng, span, den))


def rand_line(rng, span=6, den=4) -> Line:
    return Line(rand_rational(rng, span, den), rand_rational(rng, span, den))


def rand_segment(rng, span=6, den=4) -> Segment:
    while True:
        p, q = rand_point(rng, span, den), rand_point(rng, span, den)
        if p.x != q.x:
            return Segment.between(p, q, rng.random() < 0.7, rng.random() < 0.7)


def rand_wedge(rng, parity=None, mixed=True, span=6, den=4) -> DoubleWedge:
    while True:
        l1, l2 = rand_line(rng, span, den), rand_line(rng, span, den)
        if l1.slope != l2.slope:
            break
    parity = parity if parity is not None else rng.choice((-1, 1))
    bits = tuple(rng.random() < 0.6 for _ in range(3)) if mixed else None
    return DoubleWedge(l1, l2, parity, boundary=bits)


def near_point(rng, d: DoubleWedge) -> Point:
    """Random point, biased onto the wedge boundary and origin."""
    r = rng.random()
    if r < 0.1:
        return d.origin
    if r < 0.35:
        line = d.l1 if rng.random() < 0.5 else d.l2
        x = rand_rational(rng)
        return Point(x, line.at(x))
    return rand_point(rng)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

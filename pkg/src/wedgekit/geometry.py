"""Exact primitives: points, lines, segments, double-wedges and the point-line duality.

Every coordinate is a :class:`fractions.Fraction`; no predicate in this module
ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]

BOWTIE = -1
HOURGLASS = 1


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def sign(value) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Line:
    """Non-vertical line ``y = slope * x + intercept``."""

    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", as_rational(self.slope))
        object.__setattr__(self, "intercept", as_rational(self.intercept))

    def at(self, x) -> Fraction:
        return self.slope * x + self.intercept

    def side(self, p: Point) -> int:
        """+1 if ``p`` lies above the line, -1 below, 0 on it."""
        return sign(p.y - self.slope * p.x - self.intercept)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p.x == q.x:
            raise ValueError("line through two points with equal x is vertical")
        slope = (q.y - p.y) / (q.x - p.x)
        return cls(slope, p.y - slope * p.x)


@dataclass(frozen=True)
class VerticalLine:
    x: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))


class Parallel(NamedTuple):
    coincident: bool


@dataclass(frozen=True)
class Segment:
    """Non-vertical segment from ``p`` to ``q`` with ``p.x < q.x``."""

    p: Point
    q: Point
    include_p: bool = True
    include_q: bool = True

    def __post_init__(self):
        if self.p == self.q:
            raise ValueError("degenerate segment: endpoints coincide")
        if self.p.x >= self.q.x:
            raise ValueError(
                "segment endpoints must satisfy p.x < q.x (vertical segments are unsupported)"
            )

    @classmethod
    def between(cls, a: Point, b: Point, include_a: bool = True, include_b: bool = True) -> "Segment":
        """Build a segment from two endpoints given in any order."""
        if a.x > b.x:
            return cls(b, a, include_b, include_a)
        return cls(a, b, include_a, include_b)

    @property
    def closed(self) -> bool:
        return self.include_p and self.include_q

    def carrier(self) -> Line:
        return Line.through(self.p, self.q)


@dataclass(frozen=True)
class AntiSegment:
    """The carrier line of ``complement`` with ``complement`` removed.

    Inclusion flags belong to the removed part, so an open complement means its
    endpoints stay on the anti-segment.
    """

    complement: Segment

    def carrier(self) -> Line:
        return self.complement.carrier()


@dataclass(frozen=True)
class DoubleWedge:
    """Two opposite wedges of the lines ``l1`` and ``l2``.

    A point strictly off both lines is inside iff ``side1 * side2 == parity``;
    ``parity == -1`` selects the bowtie pair, ``+1`` the hourglass pair.
    ``boundary`` holds inclusion bits for points on ``l1``, on ``l2`` and at the
    origin; when omitted it is derived from ``closed``.
    """

    l1: Line
    l2: Line
    parity: int
    closed: bool = True
    boundary: tuple = field(default=None)

    def __post_init__(self):
        if self.l1.slope == self.l2.slope:
            raise ValueError("bounding lines of a double-wedge must have different slopes")
        if self.parity not in (BOWTIE, HOURGLASS):
            raise ValueError("parity must be +1 (hourglass) or -1 (bowtie)")
        if self.boundary is None:
            bits = (bool(self.closed),) * 3
        else:
            bits = tuple(bool(b) for b in self.boundary)
            if len(bits) != 3:
                raise ValueError("boundary needs three bits: on l1, on l2, at origin")
        object.__setattr__(self, "boundary", bits)
        object.__setattr__(self, "closed", all(bits))

    @property
    def is_bowtie(self) -> bool:
        return self.parity == BOWTIE

    @property
    def is_hourglass(self) -> bool:
        return self.parity == HOURGLASS

    @property
    def kind(self) -> str:
        return "bowtie" if self.parity == BOWTIE else "hourglass"

    @property
    def lines(self) -> tuple:
        return (self.l1, self.l2)

    @property
    def origin(self) -> Point:
        return line_intersection(self.l1, self.l2)


def contains(d: DoubleWedge, p: Point) -> bool:
    s1 = d.l1.side(p)
    s2 = d.l2.side(p)
    if s1 and s2:
        return s1 * s2 == d.parity
    if s1 == 0 and s2 == 0:
        return d.boundary[2]
    return d.boundary[0] if s1 == 0 else d.boundary[1]


def line_intersection(l1: Line, l2: Line):
    """Exact intersection point, or a :class:`Parallel` marker."""
    if l1.slope == l2.slope:
        return Parallel(coincident=l1.intercept == l2.intercept)
    x = (l2.intercept - l1.intercept) / (l1.slope - l2.slope)
    return Point(x, l1.slope * x + l1.intercept)


# Duality: point (px, py) <-> line y = px * x - py.

def dual_point_to_line(p: Point) -> Line:
    return Line(p.x, -p.y)


def dual_line_to_point(line: Line) -> Point:
    return Point(line.slope, -line.intercept)


def dual_segment_to_bowtie(s: Segment) -> DoubleWedge:
    """Bowtie whose points are exactly the duals of lines meeting ``s``."""
    return DoubleWedge(
        dual_point_to_line(s.p),
        dual_point_to_line(s.q),
        BOWTIE,
        boundary=(s.include_p, s.include_q, True),
    )


def dual_antisegment_to_hourglass(a: AntiSegment) -> DoubleWedge:
    """Hourglass whose points are exactly the duals of lines meeting ``a``.

    The origin dualizes to the carrier itself, which always meets the
    anti-segment, so it is included regardless of the complement's flags.
    """
    c = a.complement
    return DoubleWedge(
        dual_point_to_line(c.p),
        dual_point_to_line(c.q),
        HOURGLASS,
        boundary=(not c.include_p, not c.include_q, True),
    )


def dual_avoid_to_hourglass(s: Segment) -> DoubleWedge:
    """Hourglass whose points are exactly the duals of lines missing ``s``."""
    return DoubleWedge(
        dual_point_to_line(s.p),
        dual_point_to_line(s.q),
        HOURGLASS,
        boundary=(not s.include_p, not s.include_q, False),
    )


class Ray(NamedTuple):
    origin: Point
    direction: tuple  # (dx, dy) with dx in {-1, +1}
    line_index: int  # 0 for l1, 1 for l2


class Traces(NamedTuple):
    origin: Point
    mean_slope: Fraction
    upper: tuple
    lower: tuple


def traces(d: DoubleWedge) -> Traces:
    """Split the four boundary rays by the mean-slope line through the origin."""
    o = d.origin
    mean = (d.l1.slope + d.l2.slope) / 2
    steep, flat = (0, 1) if d.l1.slope > d.l2.slope else (1, 0)
    lines = d.lines
    upper = (
        Ray(o, (1, lines[steep].slope), steep),
        Ray(o, (-1, -lines[flat].slope), flat),
    )
    lower = (
        Ray(o, (1, lines[flat].slope), flat),
        Ray(o, (-1, -lines[steep].slope), steep),
    )
    return Traces(o, mean, upper, lower)


def _trace_height(trace: tuple, x: Fraction):
    """Height of a trace (pair of rays, one per direction) above ``x``."""
    for ray in trace:
        dx, dy = ray.direction
        if (x - ray.origin.x) * dx >= 0:
            t = (x - ray.origin.x) * dx
            return ray.origin.y + t * dy, ray.line_index
    raise AssertionError("trace rays must cover both directions")


def contains_by_traces(d: DoubleWedge, p: Point) -> bool:
    """Membership via upper/lower traces; must agree with :func:`contains`."""
    tr = traces(d)
    up, up_line = _trace_height(tr.upper, p.x)
    low, low_line = _trace_height(tr.lower, p.x)
    if p == tr.origin:
        return d.boundary[2]
    if p.y == up:
        return d.boundary[up_line]
    if p.y == low:
        return d.boundary[low_line]
    below_upper = p.y < up
    above_lower = p.y > low
    if d.is_bowtie:
        return below_upper and above_lower
    return not below_upper or not above_lower


# Shear normalization (x, y) -> (y - a*x, x): slope-a lines become vertical.

def shear_point(p: Point, a: Fraction) -> Point:
    return Point(p.y - a * p.x, p.x)


def unshear_point(p: Point, a: Fraction) -> Point:
    return Point(p.y, p.x + a * p.y)


def shear_line(line: Line, a: Fraction) -> Line:
    delta = line.slope - a
    if delta == 0:
        raise ValueError(f"line of slope {a} maps to a vertical line under the shear")
    return Line(1 / delta, -line.intercept / delta)


def shear_wedge(d: DoubleWedge, a: Fraction) -> DoubleWedge:
    flip = sign(d.l1.slope - a) * sign(d.l2.slope - a)
    return DoubleWedge(
        shear_line(d.l1, a), shear_line(d.l2, a), d.parity * flip, boundary=d.boundary
    )


def shear_to_bowties(wedges, a) -> list:
    """Apply the shear at slope ``a``; every image must come out a bowtie."""
    a = as_rational(a)
    out = []
    for i, d in enumerate(wedges):
        image = shear_wedge(d, a)
        if not image.is_bowtie:
            raise ValueError(f"slope {a} is covered by wedge {i}; shear does not yield a bowtie")
        out.append(image)
    return out


# Primal incidence predicates.

def line_meets_segment(line, s: Segment) -> bool:
    """Does a (possibly vertical) line share a point with ``s``, honoring flags."""
    if isinstance(line, VerticalLine):
        if s.p.x < line.x < s.q.x:
            return True
        return (line.x == s.p.x and s.include_p) or (line.x == s.q.x and s.include_q)
    sp = line.side(s.p)
    sq = line.side(s.q)
    if sp * sq < 0:
        return True
    if sp == 0 and sq == 0:
        return True
    return (sp == 0 and s.include_p) or (sq == 0 and s.include_q)


def line_meets_antisegment(line, a: AntiSegment) -> bool:
    """Does a line share a point with the carrier minus the complement."""
    c = a.complement
    if isinstance(line, VerticalLine):
        x = line.x
    else:
        carrier = c.carrier()
        if line.slope == carrier.slope:
            return line.intercept == carrier.intercept
        x = (carrier.intercept - line.intercept) / (line.slope - carrier.slope)
    if c.p.x < x < c.q.x:
        return False
    if x == c.p.x:
        return not c.include_p
    if x == c.q.x:
        return not c.include_q
    return True

"""Instance generators: the quadratic grating, the nonagon family, the
3SUM -> GeomBase -> stabbing chain, and seeded random wedge families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import mpmath

from .geometry import (
    AntiSegment,
    DoubleWedge,
    Line,
    Point,
    Segment,
    VerticalLine,
    contains,
    line_intersection,
)
from .algorithms.general import intersect_general
from .algorithms.sas import SasInstance


# Grating -------------------------------------------------------------------

def grating_wedges(k: int, stretch) -> list:
    """``k`` open bowties in a row along y = 0 and ``k`` open hourglasses
    stacked vertically through the centre of that row."""
    stretch = Fraction(stretch)
    cx = Fraction(k * (k - 1), 2)
    wedges = []
    for i in range(k):
        o = k * i
        wedges.append(DoubleWedge(Line(2, -2 * o), Line(-2, 2 * o), -1, closed=False))
    m = 1 / (2 * stretch)
    for j in range(k):
        y = j - Fraction(k - 1, 2)
        wedges.append(DoubleWedge(Line(m, y - m * cx), Line(-m, y + m * cx), 1, closed=False))
    return wedges


def make_grating(k: int, max_doublings: int = 8) -> list:
    """2k wedges whose intersection has exactly (k+1)^2 components.

    The horizontal stretch starts at k^2 and is doubled until the component
    count checks out.
    """
    if k < 1:
        raise ValueError("grating needs k >= 1")
    target = (k + 1) ** 2
    stretch = Fraction(k * k)
    for _ in range(max_doublings):
        wedges = grating_wedges(k, stretch)
        if intersect_general(wedges).component_count == target:
            return wedges
        stretch *= 2
    raise RuntimeError(f"grating with k={k} failed to reach {target} components")


# Nonagon family --------------------------------------------------------------

NONAGON_SHEAR = Fraction(1, 7)


@dataclass(frozen=True)
class NonagonFamily:
    precision: int
    base_points: tuple  # rounded 9-gon vertices before the shear
    points: tuple  # the same vertices after the shear
    greens: tuple
    reds: tuple
    purples: tuple
    w: tuple
    shear: Fraction

    @property
    def elements(self) -> list:
        return [*self.greens, *self.reds, *self.purples]

    def __len__(self) -> int:
        return len(self.greens) + len(self.reds) + len(self.purples)


def _rounded(value, digits: int) -> Fraction:
    scale = 10**digits
    return Fraction(int(mpmath.nint(value * scale)), scale)


def nonagon_points(precision: int) -> list:
    mpmath.mp.dps = precision + 20
    pts = []
    for k in range(9):
        t = 2 * mpmath.pi * k / 9
        pts.append(Point(_rounded(mpmath.cos(t), precision), _rounded(mpmath.sin(t), precision)))
    return pts


def orient(a: Point, b: Point, c: Point) -> int:
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (v > 0) - (v < 0)


def _check_order_type(pts) -> None:
    # a regular polygon listed counterclockwise has every triple i<j<k positive
    for a, b, c in combinations(range(9), 3):
        if orient(pts[a], pts[b], pts[c]) <= 0:
            raise ValueError(f"rounded points {a},{b},{c} break the 9-gon order type; raise precision")


def _meet(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    """Intersection of the lines p1p2 and p3p4 (neither vertical)."""
    q = line_intersection(Line.through(p1, p2), Line.through(p3, p4))
    if not isinstance(q, Point):
        raise ValueError("parallel supporting lines")
    return q


def make_nonagon_family(precision: int = 6) -> NonagonFamily:
    """Nine green segments, nine red and eighteen purple anti-segments.

    Coordinates are the 9-gon vertices rounded to ``precision`` decimals and
    then sheared by ``(x, y) -> (x + y/7, y)`` so that no segment is vertical.
    """
    if precision < 4:
        raise ValueError("precision must be at least 4")
    base = nonagon_points(precision)
    _check_order_type(base)
    s = NONAGON_SHEAR
    p = [Point(q.x + s * q.y, q.y) for q in base]
    green = [Segment.between(p[k], p[(k + 3) % 9]) for k in range(9)]
    red = [
        AntiSegment(Segment.between(p[k], p[(k + 4) % 9], False, False)) for k in range(9)
    ]
    ws, purple = [], []
    for k in range(9):
        w = _meet(p[(k - 1) % 9], p[k], p[(k + 1) % 9], p[(k + 2) % 9])
        ws.append(w)
        for a, b in ((2, 4), (3, 5)):
            ga, gb = green[(k + a) % 9], green[(k + b) % 9]
            end = _meet(ga.p, ga.q, gb.p, gb.q)
            purple.append(AntiSegment(Segment.between(w, end)))
    return NonagonFamily(precision, tuple(base), tuple(p), tuple(green), tuple(red), tuple(purple), tuple(ws), s)


# 3SUM -> GeomBase -> stabbing --------------------------------------------------

def three_sum(numbers) -> bool:
    """Brute force: do three entries (repetition allowed) sum to zero?"""
    vals = sorted(set(numbers))
    present = set(vals)
    return any(-(a + b) in present for i, a in enumerate(vals) for b in vals[i:])


@dataclass(frozen=True)
class GeomBaseInstance:
    """Integer points ``(x, row)`` on the rows y = 0, 1, 2."""

    points: tuple

    def __post_init__(self):
        pts = tuple(sorted({(int(x), int(r)) for x, r in self.points}))
        for _, r in pts:
            if r not in (0, 1, 2):
                raise ValueError(f"row must be 0, 1 or 2, got {r}")
        object.__setattr__(self, "points", pts)

    def row(self, r: int) -> list:
        return [x for x, rr in self.points if rr == r]

    @property
    def max_x(self) -> int:
        return max(x for x, _ in self.points)

    def normalized(self) -> "GeomBaseInstance":
        shift = 1 - min(x for x, _ in self.points)
        return GeomBaseInstance(tuple((x + shift, r) for x, r in self.points))

    def collinear_triples(self) -> list:
        """All ``(a, b, c)`` with ``(a,0), (b,1), (c,2)`` present and a + c = 2b."""
        mid = set(self.row(1))
        return [
            (a, (a + c) // 2, c)
            for a in self.row(0)
            for c in self.row(2)
            if (a + c) % 2 == 0 and (a + c) // 2 in mid
        ]


def geombase_from_3sum(numbers) -> GeomBaseInstance:
    numbers = list(numbers)
    if not numbers:
        raise ValueError("need at least one number")
    pts = []
    for v in numbers:
        pts += [(2 * v, 0), (2 * v, 2), (-v, 1)]
    return GeomBaseInstance(tuple(pts)).normalized()


REDUCTION_EPS = Fraction(1, 4)
REDUCTION_TILT = Fraction(1, 10**6)


def tilt(p: Point) -> Point:
    """Near-identity linear map applied to the whole stabbing instance."""
    t = REDUCTION_TILT
    return Point(p.x + t * p.y, p.y + t * p.x)


def untilt(p: Point) -> Point:
    t = REDUCTION_TILT
    det = 1 - t * t
    return Point((p.x - t * p.y) / det, (p.y - t * p.x) / det)


def _punctured(a: Point, b: Point, centers=()) -> list:
    """Closed pieces of the horizontal or vertical segment ``ab`` outside open
    eps-disks around the abscissae ``centers``."""
    eps = REDUCTION_EPS
    pieces, start = [], a
    for c in sorted(centers):
        pieces.append((start, Point(c - eps, a.y)))
        start = Point(c + eps, a.y)
    pieces.append((start, b))
    return [Segment.between(tilt(u), tilt(v)) for u, v in pieces]


def sas_from_geombase(u: GeomBaseInstance) -> SasInstance:
    """Rectangle sides and middle row as avoid segments with gaps at the
    instance points; one stab segment across the lower half.  Everything is
    passed through :func:`tilt` so no segment is vertical or horizontal."""
    if min(x for x, _ in u.points) != 1:
        raise ValueError("GeomBase instance must be normalized (min x = 1)")
    X = u.max_x
    top = X + 1
    avoid = []
    for r in (0, 1, 2):
        avoid += _punctured(Point(0, r), Point(top, r), u.row(r))
    avoid += _punctured(Point(0, 0), Point(0, 2))
    avoid += _punctured(Point(top, 0), Point(top, 2))
    eps = REDUCTION_EPS
    stab = [Segment.between(tilt(Point(eps, Fraction(1, 2))), tilt(Point(top - eps, Fraction(1, 2))))]
    return SasInstance(stab, avoid)


def untilt_line(line):
    if isinstance(line, VerticalLine):
        a, b = Point(line.x, 0), Point(line.x, 1)
    else:
        a, b = Point(0, line.intercept), Point(1, line.slope + line.intercept)
    a, b = untilt(a), untilt(b)
    if a.x == b.x:
        return VerticalLine(a.x)
    return Line.through(a, b)


def snap_witness(u: GeomBaseInstance, line):
    """Round the crossings of a stabbing line with rows 0, 1, 2 to integers.

    Returns the triple ``(a, b, c)`` when it is a collinear triple of ``u``,
    else None.
    """
    line = untilt_line(line)
    if isinstance(line, VerticalLine):
        xs = [line.x] * 3
    else:
        if line.slope == 0:
            return None
        xs = [(r - line.intercept) / line.slope for r in (0, 1, 2)]
    a, b, c = (round(x) for x in xs)
    if a + c != 2 * b:
        return None
    pts = set(u.points)
    if (a, 0) in pts and (b, 1) in pts and (c, 2) in pts:
        return a, b, c
    return None


# Random families --------------------------------------------------------------

def _random_wedge(rng: random.Random, parity: int, box: int, slopes=None) -> DoubleWedge:
    while True:
        if slopes is None:
            a1, a2 = rng.randint(-box, box), rng.randint(-box, box)
        else:
            a1, a2 = slopes(rng)
        if a1 != a2:
            break
    return DoubleWedge(Line(a1, rng.randint(-box, box)), Line(a2, rng.randint(-box, box)), parity)


def random_wedges(
    n: int,
    hourglasses: int = 0,
    seed: int = 0,
    box: int = 10,
    anchors: int = 0,
    uncovered: bool = False,
    tries: int = 200,
) -> list:
    """Seeded random closed wedges with integer slopes and intercepts.

    ``anchors`` random points are drawn first and each wedge is resampled (up
    to ``tries`` times) until it contains all of them, which keeps the common
    intersection from being trivially empty.  With ``uncovered`` every wedge
    leaves slope 0 free: bowtie slopes share a sign, hourglass slopes
    straddle 0.
    """
    if not 0 <= hourglasses <= n:
        raise ValueError("need 0 <= hourglasses <= n")
    rng = random.Random(seed)
    pts = [
        Point(Fraction(rng.randint(-4 * box, 4 * box), 4), Fraction(rng.randint(-4 * box, 4 * box), 4))
        for _ in range(anchors)
    ]

    def same_sign(r):
        s = rng.choice((-1, 1))
        return s * r.randint(1, box), s * r.randint(1, box)

    def straddle(r):
        return -r.randint(1, box), r.randint(1, box)

    parities = [1] * hourglasses + [-1] * (n - hourglasses)
    rng.shuffle(parities)
    out = []
    for parity in parities:
        slopes = None
        if uncovered:
            slopes = straddle if parity == 1 else same_sign
        for _ in range(tries):
            d = _random_wedge(rng, parity, box, slopes)
            if all(contains(d, p) for p in pts):
                break
        out.append(d)
    return out

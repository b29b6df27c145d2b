"""Intersection of bowties via the envelopes of their lower and upper traces.

A point is inside every bowtie iff ``F(x) <= y <= G(x)`` (with boundary
conventions) where ``F`` is the upper envelope of the lower traces and ``G``
the lower envelope of the upper traces.  Each vertical slice of the result is
an interval, so components are maximal runs of x-atoms with nonempty slices.
"""

from __future__ import annotations

from typing import NamedTuple

from ..geometry import Point, contains
from .envelope import envelope, piece_at, value_at
from .result import IntersectionResult, whole_plane


class Atom(NamedTuple):
    lo: object  # None for -inf; equal to hi for a point atom
    hi: object
    ok: bool
    strict: bool  # slice has positive length
    witness: Point


def trace_envelopes(bowties):
    lows, highs = [], []
    for d in bowties:
        o = d.origin
        p1 = (d.l1.slope, d.l1.intercept)
        p2 = (d.l2.slope, d.l2.intercept)
        steep, flat = (p1, p2) if p1[0] > p2[0] else (p2, p1)
        lows.append(([o.x], [steep, flat]))
        highs.append(([o.x], [flat, steep]))
    return envelope(lows, upper=True), envelope(highs, upper=False)


def sample_x(lo, hi):
    if lo is None and hi is None:
        return 0
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _all_contain(wedges, p):
    return all(contains(d, p) for d in wedges)


def slice_atoms(wedges, F, G, closed: bool):
    """Decompose the x-axis into point and open-interval atoms with a uniform
    slice structure, and classify each one."""
    xs = sorted(set(F[0]) | set(G[0]))
    bounds = [None] + xs + [None]
    atoms = []

    def point_atom(x):
        fv = value_at(F, x)
        gv = value_at(G, x)
        if gv > fv:
            atoms.append(Atom(x, x, True, True, Point(x, (fv + gv) / 2)))
        elif gv < fv:
            atoms.append(Atom(x, x, False, False, None))
        else:
            p = Point(x, fv)
            atoms.append(Atom(x, x, closed or _all_contain(wedges, p), False, p))

    def interval_atom(lo, hi):
        s = sample_x(lo, hi)
        af, bf = piece_at(F, s)
        ag, bg = piece_at(G, s)
        da, db = ag - af, bg - bf
        if da == 0 and db == 0:
            _coincident_atoms(lo, hi, af, bf)
            return
        if da != 0:
            r = -db / da
            if (lo is None or r > lo) and (hi is None or r < hi):
                interval_atom(lo, r)
                point_atom(r)
                interval_atom(r, hi)
                return
        gap = da * s + db
        if gap > 0:
            fv = af * s + bf
            atoms.append(Atom(lo, hi, True, True, Point(s, fv + gap / 2)))
        else:
            atoms.append(Atom(lo, hi, False, False, None))

    def _coincident_atoms(lo, hi, a, b):
        # the slice is the single point on y = a x + b; membership can only
        # change at bowtie origins lying on that line
        if closed:
            s = sample_x(lo, hi)
            atoms.append(Atom(lo, hi, True, False, Point(s, a * s + b)))
            return
        cuts = sorted(
            {
                o.x
                for o in (d.origin for d in wedges)
                if o.y == a * o.x + b and (lo is None or o.x > lo) and (hi is None or o.x < hi)
            }
        )
        edges = [lo] + cuts + [hi]
        for k, (u, v) in enumerate(zip(edges, edges[1:])):
            s = sample_x(u, v)
            p = Point(s, a * s + b)
            atoms.append(Atom(u, v, _all_contain(wedges, p), False, p))
            if k < len(cuts):
                c = cuts[k]
                q = Point(c, a * c + b)
                atoms.append(Atom(c, c, _all_contain(wedges, q), False, q))

    for k in range(len(bounds) - 1):
        interval_atom(bounds[k], bounds[k + 1])
        if k < len(xs):
            point_atom(xs[k])
    return atoms


def runs_of(atoms):
    runs, current = [], []
    for atom in atoms:
        if atom.ok:
            current.append(atom)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs


def run_witness(run):
    for atom in run:
        if atom.strict:
            return atom.witness
    return run[0].witness


def _lt(a, b) -> bool:
    """``a < b`` where None on the left means -inf and on the right +inf."""
    return a is None or b is None or a < b


def _chain(env, x_min, x_max) -> list:
    xs = [x for x in env[0] if (x_min is None or x >= x_min) and (x_max is None or x <= x_max)]
    if x_min is not None and (not xs or xs[0] != x_min):
        xs.insert(0, x_min)
    if x_max is not None and (not xs or xs[-1] != x_max):
        xs.append(x_max)
    return [Point(x, value_at(env, x)) for x in xs]


def convex_regions(atoms, wedges, F, G) -> list:
    """Split the intersection at the bowtie origins' abscissae.

    Between two consecutive origins every bowtie is a single convex wedge,
    so each slab holds one convex region; neighbours meet at most at an
    origin.  Returns dicts with ``x_min``, ``x_max`` (None = unbounded) and
    the ``lower``/``upper`` boundary chains.
    """
    cuts = sorted({d.origin.x for d in wedges})
    bounds = [None] + cuts + [None]
    ok = [a for a in atoms if a.ok]
    regions = []
    for lo, hi in zip(bounds, bounds[1:]):
        inside = [a for a in ok if _lt(lo, a.hi) and _lt(a.lo, hi) and (a.lo != a.hi or a.lo not in (lo, hi))]
        if not inside:
            continue
        x_min = inside[0].lo if lo is None or (inside[0].lo is not None and inside[0].lo > lo) else lo
        x_max = inside[-1].hi if hi is None or (inside[-1].hi is not None and inside[-1].hi < hi) else hi
        regions.append((x_min, x_max))
    covered = {x for r in regions for x in r}
    for a in ok:
        if a.lo == a.hi and a.lo in cuts and a.lo not in covered:
            regions.append((a.lo, a.lo))
    regions.sort(key=lambda r: (r[0] is not None, r[0] if r[0] is not None else 0))
    return [{"x_min": u, "x_max": v, "lower": _chain(F, u, v), "upper": _chain(G, u, v)} for u, v in regions]


def intersect_bowties(wedges) -> IntersectionResult:
    """Intersection of bowties as maximal x-monotone regions, O(n log n)."""
    wedges = list(wedges)
    if any(not d.is_bowtie for d in wedges):
        raise ValueError("intersect_bowties accepts bowties only")
    if not wedges:
        return whole_plane("bowtie")
    F, G = trace_envelopes(wedges)
    closed = all(d.closed for d in wedges)
    atoms = slice_atoms(wedges, F, G, closed)
    runs = runs_of(atoms)
    return IntersectionResult(
        len(runs),
        [run_witness(r) for r in runs],
        "bowtie",
        convex_regions=convex_regions(atoms, wedges, F, G),
    )

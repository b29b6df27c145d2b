"""Overlay of the bowtie region with the hourglass lines.

The bowtie intersection is the band between the envelopes ``F`` and ``G``.
Cutting the plane at every breakpoint of ``F`` and ``G`` and at every
crossing among ``F``, ``G`` and the hourglass lines leaves vertical slabs in
which all these curves are disjoint lines.  Each slab splits into open
trapezoids and open line pieces; each cut line splits into points and open
vertical segments.  Membership is constant on each such cell, and component
structure follows from closure incidences between neighbouring cells.
"""

from __future__ import annotations

from ..geometry import Point, contains
from .bowties import intersect_bowties, sample_x, trace_envelopes
from .envelope import crossings, piece_at, value_at
from .general import intersect_general
from .result import IntersectionResult, relabel


class _DSU:
    def __init__(self):
        self.parent: list = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _event_xs(bowties, hourglass_lines, F, G, closed):
    xs = set(F[0]) | set(G[0])
    xs.update(crossings(F, G))
    for i, h in enumerate(hourglass_lines):
        env = ([], [h])
        xs.update(crossings(env, F))
        xs.update(crossings(env, G))
        for g in hourglass_lines[i + 1 :]:
            if h[0] != g[0]:
                xs.add((g[1] - h[1]) / (h[0] - g[0]))
    if not closed:
        xs.update(d.origin.x for d in bowties)
    return sorted(xs)


class _Overlay:
    def __init__(self, bowties, hourglasses):
        self.bowties = bowties
        self.hourglasses = hourglasses
        self.closed = all(d.closed for d in bowties)
        self.F, self.G = trace_envelopes(bowties)
        hl = {(l.slope, l.intercept) for d in hourglasses for l in d.lines}
        self.hlines = sorted(hl)
        self.events = _event_xs(bowties, self.hlines, self.F, self.G, self.closed)
        self.dsu = _DSU()
        self.selected: dict = {}  # cell id -> (rank, witness)

    def member(self, p: Point, f, g) -> bool:
        y = p.y
        if y < f or y > g:
            return False
        if not (f < y < g or self.closed):
            if not all(contains(d, p) for d in self.bowties):
                return False
        return all(contains(h, p) for h in self.hourglasses)

    def cell(self, p: Point, f, g, rank: int):
        """Register a cell with representative ``p``; None if not selected."""
        if not self.member(p, f, g):
            return None
        c = self.dsu.add()
        self.selected[c] = (rank, p)
        return c

    def link(self, a, b) -> None:
        if a is not None and b is not None:
            self.dsu.union(a, b)

    def cut(self, x):
        """Cells on the vertical line at ``x``: sorted values, points, gaps.

        ``gaps[j]`` lies below ``values[j]``; ``gaps[-1]`` is the top ray.
        """
        f, g = value_at(self.F, x), value_at(self.G, x)
        values = sorted({f, g} | {a * x + b for a, b in self.hlines})
        points = [self.cell(Point(x, v), f, g, 2) for v in values]
        gaps = []
        for j in range(len(values) + 1):
            lo = values[j - 1] if j > 0 else None
            hi = values[j] if j < len(values) else None
            gap = self.cell(Point(x, sample_x(lo, hi)), f, g, 1)
            if j > 0:
                self.link(gap, points[j - 1])
            if j < len(values):
                self.link(gap, points[j])
            gaps.append(gap)
        return {"values": values, "index": {v: j for j, v in enumerate(values)}, "points": points, "gaps": gaps}

    def _closure_link(self, c, cut, lo, hi) -> None:
        """Link ``c`` to every cell of ``cut`` inside the closed range [lo, hi]."""
        if c is None or cut is None:
            return
        idx = cut["index"]
        j0 = 0 if lo is None else idx[lo]
        j1 = len(cut["values"]) - 1 if hi is None else idx[hi]
        for j in range(j0, j1 + 1):
            self.link(c, cut["points"][j])
        for j in range(j0 + 1, j1 + 1):
            self.link(c, cut["gaps"][j])
        if lo is None:
            self.link(c, cut["gaps"][0])
        if hi is None:
            self.link(c, cut["gaps"][-1])

    def slab(self, lo, hi, left, right) -> None:
        xm = sample_x(lo, hi)
        pf, pg = piece_at(self.F, xm), piece_at(self.G, xm)
        f, g = pf[0] * xm + pf[1], pg[0] * xm + pg[1]
        lines = sorted({pf, pg, *self.hlines}, key=lambda l: l[0] * xm + l[1])
        ys = [a * xm + b for a, b in lines]

        def ends(k, x):
            if k is None or x is None:
                return None
            a, b = lines[k]
            return a * x + b

        edges = []
        for k, y in enumerate(ys):
            e = self.cell(Point(xm, y), f, g, 3)
            if left is not None:
                self.link(e, left["points"][left["index"][ends(k, lo)]])
            if right is not None:
                self.link(e, right["points"][right["index"][ends(k, hi)]])
            edges.append(e)
        for j in range(len(ys) + 1):
            below = j - 1 if j > 0 else None
            above = j if j < len(ys) else None
            t = self.cell(
                Point(xm, sample_x(None if below is None else ys[below], None if above is None else ys[above])),
                f,
                g,
                4,
            )
            if below is not None:
                self.link(t, edges[below])
            if above is not None:
                self.link(t, edges[above])
            self._closure_link(t, left, ends(below, lo), ends(above, lo))
            self._closure_link(t, right, ends(below, hi), ends(above, hi))

    def run(self):
        cuts = [self.cut(x) for x in self.events]
        bounds = [None] + self.events + [None]
        padded = [None] + cuts + [None]
        for k in range(len(bounds) - 1):
            self.slab(bounds[k], bounds[k + 1], padded[k], padded[k + 1])
        best: dict = {}
        for c, (rank, p) in self.selected.items():
            r = self.dsu.find(c)
            if r not in best or rank > best[r][0]:
                best[r] = (rank, p)
        return [best[r][1] for r in sorted(best)]


def intersect_parameterized(wedges) -> IntersectionResult:
    """Intersection for families with few hourglasses.

    Bowties are handled through their envelopes; the ``k`` hourglasses only
    contribute their ``2k`` bounding lines to the overlay.
    """
    wedges = list(wedges)
    bowties = [d for d in wedges if d.is_bowtie]
    hourglasses = [d for d in wedges if d.is_hourglass]
    if not hourglasses:
        return relabel(intersect_bowties(bowties), "parameterized")
    if not bowties:
        return relabel(intersect_general(hourglasses), "parameterized")
    witnesses = _Overlay(bowties, hourglasses).run()
    return IntersectionResult(len(witnesses), witnesses, "parameterized")

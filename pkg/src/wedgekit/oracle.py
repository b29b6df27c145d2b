"""Brute-force ground truth.

Cells of a line arrangement are exactly the classes of points with equal sign
vectors against all lines, and a cell lies in the closure of another iff its
sign vector is obtained by zeroing some entries.  The oracle samples every
cell with a candidate pool, tests membership point by point and merges cells
through that closure relation, without touching the DCEL code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .algorithms.decide import EMPTY, decide_intersection
from .arrangement import Arrangement
from .geometry import (
    AntiSegment,
    Line,
    Point,
    Segment,
    VerticalLine,
    contains,
    dual_antisegment_to_hourglass,
    dual_point_to_line,
    dual_segment_to_bowtie,
    line_intersection,
    line_meets_antisegment,
    line_meets_segment,
)


@dataclass(frozen=True)
class CandidatePool:
    points: tuple
    vertical_candidates: tuple = ()


def _distinct_lines(lines) -> list:
    seen, out = set(), []
    for l in lines:
        key = (l.slope, l.intercept)
        if key not in seen:
            seen.add(key)
            out.append(l)
    return out


def _pick_x(lo, hi, avoid) -> Fraction:
    """A rational strictly between ``lo`` and ``hi`` (None = unbounded) that is
    not in ``avoid``."""
    k = 1
    while True:
        if lo is None and hi is None:
            x = Fraction(k - 1)
        elif lo is None:
            x = hi - k
        elif hi is None:
            x = lo + k
        else:
            x = lo + (hi - lo) * Fraction(k, k + 1) if k > 1 else (lo + hi) / 2
        if x not in avoid:
            return x
        k += 1


def x_candidates(xs) -> list:
    """Every distinct value, the midpoints between neighbours and one unit
    beyond each extreme."""
    xs = sorted(set(xs))
    if not xs:
        return [Fraction(0)]
    mids = [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    return sorted(set(xs) | set(mids) | {xs[0] - 1, xs[-1] + 1})


def candidate_pool(lines, avoid_x=(), vertical_from=()) -> CandidatePool:
    """Points hitting every vertex, edge and face of the arrangement of ``lines``.

    Vertices are the pairwise intersections.  Each edge (including the two
    unbounded ends of every line) gets one interior point, chosen off the
    abscissae in ``avoid_x``; every face is reached from such an edge point by
    a vertical step shorter than the gap to the nearest other line.
    ``vertical_from`` lists segments whose endpoint abscissae seed the
    vertical-line candidates.
    """
    lines = _distinct_lines(lines)
    avoid = set(avoid_x)
    verts = set()
    on_line = [set() for _ in lines]
    for i, j in combinations(range(len(lines)), 2):
        q = line_intersection(lines[i], lines[j])
        if isinstance(q, Point):
            verts.add(q)
            on_line[i].add(q.x)
            on_line[j].add(q.x)
    points = set(verts)
    for i, l in enumerate(lines):
        xs = sorted(on_line[i])
        bounds = [None] + xs + [None]
        for lo, hi in zip(bounds, bounds[1:]):
            x = _pick_x(lo, hi, avoid)
            y = l.at(x)
            points.add(Point(x, y))
            gaps = [abs(m.at(x) - y) for m in lines if m is not l]
            gaps = [g for g in gaps if g > 0]
            step = min(gaps) / 2 if gaps else Fraction(1)
            points.add(Point(x, y + step))
            points.add(Point(x, y - step))
    if not lines:
        points.add(Point(0, 0))
    vx = tuple(x_candidates(x for s in vertical_from for x in (s.p.x, s.q.x))) if vertical_from else ()
    return CandidatePool(tuple(sorted(points)), vx)


def sign_vector(lines, p: Point) -> tuple:
    return tuple(l.side(p) for l in lines)


def cells_of(lines, points) -> dict:
    """Group points by sign vector; the smallest point represents its cell."""
    cells: dict = {}
    for p in sorted(points):
        cells.setdefault(sign_vector(lines, p), p)
    return cells


def audit_pool(arr: Arrangement, pool: CandidatePool) -> list:
    """DCEL cells whose sign vector no pool point reproduces (should be [])."""
    lines = arr.lines
    have = set(cells_of(lines, pool.points))
    missing = []
    for f in range(arr.num_faces):
        if f != arr.outer_face and sign_vector(lines, arr.face_sample(f)) not in have:
            missing.append(("face", f))
    for e in range(arr.n_line_edges):
        if sign_vector(lines, arr.edge_midpoint(e)) not in have:
            missing.append(("edge", e))
    for v in range(arr.n_interior_vertices):
        if sign_vector(lines, arr.vertex_point(v)) not in have:
            missing.append(("vertex", v))
    return missing


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def closure_components(signs: list) -> list:
    """Group cells (given by sign vectors) into connected components of the
    union of their closures; returns component labels in input order."""
    n = len(signs)
    if n == 0:
        return []
    S = np.array(signs, dtype=np.int8).reshape(n, -1)
    dsu = _DSU(n)
    for t in range(n):
        # cells s in the closure of t: zero or agreeing in every coordinate
        below = np.all((S == 0) | (S == S[t]), axis=1)
        for s in np.flatnonzero(below):
            dsu.union(int(s), t)
    return [dsu.find(i) for i in range(n)]


class OracleResult(NamedTuple):
    nonempty: bool
    witness: Point
    component_count: int
    witnesses: list


def oracle_intersect(wedges) -> OracleResult:
    """Sample every cell of the bounding-line arrangement and test it directly."""
    wedges = list(wedges)
    lines = _distinct_lines(l for d in wedges for l in d.lines)
    pool = candidate_pool(lines)
    cells = cells_of(lines, pool.points)
    chosen = [(sig, p) for sig, p in cells.items() if all(contains(d, p) for d in wedges)]
    chosen.sort(key=lambda item: item[1])
    labels = closure_components([sig for sig, _ in chosen])
    reps: dict = {}
    for lab, (_, p) in zip(labels, chosen):
        reps.setdefault(lab, p)
    witnesses = list(reps.values())
    return OracleResult(bool(chosen), chosen[0][1] if chosen else None, len(witnesses), witnesses)


# Piercing -------------------------------------------------------------------------

class Impossible:
    """No set of at most ``p`` lines pierces the family."""

    def __init__(self, p: int):
        self.p = p

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"Impossible(p={self.p})"


def pierces(line, e) -> bool:
    if isinstance(e, AntiSegment):
        return line_meets_antisegment(line, e)
    return line_meets_segment(line, e)


def _segment_of(e) -> Segment:
    return e.complement if isinstance(e, AntiSegment) else e


def dual_wedge(e):
    if isinstance(e, AntiSegment):
        return dual_antisegment_to_hourglass(e)
    return dual_segment_to_bowtie(e)


def pierceable(family) -> bool:
    """Is there one line meeting every element?  Dual decision plus the
    vertical pass."""
    family = list(family)
    if decide_intersection([dual_wedge(e) for e in family]) is not EMPTY:
        return True
    segs = [_segment_of(e) for e in family]
    return any(
        all(pierces(VerticalLine(x), e) for e in family)
        for x in x_candidates(x for s in segs for x in (s.p.x, s.q.x))
    )


def triple_pierceable_all(family):
    """``(True, None)`` if every 3 elements have a common piercing line, else
    ``(False, first failing index triple)``."""
    family = list(family)
    for idx in combinations(range(len(family)), 3):
        if not pierceable([family[i] for i in idx]):
            return False, idx
    return True, None


def candidate_lines(family) -> list:
    """One line from every cell of the dual arrangement of the endpoints, then
    the vertical candidates."""
    segs = [_segment_of(e) for e in family]
    endpoints = {p for s in segs for p in (s.p, s.q)}
    # lines parallel to an anti-segment carrier miss it, so keep samples off
    # those dual abscissae
    avoid = {_segment_of(e).carrier().slope for e in family if isinstance(e, AntiSegment)}
    pool = candidate_pool([dual_point_to_line(p) for p in sorted(endpoints)], avoid, segs)
    out = [Line(p.x, -p.y) for p in pool.points]
    out += [VerticalLine(x) for x in pool.vertical_candidates]
    return out


def _mask(line, family) -> int:
    m = 0
    for i, e in enumerate(family):
        if pierces(line, e):
            m |= 1 << i
    return m


def _maximal(masks: dict) -> list:
    keys = sorted(masks, key=lambda m: -bin(m).count("1"))
    kept = []
    for m in keys:
        if not any(m | k == k for k in kept):
            kept.append(m)
    return kept


def piercing_with_lines(family, p: int, prune_set=None):
    """At most ``p`` lines jointly piercing ``family``, or :class:`Impossible`.

    With ``prune_set`` (elements every solution must pierce, typically
    segments), the ``p = 2`` search only tries first lines that pierce at
    least half of them.
    """
    if p not in (1, 2, 3):
        raise ValueError("p must be 1, 2 or 3")
    family = list(family)
    full = (1 << len(family)) - 1
    masks: dict = {}
    for line in candidate_lines(family):
        masks.setdefault(_mask(line, family), line)
    solution = None
    if p >= 1 and full in masks:
        solution = [masks[full]]
    if solution is None and p >= 2:
        firsts = list(masks)
        if prune_set is not None:
            prune = [family.index(s) for s in prune_set]
            need = -(-len(prune) // 2)
            firsts = [m for m in firsts if sum(m >> i & 1 for i in prune) >= need]
        maximal = _maximal(masks)
        for m1 in sorted(firsts):
            hit = next((m2 for m2 in maximal if m1 | m2 == full), None)
            if hit is not None:
                solution = [masks[m1], masks[hit]]
                break
    if solution is None and p >= 3:
        maximal = sorted(_maximal(masks))
        for a, b in combinations(range(len(maximal)), 2):
            rest = full & ~(maximal[a] | maximal[b])
            hit = next((m for m in maximal[b + 1 :] if rest & ~m == 0), None)
            if hit is not None:
                solution = [masks[maximal[a]], masks[maximal[b]], masks[hit]]
                break
    if solution is None:
        return Impossible(p)
    if not all(any(pierces(l, e) for l in solution) for e in family):
        raise RuntimeError("piercing solution failed certification")
    return solution

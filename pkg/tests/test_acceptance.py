"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are collected into the
terminal summary) or ``python tests/test_acceptance.py`` for the lines alone.
"""

import math
import random
import sys
import time

import pytest

from conftest import near_point, rand_line, rand_point, rand_segment, rand_wedge
from wedgekit.algorithms import (
    UNCOVERED,
    find_uncovered_slope,
    intersect_bowties,
    intersect_general,
    intersect_parameterized,
    intersect_via_shear,
    solve_sas,
)
from wedgekit.constructions import (
    geombase_from_3sum,
    make_grating,
    make_nonagon_family,
    random_wedges,
    sas_from_geombase,
    snap_witness,
    three_sum,
)
from wedgekit.geometry import (
    AntiSegment,
    Line,
    contains,
    contains_by_traces,
    dual_antisegment_to_hourglass,
    dual_line_to_point,
    dual_point_to_line,
    dual_segment_to_bowtie,
    line_meets_antisegment,
    line_meets_segment,
    unshear_point,
)
from wedgekit.oracle import oracle_intersect, pierces, piercing_with_lines, triple_pierceable_all

RESULTS: dict = {}


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)


def inside_all(wedges, points) -> bool:
    return all(contains(d, p) for p in points for d in wedges)


def test_criterion_1_grating_counts():
    counts, slowest = [], 0.0
    for k in range(1, 7):
        t = time.perf_counter()
        counts.append(intersect_general(make_grating(k)).component_count)
        slowest = max(slowest, time.perf_counter() - t)
    ok = counts == [(k + 1) ** 2 for k in range(1, 7)] and slowest < 5
    report(1, ok, f"components {counts}, slowest k {slowest:.2f}s")
    assert ok


def test_criterion_2_general_vs_oracle():
    t = time.perf_counter()
    bad = []
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(1, 20)
        fam = random_wedges(n, rng.randint(0, n), seed=seed, box=8, anchors=seed % 4)
        g, o = intersect_general(fam), oracle_intersect(fam)
        same = g.nonempty == o.nonempty and g.component_count == o.component_count
        if not (same and inside_all(fam, g.witnesses) and inside_all(fam, o.witnesses)):
            bad.append(seed)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 600
    report(2, ok, f"200 instances, mismatching seeds {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_3_bowtie_path():
    t = time.perf_counter()
    bad, nonempty = [], 0
    for seed in range(200):
        rng = random.Random(1000 + seed)
        n = rng.randint(1, 100)
        fam = random_wedges(n, rng.randint(0, min(n, 10)), seed=seed, uncovered=True, anchors=seed % 4)
        cov = find_uncovered_slope(fam)
        result, slope = intersect_via_shear(fam, cov)
        g = intersect_general(fam)
        witnesses = [unshear_point(w, slope) if slope is not None else w for w in result.witnesses]
        nonempty += g.nonempty
        if (
            (cov.verdict == UNCOVERED) != (slope is not None)
            or result.component_count != g.component_count
            or result.nonempty != g.nonempty
            or not inside_all(fam, witnesses)
        ):
            bad.append(seed)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 300
    report(3, ok, f"200 instances ({nonempty} nonempty), mismatching seeds {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_4_parameterized():
    t = time.perf_counter()
    bad, nonempty = [], 0
    for seed in range(100):
        rng = random.Random(2000 + seed)
        n = rng.randint(1, 100)
        fam = random_wedges(n, rng.randint(0, min(n, 5)), seed=seed, anchors=seed % 4)
        p, g = intersect_parameterized(fam), intersect_general(fam)
        nonempty += g.nonempty
        if p.component_count != g.component_count or not inside_all(fam, p.witnesses):
            bad.append(seed)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 300
    report(4, ok, f"100 instances ({nonempty} nonempty), mismatching seeds {bad}, {elapsed:.1f}s")
    assert ok


@pytest.mark.slow
def test_criterion_5_nonagon():
    t = time.perf_counter()
    fam = make_nonagon_family(6)
    el = fam.elements
    triples, bad_triple = triple_pierceable_all(el)
    two = piercing_with_lines(el, 2, prune_set=fam.greens)
    three = piercing_with_lines(el, 3)
    three_ok = bool(three) and len(three) <= 3 and all(any(pierces(l, e) for l in three) for e in el)
    elapsed = time.perf_counter() - t
    ok = triples and not two and three_ok and elapsed < 900
    detail = (
        f"triple_pierceable={triples}, two_lines={'Impossible' if not two else 'found ' + str(two)}, "
        f"three_lines_certified={three_ok}, {elapsed:.1f}s"
    )
    if bad_triple is not None:
        detail += f", failing triple {bad_triple}"
    report(5, ok, detail)
    assert triples
    assert three_ok
    assert not two, f"two lines pierce all 36 elements: {two}"


def test_criterion_6_reduction():
    t = time.perf_counter()
    rng = random.Random(6)
    bad, yes = [], 0
    for _ in range(50):
        nums = [rng.randint(-20, 20) for _ in range(rng.randint(1, 12))]
        u = geombase_from_3sum(nums)
        line = solve_sas(sas_from_geombase(u))
        expect = three_sum(nums)
        yes += expect
        if (line is not None) != expect or (line is not None and snap_witness(u, line) is None):
            bad.append(nums)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 300
    report(6, ok, f"50 sets ({yes} YES), disagreements {bad}, {elapsed:.1f}s")
    assert ok


def test_criterion_7_duality_and_predicates():
    t = time.perf_counter()
    rng = random.Random(7)
    trips = sum(dual_line_to_point(dual_point_to_line(p)) == p for p in (rand_point(rng) for _ in range(10**4)))
    lines = sum(dual_point_to_line(dual_line_to_point(l)) == l for l in (rand_line(rng) for _ in range(10**4)))
    transport = anti = parallel = 0
    for i in range(10**4):
        line, s = rand_line(rng), rand_segment(rng)
        if rng.random() < 0.3:
            # put the line through an endpoint to exercise the inclusion flags
            q = s.p if i % 2 else s.q
            line = Line(line.slope, q.y - line.slope * q.x)
        dual = dual_line_to_point(line)
        transport += line_meets_segment(line, s) == contains(dual_segment_to_bowtie(s), dual)
        a = AntiSegment(s)
        in_hourglass = contains(dual_antisegment_to_hourglass(a), dual)
        if line.slope == s.carrier().slope and line != s.carrier():
            # the hourglass keeps the vertical through its origin, i.e. the
            # direction of the carrier, which a parallel line never meets
            parallel += 1
            anti += in_hourglass and not line_meets_antisegment(line, a)
        else:
            anti += line_meets_antisegment(line, a) == in_hourglass
    traces = boundary = 0
    for _ in range(10**4):
        d = rand_wedge(rng)
        p = near_point(rng, d)
        boundary += d.l1.side(p) == 0 or d.l2.side(p) == 0
        traces += contains_by_traces(d, p) == contains(d, p)
    elapsed = time.perf_counter() - t
    ok = trips == lines == transport == anti == traces == 10**4 and boundary > 0 and elapsed < 60
    report(
        7,
        ok,
        f"round-trips {trips}+{lines}, transports {transport}+{anti} ({parallel} parallel), traces {traces} "
        f"({boundary} on a boundary), {elapsed:.1f}s",
    )
    assert ok


def _slope(sizes, seconds) -> float:
    xs = [math.log(n) for n in sizes]
    ys = [math.log(max(s, 1e-6)) for s in seconds]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def _timed(fn, fam) -> float:
    t = time.perf_counter()
    fn(fam)
    return time.perf_counter() - t


@pytest.mark.slow
def test_criterion_8_performance():
    b_sizes = [1250, 2500, 5000, 10000]
    b_times = [_timed(intersect_bowties, random_wedges(n, 0, seed=8, box=1000)) for n in b_sizes]
    g_sizes = [63, 125, 250, 500]
    g_times = [_timed(intersect_general, random_wedges(n, n // 2, seed=8, box=1000)) for n in g_sizes]
    sb, sg = _slope(b_sizes, b_times), _slope(g_sizes, g_times)
    ok = b_times[-1] <= 10 and g_times[-1] <= 120 and sb <= 1.3 and sg <= 2.3
    report(
        8,
        ok,
        f"bowties n=10^4 {b_times[-1]:.2f}s slope {sb:.2f}; general n=500 {g_times[-1]:.2f}s slope {sg:.2f}",
    )
    assert ok


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)

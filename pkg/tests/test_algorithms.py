from fractions import Fraction

import pytest

from conftest import rand_point, rand_segment, rand_wedge
from wedgekit.algorithms import (
    ALL_BOWTIES,
    EMPTY,
    FULLY_COVERED,
    UNCOVERED,
    SasInstance,
    decide_intersection,
    find_uncovered_slope,
    intersect_bowties,
    intersect_general,
    intersect_parameterized,
    intersect_via_shear,
    satisfies,
    solve_sas,
    threshold_cells,
)
from wedgekit.algorithms.sas import vertical_stabber
from wedgekit.arrangement import build_arrangement, components_of, depth_labels
from wedgekit.constructions import (
    geombase_from_3sum,
    make_grating,
    random_wedges,
    sas_from_geombase,
    GeomBaseInstance,
)
from wedgekit.geometry import (
    DoubleWedge,
    Line,
    Point,
    Segment,
    VerticalLine,
    contains,
    dual_segment_to_bowtie,
    shear_to_bowties,
)


def all_inside(wedges, points) -> bool:
    return all(contains(d, p) for p in points for d in wedges)


def agree(a, b, wedges) -> bool:
    return (
        a.component_count == b.component_count
        and all_inside(wedges, a.witnesses)
        and all_inside(wedges, b.witnesses)
    )


def bowtie(a1, b1, a2, b2, closed=True) -> DoubleWedge:
    return DoubleWedge(Line(a1, b1), Line(a2, b2), -1, closed=closed)


def hourglass(a1, b1, a2, b2, closed=True) -> DoubleWedge:
    return DoubleWedge(Line(a1, b1), Line(a2, b2), 1, closed=closed)


def tiny(cx, cy) -> Segment:
    h = Fraction(1, 200)
    return Segment.between(Point(cx - h, cy - h), Point(cx + h, cy + h))


# coverage ---------------------------------------------------------------------


def test_coverage_bowties_only():
    cov = find_uncovered_slope([bowtie(1, 0, 2, 0)])
    assert cov.verdict == ALL_BOWTIES


def test_coverage_single_hourglass_gap_midpoint():
    cov = find_uncovered_slope([hourglass(-1, 0, 1, 0)])
    assert cov.verdict == UNCOVERED
    assert cov.slope == 0
    assert cov.count_at(0) == 0
    assert cov.count_at(1) == 1 and cov.count_at(None) == 1


def test_coverage_grating_fully_covered():
    cov = find_uncovered_slope(make_grating(3))
    assert cov.verdict == FULLY_COVERED
    for s in (Fraction(-5), Fraction(-2), Fraction(0), Fraction(1, 3), Fraction(7), None):
        assert cov.count_at(s) > 0


def test_coverage_first_gap_is_reported():
    # gaps (-3, -2) and (2, 3); the leftmost wins
    fam = [hourglass(-3, 0, 3, 0), bowtie(-2, 0, 2, 0)]
    cov = find_uncovered_slope(fam)
    assert cov.verdict == UNCOVERED
    assert cov.slope == Fraction(-5, 2)


def test_coverage_count_matches_brute_force(rng):
    for _ in range(200):
        fam = [rand_wedge(rng) for _ in range(rng.randint(1, 6))]
        cov = find_uncovered_slope(fam)
        for _ in range(10):
            s = Fraction(rng.randint(-40, 40), 4)
            expect = 0
            for d in fam:
                lo, hi = sorted((d.l1.slope, d.l2.slope))
                inside = lo <= s <= hi
                expect += inside if d.is_bowtie else (not (lo < s < hi))
            assert cov.count_at(s) == expect
        if cov.verdict == UNCOVERED:
            assert cov.count_at(cov.slope) == 0


# bowties ----------------------------------------------------------------------


def test_bowties_single_closed():
    r = intersect_bowties([bowtie(1, 0, -1, 0)])
    assert r.component_count == 1
    regions = r.convex_regions
    assert len(regions) == 2
    assert regions[0]["x_max"] == 0 and regions[1]["x_min"] == 0
    assert regions[0]["x_min"] is None and regions[1]["x_max"] is None


def test_bowties_grating_row_has_k_plus_one_components():
    for k in (2, 3, 4):
        bowties = make_grating(k)[:k]
        assert all(d.is_bowtie for d in bowties)
        assert intersect_bowties(bowties).component_count == k + 1


def test_bowties_reject_hourglass():
    with pytest.raises(ValueError):
        intersect_bowties([hourglass(1, 0, -1, 0)])


def test_bowties_empty_input_is_plane():
    r = intersect_bowties([])
    assert r.component_count == 1


def test_bowties_region_count_bound(rng):
    for _ in range(100):
        fam = [rand_wedge(rng, parity=-1) for _ in range(rng.randint(1, 8))]
        r = intersect_bowties(fam)
        assert len(r.convex_regions) <= len(fam) + 1
        lefts = [g["x_min"] for g in r.convex_regions]
        assert lefts == sorted(lefts, key=lambda x: (x is not None, x or 0))
        assert len(r.convex_regions) >= r.component_count


def test_bowties_agree_with_general(rng):
    for _ in range(200):
        fam = [rand_wedge(rng, parity=-1) for _ in range(rng.randint(1, 20))]
        assert agree(intersect_bowties(fam), intersect_general(fam), fam)


def test_bowties_seeded_families_agree():
    for seed in range(40):
        fam = random_wedges(15, 0, seed=seed, anchors=2)
        assert agree(intersect_bowties(fam), intersect_general(fam), fam)


# general ----------------------------------------------------------------------


def test_general_empty_input():
    r = intersect_general([])
    assert r.component_count == 1 and len(r.witnesses) == 1


def test_general_grating_six():
    assert intersect_general(make_grating(6)).component_count == 49


def test_general_bowtie_and_complement():
    closed = [bowtie(1, 0, -1, 0), hourglass(1, 0, -1, 0)]
    r = intersect_general(closed)
    assert r.component_count == 1
    for w in r.witnesses:
        assert w.y == w.x or w.y == -w.x
    opened = [bowtie(1, 0, -1, 0, closed=False), hourglass(1, 0, -1, 0, closed=False)]
    assert intersect_general(opened).component_count == 0


def test_general_witnesses_inside(rng):
    for _ in range(100):
        fam = [rand_wedge(rng) for _ in range(rng.randint(1, 7))]
        r = intersect_general(fam)
        assert all_inside(fam, r.witnesses)
        assert len(r.witnesses) == r.component_count


# parameterized ----------------------------------------------------------------


def test_parameterized_without_hourglasses_matches_bowtie_path(rng):
    for _ in range(30):
        fam = [rand_wedge(rng, parity=-1) for _ in range(rng.randint(1, 10))]
        p, b = intersect_parameterized(fam), intersect_bowties(fam)
        assert p.component_count == b.component_count
        assert p.witnesses == b.witnesses
        assert p.convex_regions == b.convex_regions


@pytest.mark.parametrize("k", [1, 2, 3])
def test_parameterized_grating(k):
    assert intersect_parameterized(make_grating(k)).component_count == (k + 1) ** 2


def test_parameterized_agrees_with_general(rng):
    for _ in range(150):
        n = rng.randint(1, 14)
        h = rng.randint(0, min(n, 4))
        fam = [rand_wedge(rng, parity=1) for _ in range(h)]
        fam += [rand_wedge(rng, parity=-1) for _ in range(n - h)]
        rng.shuffle(fam)
        assert agree(intersect_parameterized(fam), intersect_general(fam), fam)


# decide -----------------------------------------------------------------------


def test_decide_single_wedge(rng):
    for _ in range(20):
        d = rand_wedge(rng, mixed=False)
        w = decide_intersection([d])
        assert w is not EMPTY and contains(d, w)


def test_decide_three_tiny_segments_empty():
    fam = [dual_segment_to_bowtie(tiny(*c)) for c in ((1, 1), (5, 1), (3, 9))]
    assert decide_intersection(fam) is EMPTY
    assert not EMPTY


def test_decide_grating_witness():
    for k in (1, 2, 4):
        fam = make_grating(k)
        w = decide_intersection(fam)
        assert all_inside(fam, [w])


def test_decide_agrees_with_general(rng):
    for _ in range(150):
        fam = [rand_wedge(rng) for _ in range(rng.randint(1, 8))]
        w = decide_intersection(fam)
        expect = intersect_general(fam).nonempty
        assert (w is not EMPTY) == expect
        if expect:
            assert all_inside(fam, [w])


def test_shear_invariance_of_component_count():
    for seed in range(40):
        fam = random_wedges(12, 3, seed=seed, uncovered=True, anchors=2)
        cov = find_uncovered_slope(fam)
        assert cov.verdict == UNCOVERED
        sheared = shear_to_bowties(fam, cov.slope)
        assert all(d.is_bowtie for d in sheared)
        before = intersect_general(fam).component_count
        assert intersect_general(sheared).component_count == before
        result, slope = intersect_via_shear(fam, cov)
        assert slope == cov.slope and result.component_count == before


def test_shear_path_refuses_full_coverage():
    with pytest.raises(ValueError):
        intersect_via_shear(make_grating(2))


# thresholds -------------------------------------------------------------------


def test_threshold_full_equals_general(rng):
    for _ in range(30):
        fam = [rand_wedge(rng) for _ in range(rng.randint(1, 6))]
        nb = sum(d.is_bowtie for d in fam)
        _, cells, count, _ = threshold_cells(fam, nb, len(fam) - nb)
        g = intersect_general(fam)
        assert count == g.component_count
        assert tuple(cells.faces.tolist()) == g.faces
        assert tuple(cells.edges.tolist()) == g.edges


def test_threshold_zero_selects_everything(rng):
    fam = [rand_wedge(rng) for _ in range(5)]
    arr, cells, count, _ = threshold_cells(fam, 0, 0)
    assert count == 1
    # box corners, box sides and the outer face are not cells of the plane
    assert len(cells.vertices) == arr.n_interior_vertices
    assert len(cells.edges) == arr.n_line_edges
    assert len(cells.faces) == arr.num_faces - 1


def test_threshold_range_checked():
    fam = [bowtie(1, 0, -1, 0)]
    with pytest.raises(ValueError):
        threshold_cells(fam, 2, 0)
    with pytest.raises(ValueError):
        threshold_cells(fam, 0, 1)


def test_threshold_brute_force_recount(rng):
    for _ in range(25):
        fam = [rand_wedge(rng) for _ in range(rng.randint(2, 12))]
        nb = sum(d.is_bowtie for d in fam)
        b, h = rng.randint(0, nb), rng.randint(0, len(fam) - nb)
        arr = build_arrangement([line for d in fam for line in d.lines])
        labels = depth_labels(arr, fam)
        _, cells, count, _ = threshold_cells(fam, b, h)
        faces = set(cells.faces.tolist())
        for f in range(arr.num_faces):
            if f == arr.outer_face:
                continue
            p = arr.face_sample(f)
            ib = sum(contains(d, p) for d in fam if d.is_bowtie)
            ih = sum(contains(d, p) for d in fam if d.is_hourglass)
            assert (f in faces) == (ib >= b and ih >= h)
        assert count == components_of(arr, cells)[0]
        assert labels is not None


# stabbing and avoiding --------------------------------------------------------


def test_sas_single_segment():
    s = Segment.between(Point(0, 0), Point(1, 1))
    inst = SasInstance([s])
    line = solve_sas(inst)
    assert line is not None and satisfies(inst, line)


def test_sas_rejects_non_segments():
    with pytest.raises(TypeError):
        SasInstance([Point(0, 0)])


def test_sas_geombase_yes():
    u = GeomBaseInstance(((1, 0), (1, 1), (1, 2)))
    inst = sas_from_geombase(u)
    line = solve_sas(inst)
    assert line is not None and satisfies(inst, line)


def test_sas_geombase_no():
    u = GeomBaseInstance(((1, 0), (2, 1), (4, 2)))
    assert solve_sas(sas_from_geombase(u)) is None


def test_sas_vertical_pass():
    stab = [Segment.between(Point(0, 0), Point(1, 0)), Segment.between(Point(0, 10), Point(1, 10))]
    inst = SasInstance(stab, [Segment.between(Point(-5, 5), Point(0, 5))])
    line = vertical_stabber(inst)
    assert isinstance(line, VerticalLine) and 0 < line.x <= 1
    assert satisfies(inst, line)
    blocked = SasInstance(stab, [Segment.between(Point(-5, 5), Point(5, 5))])
    assert vertical_stabber(blocked) is None


def test_sas_answers_verified(rng):
    for _ in range(60):
        inst = SasInstance(
            [rand_segment(rng) for _ in range(rng.randint(1, 4))],
            [rand_segment(rng) for _ in range(rng.randint(0, 3))],
        )
        line = solve_sas(inst)
        if line is not None:
            assert satisfies(inst, line)


def test_sas_monotone_in_avoid_set(rng):
    # adding avoid segments can only turn YES into NO
    for _ in range(40):
        stab = [rand_segment(rng) for _ in range(rng.randint(1, 3))]
        avoid = [rand_segment(rng) for _ in range(3)]
        answers = [solve_sas(SasInstance(stab, avoid[:j])) is not None for j in range(4)]
        assert answers == sorted(answers, reverse=True)


def test_sas_none_means_no_line_among_samples(rng):
    for _ in range(40):
        inst = SasInstance(
            [rand_segment(rng) for _ in range(3)],
            [rand_segment(rng) for _ in range(2)],
        )
        if solve_sas(inst) is None:
            for _ in range(200):
                p, q = rand_point(rng), rand_point(rng)
                if p.x != q.x:
                    assert not satisfies(inst, Line.through(p, q))
                else:
                    assert not satisfies(inst, VerticalLine(p.x))


def test_sas_three_sum_chain_small():
    yes = sas_from_geombase(geombase_from_3sum([1, 2, -3]))
    no = sas_from_geombase(geombase_from_3sum([1, 2, 3]))
    assert solve_sas(yes) is not None
    assert solve_sas(no) is None

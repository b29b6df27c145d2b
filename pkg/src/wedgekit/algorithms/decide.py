from __future__ import annotations

from ..geometry import Point, shear_to_bowties, unshear_point
from .bowties import intersect_bowties
from .coverage import ALL_BOWTIES, UNCOVERED, find_uncovered_slope
from .general import intersect_general


class Empty:
    """Marker for an empty common intersection."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "Empty"


EMPTY = Empty()


def intersect_via_shear(wedges, coverage=None):
    """Bowtie path for families with an uncovered slope.

    Returns ``(result, slope)``; ``slope`` is None when no shear was needed.
    Witnesses and regions in ``result`` live in the sheared plane.
    """
    wedges = list(wedges)
    coverage = coverage or find_uncovered_slope(wedges)
    if coverage.verdict == ALL_BOWTIES:
        return intersect_bowties(wedges), None
    if coverage.verdict != UNCOVERED:
        raise ValueError("every slope is covered; the bowtie path does not apply")
    return intersect_bowties(shear_to_bowties(wedges, coverage.slope)), coverage.slope


def decide_intersection(wedges) -> Point | Empty:
    """A point common to all wedges, or ``EMPTY``."""
    wedges = list(wedges)
    coverage = find_uncovered_slope(wedges)
    if coverage.verdict in (ALL_BOWTIES, UNCOVERED):
        result, slope = intersect_via_shear(wedges, coverage)
        if not result.nonempty:
            return EMPTY
        w = result.witnesses[0]
        return w if slope is None else unshear_point(w, slope)
    result = intersect_general(wedges)
    return result.witnesses[0] if result.nonempty else EMPTY

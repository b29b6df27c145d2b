"""Which line slopes are covered by a wedge family."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

ALL_BOWTIES = "all_bowties"
UNCOVERED = "uncovered"
FULLY_COVERED = "fully_covered"


@dataclass(frozen=True)
class SlopeCoverage:
    """``events`` lists ``(slope, delta)`` sorted by slope: passing ``slope``
    upwards changes the coverage count by ``delta``.  ``base`` is the count on
    the far left of the circle (equal to the hourglass count)."""

    events: tuple
    base: int
    verdict: str
    slope: Fraction = None

    def count_at(self, slope) -> int:
        """Number of wedges containing some line of ``slope`` (``None`` = vertical)."""
        if slope is None:
            return self.base
        below = self.base + sum(delta for s, delta in self.events if s < slope)
        # intervals are closed: those starting exactly here count as well
        return below + sum(delta for s, delta in self.events if s == slope and delta > 0)


def find_uncovered_slope(wedges) -> SlopeCoverage:
    """Sweep the sorted bounding slopes and report the first uncovered gap.

    A bowtie with slopes ``a1 < a2`` covers ``[a1, a2]``; an hourglass covers
    the complement of ``(a1, a2)`` plus the vertical direction.  The returned
    slope is the midpoint of the first open gap with zero coverage, scanning
    from minus infinity.
    """
    events = []
    hourglasses = 0
    for d in wedges:
        lo, hi = sorted((d.l1.slope, d.l2.slope))
        if d.is_bowtie:
            events += [(lo, 1), (hi, -1)]
        else:
            hourglasses += 1
            events += [(lo, -1), (hi, 1)]
    events = tuple(sorted(events))
    if hourglasses == 0:
        return SlopeCoverage(events, 0, ALL_BOWTIES)
    net: dict = defaultdict(int)
    for s, delta in events:
        net[s] += delta
    slopes = sorted(net)
    count = hourglasses
    for s, t in zip(slopes, slopes[1:]):
        count += net[s]
        if count == 0:
            return SlopeCoverage(events, hourglasses, UNCOVERED, (s + t) / 2)
    return SlopeCoverage(events, hourglasses, FULLY_COVERED)

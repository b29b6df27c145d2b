"""Find a line meeting every stab segment and missing every avoid segment."""

from __future__ import annotations

from dataclasses import dataclass

from ..geometry import (
    Segment,
    VerticalLine,
    dual_avoid_to_hourglass,
    dual_point_to_line,
    dual_segment_to_bowtie,
    line_meets_segment,
)
from .decide import EMPTY, decide_intersection


@dataclass(frozen=True)
class SasInstance:
    stab: tuple
    avoid: tuple

    def __init__(self, stab=(), avoid=()):
        object.__setattr__(self, "stab", tuple(stab))
        object.__setattr__(self, "avoid", tuple(avoid))
        for s in self.stab + self.avoid:
            if not isinstance(s, Segment):
                raise TypeError(f"expected Segment, got {type(s).__name__}")

    def wedges(self) -> list:
        return [dual_segment_to_bowtie(s) for s in self.stab] + [
            dual_avoid_to_hourglass(s) for s in self.avoid
        ]


def satisfies(instance: SasInstance, line) -> bool:
    """Literal primal check of a candidate line (vertical allowed)."""
    return all(line_meets_segment(line, s) for s in instance.stab) and not any(
        line_meets_segment(line, s) for s in instance.avoid
    )


def vertical_candidates(segments) -> list:
    xs = sorted({x for s in segments for x in (s.p.x, s.q.x)})
    if not xs:
        return [0]
    mids = [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    return sorted(set(xs) | set(mids) | {xs[0] - 1, xs[-1] + 1})


def vertical_stabber(instance: SasInstance):
    for t in vertical_candidates(instance.stab + instance.avoid):
        line = VerticalLine(t)
        if satisfies(instance, line):
            return line
    return None


def solve_sas(instance: SasInstance):
    """A :class:`Line`, a :class:`VerticalLine`, or None when no line works.

    Non-vertical lines are searched in the dual plane; vertical lines by a
    one-dimensional pass over the segment endpoint abscissae.  Any answer is
    re-verified against the primal predicates before it is returned.
    """
    witness = decide_intersection(instance.wedges())
    if witness is not EMPTY:
        line = dual_point_to_line(witness)
        if not satisfies(instance, line):
            raise RuntimeError(f"dual witness {line} fails the primal check")
        return line
    return vertical_stabber(instance)


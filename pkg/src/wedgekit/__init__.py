"""Exact double-wedge intersection and segment stabbing."""

from .geometry import (
    AntiSegment,
    DoubleWedge,
    Line,
    Parallel,
    Point,
    Segment,
    VerticalLine,
    contains,
    dual_antisegment_to_hourglass,
    dual_line_to_point,
    dual_point_to_line,
    dual_segment_to_bowtie,
    line_intersection,
    shear_to_bowties,
    traces,
)

__version__ = "0.1.0"

__all__ = [
    "AntiSegment",
    "DoubleWedge",
    "Line",
    "Parallel",
    "Point",
    "Segment",
    "VerticalLine",
    "contains",
    "dual_antisegment_to_hourglass",
    "dual_line_to_point",
    "dual_point_to_line",
    "dual_segment_to_bowtie",
    "line_intersection",
    "shear_to_bowties",
    "traces",
]

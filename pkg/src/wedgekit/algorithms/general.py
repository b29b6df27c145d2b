"""Arrangement-based intersection: quadratic, handles any mix of wedges."""

from __future__ import annotations

from ..arrangement import build_arrangement, components_of, depth_labels, select_cells
from .result import IntersectionResult


def _split_counts(wedges):
    bowties = sum(1 for d in wedges if d.is_bowtie)
    return bowties, len(wedges) - bowties


def threshold_cells(wedges, b: int, h: int):
    """Cells inside at least ``b`` bowties and ``h`` hourglasses, with components.

    Returns ``(arrangement, cells, count, witnesses)``.
    """
    wedges = list(wedges)
    nb, nh = _split_counts(wedges)
    if not (0 <= b <= nb and 0 <= h <= nh):
        raise ValueError(f"thresholds must satisfy 0 <= b <= {nb} and 0 <= h <= {nh}")
    arr = build_arrangement([line for d in wedges for line in d.lines])
    labels = depth_labels(arr, wedges)
    cells = select_cells(arr, labels, b, h)
    count, witnesses, _ = components_of(arr, cells)
    return arr, cells, count, witnesses


def intersect_general(wedges) -> IntersectionResult:
    """Cells of depth n in the arrangement of all 2n bounding lines."""
    wedges = list(wedges)
    nb, nh = _split_counts(wedges)
    arr, cells, count, witnesses = threshold_cells(wedges, nb, nh)
    return IntersectionResult(
        count,
        witnesses,
        "general",
        tuple(cells.faces.tolist()),
        tuple(cells.edges.tolist()),
        tuple(cells.vertices.tolist()),
        arrangement=arr,
    )

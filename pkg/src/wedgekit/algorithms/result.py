from __future__ import annotations

from dataclasses import dataclass, field

from ..geometry import Point
from ..jsonio import point_to_json


@dataclass
class IntersectionResult:
    """Common intersection of a wedge family.

    ``faces``/``edges``/``vertices`` are arrangement cell ids and stay empty for
    the envelope-based algorithms, which report ``convex_regions`` instead.
    """

    component_count: int
    witnesses: list
    algorithm: str
    faces: tuple = ()
    edges: tuple = ()
    vertices: tuple = ()
    convex_regions: list = None
    arrangement: object = field(default=None, repr=False, compare=False)

    @property
    def nonempty(self) -> bool:
        return self.component_count > 0

    @property
    def status(self) -> str:
        return "nonempty" if self.nonempty else "empty"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "component_count": self.component_count,
            "witnesses": [point_to_json(p) for p in self.witnesses],
            "witness_line": None,
            "algorithm": self.algorithm,
        }


def relabel(result: IntersectionResult, algorithm: str) -> IntersectionResult:
    return IntersectionResult(
        result.component_count,
        list(result.witnesses),
        algorithm,
        result.faces,
        result.edges,
        result.vertices,
        result.convex_regions,
        result.arrangement,
    )


def empty_result(algorithm: str) -> IntersectionResult:
    return IntersectionResult(0, [], algorithm)


def whole_plane(algorithm: str) -> IntersectionResult:
    return IntersectionResult(1, [Point(0, 0)], algorithm)

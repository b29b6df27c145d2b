from .bowties import intersect_bowties
from .coverage import ALL_BOWTIES, FULLY_COVERED, UNCOVERED, SlopeCoverage, find_uncovered_slope
from .decide import EMPTY, Empty, decide_intersection, intersect_via_shear
from .general import intersect_general, threshold_cells
from .overlay import intersect_parameterized
from .result import IntersectionResult
from .sas import SasInstance, satisfies, solve_sas

__all__ = [
    "ALL_BOWTIES",
    "EMPTY",
    "FULLY_COVERED",
    "UNCOVERED",
    "Empty",
    "IntersectionResult",
    "SasInstance",
    "SlopeCoverage",
    "decide_intersection",
    "find_uncovered_slope",
    "intersect_bowties",
    "intersect_general",
    "intersect_parameterized",
    "intersect_via_shear",
    "satisfies",
    "solve_sas",
    "threshold_cells",
]

"""JSON value encodings shared by every file format.

Rationals travel as canonical ``"num/den"`` strings (``"5"`` for integers).
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import AntiSegment, DoubleWedge, Line, Point, Segment, VerticalLine


class FormatError(ValueError):
    """Malformed instance or value encoding."""


def rational_to_json(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_json(value) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational: {value!r}") from exc
    raise FormatError(f"rationals must be strings or integers, got {value!r}")


def point_to_json(p: Point) -> list:
    return [rational_to_json(p.x), rational_to_json(p.y)]


def point_from_json(obj) -> Point:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise FormatError(f"point must be [x, y], got {obj!r}")
    return Point(rational_from_json(obj[0]), rational_from_json(obj[1]))


def line_to_json(line) -> dict:
    if isinstance(line, VerticalLine):
        return {"vertical": rational_to_json(line.x)}
    return {"a": rational_to_json(line.slope), "b": rational_to_json(line.intercept)}


def line_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError(f"line must be an object, got {obj!r}")
    if "vertical" in obj:
        return VerticalLine(rational_from_json(obj["vertical"]))
    try:
        return Line(rational_from_json(obj["a"]), rational_from_json(obj["b"]))
    except KeyError as exc:
        raise FormatError(f"line is missing key {exc}") from exc


def wedge_to_json(d: DoubleWedge) -> dict:
    out = {
        "l1": line_to_json(d.l1),
        "l2": line_to_json(d.l2),
        "parity": d.parity,
        "closed": d.closed,
    }
    if len(set(d.boundary)) > 1:
        out["boundary"] = list(d.boundary)
    return out


def wedge_from_json(obj) -> DoubleWedge:
    if not isinstance(obj, dict):
        raise FormatError(f"double-wedge must be an object, got {obj!r}")
    try:
        l1 = line_from_json(obj["l1"])
        l2 = line_from_json(obj["l2"])
        parity = obj["parity"]
    except KeyError as exc:
        raise FormatError(f"double-wedge is missing key {exc}") from exc
    if isinstance(l1, VerticalLine) or isinstance(l2, VerticalLine):
        raise FormatError("double-wedge bounding lines must be non-vertical")
    closed = obj.get("closed", True)
    boundary = obj.get("boundary")
    if not isinstance(closed, bool):
        raise FormatError("'closed' must be a boolean")
    try:
        return DoubleWedge(l1, l2, parity, closed=closed, boundary=boundary)
    except (ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from exc


def segment_to_json(s: Segment) -> dict:
    return {
        "p": point_to_json(s.p),
        "q": point_to_json(s.q),
        "include_p": s.include_p,
        "include_q": s.include_q,
    }


def segment_from_json(obj) -> Segment:
    if not isinstance(obj, dict):
        raise FormatError(f"segment must be an object, got {obj!r}")
    try:
        p = point_from_json(obj["p"])
        q = point_from_json(obj["q"])
    except KeyError as exc:
        raise FormatError(f"segment is missing key {exc}") from exc
    try:
        return Segment(p, q, bool(obj.get("include_p", True)), bool(obj.get("include_q", True)))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def element_to_json(e) -> dict:
    if isinstance(e, AntiSegment):
        return {"anti": True, "complement": segment_to_json(e.complement)}
    return segment_to_json(e)


def element_from_json(obj):
    if isinstance(obj, dict) and obj.get("anti"):
        return AntiSegment(segment_from_json(obj.get("complement")))
    return segment_from_json(obj)


def wedges_from_instance(obj) -> list:
    if not isinstance(obj, dict) or not isinstance(obj.get("wedges"), list):
        raise FormatError("instance must be an object with a 'wedges' list")
    return [wedge_from_json(w) for w in obj["wedges"]]

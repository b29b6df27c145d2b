"""Piecewise-linear envelopes merged by divide and conquer.

An envelope is ``(xs, pieces)``: sorted breakpoints and the ``(slope,
intercept)`` pair active on each of the ``len(xs) + 1`` intervals.
"""

from __future__ import annotations

from bisect import bisect_left


def _winners(la, lb, left, right, upper):
    """Pieces of max/min(la, lb) on the open interval (left, right)."""
    if la == lb:
        return [(la, right)]
    a1, b1 = la
    a2, b2 = lb
    if a1 == a2:
        return [((la if b1 > b2 else lb) if upper else (lb if b1 > b2 else la), right)]
    steep, flat = (la, lb) if a1 > a2 else (lb, la)
    after, before = (steep, flat) if upper else (flat, steep)
    xc = (b2 - b1) / (a1 - a2)
    if left is not None and xc <= left:
        return [(after, right)]
    if right is not None and xc >= right:
        return [(before, right)]
    return [(before, xc), (after, right)]


def merge(e1, e2, upper: bool):
    xs1, p1 = e1
    xs2, p2 = e2
    n1, n2 = len(xs1), len(xs2)
    i = j = 0
    left = None
    segs = []
    while True:
        xa = xs1[i] if i < n1 else None
        xb = xs2[j] if j < n2 else None
        if xa is None:
            right = xb
        elif xb is None:
            right = xa
        else:
            right = xa if xa < xb else xb
        for line, end in _winners(p1[i], p2[j], left, right, upper):
            if segs and segs[-1][0] == line:
                segs[-1] = (line, end)
            else:
                segs.append((line, end))
        if right is None:
            break
        if xa is not None and xa == right:
            i += 1
        if xb is not None and xb == right:
            j += 1
        left = right
    return [end for _, end in segs[:-1]], [line for line, _ in segs]


def envelope(parts, upper: bool):
    """Upper (``upper=True``) or lower envelope of a nonempty list of envelopes."""
    level = list(parts)
    if not level:
        raise ValueError("envelope of an empty family")
    while len(level) > 1:
        nxt = [merge(level[k], level[k + 1], upper) for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def piece_at(env, x, from_right: bool = False):
    """Active piece at ``x``; at a breakpoint pick the left or right piece."""
    xs, pieces = env
    k = bisect_left(xs, x)
    if from_right and k < len(xs) and xs[k] == x:
        k += 1
    return pieces[k]


def value_at(env, x):
    a, b = piece_at(env, x)
    return a * x + b


def crossings(e1, e2) -> list:
    """x-coordinates where two envelopes cross or touch at isolated points
    strictly inside a common linear interval."""
    xs = sorted(set(e1[0]) | set(e2[0]))
    bounds = [None] + xs + [None]
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        if lo is None and hi is None:
            s = 0
        elif lo is None:
            s = hi - 1
        elif hi is None:
            s = lo + 1
        else:
            s = (lo + hi) / 2
        a1, b1 = piece_at(e1, s)
        a2, b2 = piece_at(e2, s)
        if a1 == a2:
            continue
        r = (b2 - b1) / (a1 - a2)
        if (lo is None or r > lo) and (hi is None or r < hi):
            out.append(r)
    return out

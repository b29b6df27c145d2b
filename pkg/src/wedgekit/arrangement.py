"""DCEL of a line arrangement clipped to a rational bounding box.

Vertices are stored in homogeneous integer coordinates ``(X, Y, W)`` with
``W > 0`` and ``gcd(X, Y, W) = 1``; lines are scaled by a common denominator
``scale`` so that line ``i`` reads ``scale * y = A[i] * x + B[i]``.  Exact
:class:`~fractions.Fraction` points are produced on demand.

Half-edge ``h`` and ``h ^ 1`` are twins.  For a line edge, the even half-edge
runs left to right, so its incident face lies above the line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .geometry import Line, Point, contains

BOX = -1


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _canon(x: int, y: int, w: int) -> tuple:
    if w < 0:
        x, y, w = -x, -y, -w
    g = math.gcd(x, y, w)
    if g > 1:
        x, y, w = x // g, y // g, w // g
    return x, y, w


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class Arrangement:
    """Planarized arrangement of distinct non-vertical lines inside a box."""

    def __init__(self, lines: Iterable[Line]):
        self.input_lines = list(lines)
        index: dict = {}
        self.lines: list = []
        self.sources: list = []
        for k, line in enumerate(self.input_lines):
            key = (line.slope, line.intercept)
            if key not in index:
                index[key] = len(self.lines)
                self.lines.append(line)
                self.sources.append([])
            self.sources[index[key]].append(k)
        self._index = index
        self.multiplicity = [len(s) for s in self.sources]
        scale = 1
        for line in self.lines:
            scale = _lcm(scale, line.slope.denominator)
            scale = _lcm(scale, line.intercept.denominator)
        self.scale = scale
        self.A = [int(line.slope * scale) for line in self.lines]
        self.B = [int(line.intercept * scale) for line in self.lines]
        self._build()

    # construction ---------------------------------------------------------

    def _build(self):
        m = len(self.lines)
        A, B, S = self.A, self.B, self.scale
        vx: list = []
        vy: list = []
        vw: list = []
        vindex: dict = {}
        on_line = [[] for _ in range(m)]
        for i in range(m):
            ai, bi = A[i], B[i]
            li = on_line[i]
            for j in range(i + 1, m):
                d = ai - A[j]
                if d == 0:
                    continue
                bj = B[j]
                key = _canon(S * (bj - bi), ai * bj - A[j] * bi, S * d)
                v = vindex.get(key)
                if v is None:
                    v = len(vx)
                    vindex[key] = v
                    vx.append(key[0])
                    vy.append(key[1])
                    vw.append(key[2])
                li.append(v)
                on_line[j].append(v)
        del vindex
        self.n_interior_vertices = n_int = len(vx)

        # bounding box with margin >= 1 around every vertex and every line's
        # values at the vertical sides, so lines only leave through the sides
        if n_int:
            x_lo = min(x // w for x, w in zip(vx, vw)) - 1
            x_hi = max(_ceil_div(x, w) for x, w in zip(vx, vw)) + 1
            y_lo = min(y // w for y, w in zip(vy, vw))
            y_hi = max(_ceil_div(y, w) for y, w in zip(vy, vw))
        else:
            x_lo, x_hi, y_lo, y_hi = -1, 1, 0, 0
        for a, b in zip(A, B):
            for xs in (x_lo, x_hi):
                num = a * xs + b
                y_lo = min(y_lo, num // S)
                y_hi = max(y_hi, _ceil_div(num, S))
        y_lo -= 1
        y_hi += 1
        self.box = (Fraction(x_lo), Fraction(x_hi), Fraction(y_lo), Fraction(y_hi))

        def new_vertex(x, y, w):
            x, y, w = _canon(x, y, w)
            vx.append(x)
            vy.append(y)
            vw.append(w)
            return len(vx) - 1

        left = [new_vertex(S * x_lo, a * x_lo + b, S) for a, b in zip(A, B)]
        right = [new_vertex(S * x_hi, a * x_hi + b, S) for a, b in zip(A, B)]
        bl = new_vertex(x_lo, y_lo, 1)
        br = new_vertex(x_hi, y_lo, 1)
        tr = new_vertex(x_hi, y_hi, 1)
        tl = new_vertex(x_lo, y_hi, 1)
        self.vx, self.vy, self.vw = vx, vy, vw
        xf = [x / w for x, w in zip(vx, vw)]
        self._xf = xf

        edge_u: list = []
        edge_v: list = []
        edge_line: list = []
        line_vertices = []
        line_edge_start = []
        for i in range(m):
            verts = sorted(set(on_line[i]), key=xf.__getitem__)
            verts = self._fix_float_ties(verts, xf)
            seq = [left[i]] + verts + [right[i]]
            line_vertices.append(seq)
            line_edge_start.append(len(edge_u))
            edge_u.extend(seq[:-1])
            edge_v.extend(seq[1:])
            edge_line.extend([i] * (len(seq) - 1))
        self.n_line_edges = len(edge_u)

        def side_chain(points, corner_lo, corner_hi):
            ordered = sorted(points, key=lambda v: Fraction(vy[v], vw[v]))
            chain = [corner_lo] + ordered + [corner_hi]
            edge_u.extend(chain[:-1])
            edge_v.extend(chain[1:])
            edge_line.extend([BOX] * (len(chain) - 1))

        side_chain(left, bl, tl)
        side_chain(right, br, tr)
        self.bottom_edge = len(edge_u)
        edge_u.append(bl)
        edge_v.append(br)
        edge_line.append(BOX)
        edge_u.append(tl)
        edge_v.append(tr)
        edge_line.append(BOX)

        self.line_vertices = line_vertices
        self.line_edge_start = line_edge_start
        self.edge_u = np.asarray(edge_u, dtype=np.int64)
        self.edge_v = np.asarray(edge_v, dtype=np.int64)
        self.edge_line = np.asarray(edge_line, dtype=np.int64)
        self._wire()

    def _fix_float_ties(self, verts, xf):
        """Exact re-sort of runs whose float keys collide."""
        n = len(verts)
        k = 0
        while k < n:
            j = k + 1
            while j < n and xf[verts[j]] == xf[verts[k]]:
                j += 1
            if j - k > 1:
                verts[k:j] = sorted(verts[k:j], key=lambda v: Fraction(self.vx[v], self.vw[v]))
            k = j
        return verts

    def _wire(self):
        E = len(self.edge_u)
        H = 2 * E
        origin = np.empty(H, dtype=np.int64)
        origin[0::2] = self.edge_u
        origin[1::2] = self.edge_v
        self.origin = origin
        hline = np.repeat(self.edge_line, 2)

        # angular key: 0 down, 1 rightward (by slope rank), 2 up, 3 leftward
        slopes = sorted(set(self.A))
        rank_of = {a: r for r, a in enumerate(slopes)}
        rank = np.array([rank_of[a] for a in self.A] + [0], dtype=np.int64)
        code = np.empty(H, dtype=np.int64)
        is_line = hline >= 0
        code[0::2] = np.where(self.edge_line >= 0, 1, 2)
        code[1::2] = np.where(self.edge_line >= 0, 3, 0)
        # horizontal box edges (bottom, top) are rightward / leftward
        for e in (self.bottom_edge, self.bottom_edge + 1):
            code[2 * e] = 1
            code[2 * e + 1] = 3
        key = code * (len(slopes) + 1) + np.where(is_line, rank[hline], 0)

        order = np.lexsort((key, origin))
        org_sorted = origin[order]
        starts = np.flatnonzero(np.r_[True, org_sorted[1:] != org_sorted[:-1]])
        ends = np.r_[starts[1:], H]
        prev_pos = np.arange(H) - 1
        prev_pos[starts] = ends - 1
        nxt = np.empty(H, dtype=np.int64)
        nxt[order ^ 1] = order[prev_pos]
        prv = np.empty(H, dtype=np.int64)
        prv[nxt] = np.arange(H)
        self.next = nxt
        self.prev = prv
        self._out_order = order
        self._out_start = np.empty(len(self.vx) + 1, dtype=np.int64)
        self._out_start[org_sorted[starts]] = starts
        self._out_start[-1] = H

        graph = coo_matrix((np.ones(H, dtype=np.int8), (np.arange(H), nxt)), shape=(H, H))
        _, labels = connected_components(graph, directed=True, connection="weak")
        uniq, first = np.unique(labels, return_index=True)
        # renumber faces by their lowest half-edge for determinism
        rank_faces = np.empty(len(uniq), dtype=np.int64)
        rank_faces[np.argsort(first, kind="stable")] = np.arange(len(uniq))
        self.face = rank_faces[labels]
        self.face_edge = np.sort(first)
        self.outer_face = int(self.face[2 * self.bottom_edge + 1])

    # sizes ------------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vx)

    @property
    def num_edges(self) -> int:
        return len(self.edge_u)

    @property
    def num_faces(self) -> int:
        return len(self.face_edge)

    def is_box_vertex(self, v: int) -> bool:
        return v >= self.n_interior_vertices

    def line_id(self, line: Line) -> int:
        try:
            return self._index[(line.slope, line.intercept)]
        except KeyError:
            raise KeyError(f"line y = {line.slope}x + {line.intercept} is not in the arrangement") from None

    def outgoing(self, v: int) -> np.ndarray:
        """Outgoing half-edges of ``v`` in counter-clockwise order."""
        return self._out_order[self._out_start[v] : self._out_start[v + 1]]

    def face_cycle(self, f: int) -> list:
        start = int(self.face_edge[f])
        cycle = [start]
        h = int(self.next[start])
        while h != start:
            cycle.append(h)
            h = int(self.next[h])
        return cycle

    # exact coordinates -----------------------------------------------------

    def vertex_point(self, v: int) -> Point:
        w = self.vw[v]
        return Point(Fraction(self.vx[v], w), Fraction(self.vy[v], w))

    def edge_midpoint(self, e: int) -> Point:
        p = self.vertex_point(int(self.edge_u[e]))
        q = self.vertex_point(int(self.edge_v[e]))
        return Point((p.x + q.x) / 2, (p.y + q.y) / 2)

    def face_sample(self, f: int) -> Point:
        """Centroid of the first three boundary vertices (faces are strictly convex)."""
        cycle = self.face_cycle(f)
        pts = [self.vertex_point(int(self.origin[h])) for h in cycle[:3]]
        return Point(sum(p.x for p in pts) / 3, sum(p.y for p in pts) / 3)

    def stats(self) -> dict:
        return {"vertices": self.num_vertices, "edges": self.num_edges, "faces": self.num_faces}

    # audits ---------------------------------------------------------------

    def audit(self) -> None:
        """Structural checks: twins, next/prev, face cycles, Euler relation."""
        H = len(self.origin)
        idx = np.arange(H)
        assert np.array_equal((idx ^ 1) ^ 1, idx)
        assert np.array_equal(self.prev[self.next], idx), "prev(next(h)) != h"
        assert np.array_equal(self.next[self.prev], idx), "next(prev(h)) != h"
        # next(h) starts where h ends
        assert np.array_equal(self.origin[self.next], self.origin[idx ^ 1]), "next(h) does not start at target(h)"
        assert np.array_equal(self.face[self.next], self.face), "next(h) leaves the face"
        V, E, F = self.num_vertices, self.num_edges, self.num_faces
        assert V - E + F == 2, f"Euler relation fails: V={V} E={E} F={F}"
        for f in range(F):
            if f == self.outer_face:
                continue
            cycle = self.face_cycle(f)
            pts = [self.vertex_point(int(self.origin[h])) for h in cycle]
            area2 = sum(p.x * q.y - q.x * p.y for p, q in zip(pts, pts[1:] + pts[:1]))
            assert area2 > 0, f"inner face {f} is not counter-clockwise"


def build_arrangement(lines: Iterable[Line]) -> Arrangement:
    return Arrangement(lines)


# depth labels ---------------------------------------------------------------


@dataclass
class DepthLabels:
    """Per-cell counts of containing wedges; ``-1`` marks outer face / box cells."""

    face_depth: np.ndarray
    edge_depth: np.ndarray
    vertex_depth: np.ndarray
    face_bowtie: np.ndarray
    face_hourglass: np.ndarray
    edge_bowtie: np.ndarray
    edge_hourglass: np.ndarray
    vertex_bowtie: np.ndarray
    vertex_hourglass: np.ndarray


class _Owner(NamedTuple):
    wedge: int
    which: int  # 0: the line is l1 of the wedge, 1: l2
    other: int  # arrangement id of the wedge's other bounding line
    pos: int  # index of the wedge origin in line_vertices of this line


def _wedge_owners(arr: Arrangement, wedges) -> list:
    owners = [[] for _ in arr.lines]
    ids = []
    for w, d in enumerate(wedges):
        try:
            ids.append((arr.line_id(d.l1), arr.line_id(d.l2)))
        except KeyError as exc:
            raise ValueError(f"wedge {w} does not match the arrangement: {exc}") from None
    for w, (i1, i2) in enumerate(ids):
        for which, (here, other) in enumerate(((i1, i2), (i2, i1))):
            owners[here].append(_Owner(w, which, other, _origin_position(arr, here, other)))
    unused = [i for i, o in enumerate(owners) if not o]
    if unused:
        raise ValueError(f"arrangement lines {unused} bound no wedge")
    return owners


def _origin_position(arr: Arrangement, i: int, j: int) -> int:
    """Index in ``line_vertices[i]`` of the crossing of lines ``i`` and ``j``."""
    A, B = arr.A, arr.B
    xc = Fraction(B[j] - B[i], A[i] - A[j])
    seq = arr.line_vertices[i]
    lo, hi = 1, len(seq) - 2
    while lo <= hi:
        mid = (lo + hi) // 2
        v = seq[mid]
        xv = Fraction(arr.vx[v], arr.vw[v])
        if xv == xc:
            return mid
        if xv < xc:
            lo = mid + 1
        else:
            hi = mid - 1
    raise AssertionError("wedge origin missing from the arrangement")


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def depth_labels(arr: Arrangement, wedges) -> DepthLabels:
    """Depth of every face, edge and vertex, propagated over the planar dual."""
    wedges = list(wedges)
    owners = _wedge_owners(arr, wedges)
    A = arr.A
    E = arr.num_edges
    F = arr.num_faces
    n_le = arr.n_line_edges

    # for every line edge: owner memberships of the face above, per kind
    in_above_b = np.zeros(n_le, dtype=np.int64)
    in_above_h = np.zeros(n_le, dtype=np.int64)
    bits_b = np.zeros(n_le, dtype=np.int64)
    bits_h = np.zeros(n_le, dtype=np.int64)
    n_owned = np.zeros(n_le, dtype=np.int64)
    for i, own in enumerate(owners):
        start = arr.line_edge_start[i]
        count = len(arr.line_vertices[i]) - 1
        k = np.arange(count)
        sl = slice(start, start + count)
        for o in own:
            d = wedges[o.wedge]
            sigma_other = _sgn(A[i] - A[o.other]) * np.where(k >= o.pos, 1, -1)
            inside = (sigma_other == d.parity).astype(np.int64)
            bit = int(d.boundary[o.which])
            if d.is_bowtie:
                in_above_b[sl] += inside
                bits_b[sl] += bit
            else:
                in_above_h[sl] += inside
                bits_h[sl] += bit
            n_owned[sl] += 1
    owners_b = np.zeros(n_le, dtype=np.int64)
    for i, own in enumerate(owners):
        start = arr.line_edge_start[i]
        count = len(arr.line_vertices[i]) - 1
        owners_b[start : start + count] = sum(1 for o in own if wedges[o.wedge].is_bowtie)
    owners_h = n_owned - owners_b
    delta_b = 2 * in_above_b - owners_b
    delta_h = 2 * in_above_h - owners_h

    above = arr.face[0 : 2 * n_le : 2]
    below = arr.face[1 : 2 * n_le : 2]

    face_b = np.full(F, -1, dtype=np.int64)
    face_h = np.full(F, -1, dtype=np.int64)
    f0 = 0 if arr.outer_face != 0 else 1
    seed = arr.face_sample(f0)
    face_b[f0] = sum(1 for d in wedges if d.is_bowtie and contains(d, seed))
    face_h[f0] = sum(1 for d in wedges if d.is_hourglass and contains(d, seed))
    if n_le:
        rows = np.r_[below, above]
        cols = np.r_[above, below]
        graph = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(F, F))
        order, pred = breadth_first_order(graph, f0, directed=True, return_predecessors=True)
        pair_key = rows * F + cols
        sort_idx = np.argsort(pair_key, kind="stable")
        sorted_keys = pair_key[sort_idx]
        db = np.r_[delta_b, -delta_b][sort_idx]
        dh = np.r_[delta_h, -delta_h][sort_idx]
        nodes = order[1:]
        loc = np.searchsorted(sorted_keys, pred[nodes] * F + nodes)
        step_b = db[loc].tolist()
        step_h = dh[loc].tolist()
        pred_l = pred[nodes].tolist()
        nodes_l = nodes.tolist()
        fb = face_b.tolist()
        fh = face_h.tolist()
        for node, p, sb, sh in zip(nodes_l, pred_l, step_b, step_h):
            fb[node] = fb[p] + sb
            fh[node] = fh[p] + sh
        face_b = np.array(fb, dtype=np.int64)
        face_h = np.array(fh, dtype=np.int64)
    face_b[arr.outer_face] = -1
    face_h[arr.outer_face] = -1

    edge_b = np.full(E, -1, dtype=np.int64)
    edge_h = np.full(E, -1, dtype=np.int64)
    edge_b[:n_le] = face_b[above] - in_above_b + bits_b
    edge_h[:n_le] = face_h[above] - in_above_h + bits_h

    vert_b, vert_h = _vertex_depths(arr, wedges, owners, edge_b, edge_h)
    return DepthLabels(
        face_depth=face_b + face_h + (face_b < 0),
        edge_depth=edge_b + edge_h + (edge_b < 0),
        vertex_depth=vert_b + vert_h + (vert_b < 0),
        face_bowtie=face_b,
        face_hourglass=face_h,
        edge_bowtie=edge_b,
        edge_hourglass=edge_h,
        vertex_bowtie=vert_b,
        vertex_hourglass=vert_h,
    )


def _vertex_depths(arr, wedges, owners, edge_b, edge_h):
    """Vertex depth = depth of an incident edge corrected for wedges whose
    bounding lines pass through the vertex."""
    V = arr.num_vertices
    n_int = arr.n_interior_vertices
    vb = np.full(V, -1, dtype=np.int64)
    vh = np.full(V, -1, dtype=np.int64)
    if n_int == 0:
        return vb, vh
    A, B = arr.A, arr.B
    vx, vw = arr.vx, arr.vw
    hline = arr.edge_line
    order = arr._out_order
    start = arr._out_start
    eb = edge_b.tolist()
    eh = edge_h.tolist()
    parities = [d.parity for d in wedges]
    bowtie = [d.is_bowtie for d in wedges]
    bounds = [d.boundary for d in wedges]
    out_b = vb.tolist()
    out_h = vh.tolist()
    starts = start.tolist()
    ord_l = order.tolist()
    hline_l = hline.tolist()
    for v in range(n_int):
        hs = ord_l[starts[v] : starts[v + 1]]
        h0 = hs[0]
        e0 = h0 >> 1
        l0 = hline_l[e0]
        direction = 1 if h0 % 2 == 0 else -1
        through = {hline_l[h >> 1] for h in hs}
        db = eb[e0]
        dh = eh[e0]
        x_num, x_den = vx[v], vw[v]
        seen = set()
        for li in through:
            for o in owners[li]:
                w = o.wedge
                if w in seen:
                    continue
                seen.add(w)
                both = o.other in through
                at_vertex = bounds[w][2] if both else bounds[w][o.which]
                if li == l0 or o.other == l0:
                    on_edge = bounds[w][o.which if li == l0 else 1 - o.which]
                else:
                    s_here = _sgn(A[l0] - A[li]) * direction
                    m = o.other
                    if both:
                        s_other = _sgn(A[l0] - A[m]) * direction
                    elif A[m] == A[l0]:
                        s_other = _sgn(B[l0] - B[m])
                    else:
                        # side of m along l0 near v: sign(a0 - am) * sign(x_v - x_cross)
                        dm = A[l0] - A[m]
                        s_other = _sgn(x_num * dm - x_den * (B[m] - B[l0]))
                    on_edge = s_here * s_other == parities[w]
                delta = int(at_vertex) - int(on_edge)
                if bowtie[w]:
                    db += delta
                else:
                    dh += delta
        out_b[v] = db
        out_h[v] = dh
    return np.array(out_b, dtype=np.int64), np.array(out_h, dtype=np.int64)


# selection and components ------------------------------------------------------


@dataclass
class CellSet:
    faces: np.ndarray
    edges: np.ndarray
    vertices: np.ndarray

    @classmethod
    def empty(cls):
        z = np.zeros(0, dtype=np.int64)
        return cls(z, z, z)

    def is_empty(self) -> bool:
        return len(self.faces) == 0 and len(self.edges) == 0 and len(self.vertices) == 0


def select_cells(arr: Arrangement, labels: DepthLabels, bowties: int, hourglasses: int) -> CellSet:
    """Cells with at least the given bowtie and hourglass depths."""
    faces = np.flatnonzero((labels.face_bowtie >= bowties) & (labels.face_hourglass >= hourglasses))
    edges = np.flatnonzero((labels.edge_bowtie >= bowties) & (labels.edge_hourglass >= hourglasses))
    verts = np.flatnonzero((labels.vertex_bowtie >= bowties) & (labels.vertex_hourglass >= hourglasses))
    faces = faces[faces != arr.outer_face]
    edges = edges[arr.edge_line[edges] >= 0]
    verts = verts[verts < arr.n_interior_vertices]
    return CellSet(faces, edges, verts)


def cell_point(arr: Arrangement, kind: str, idx: int) -> Point:
    if kind == "face":
        return arr.face_sample(idx)
    if kind == "edge":
        return arr.edge_midpoint(idx)
    return arr.vertex_point(idx)


def components_of(arr: Arrangement, selected: CellSet):
    """Connected components of the union of the selected cells.

    Two cells are adjacent when one lies in the closure of the other
    (face-edge, face-vertex, edge-vertex).  Returns ``(count, witnesses,
    representatives)`` where each representative is ``(kind, id)`` with faces
    preferred over edges over vertices.
    """
    F, E, V = arr.num_faces, arr.num_edges, arr.num_vertices
    sel = np.zeros(F + E + V, dtype=bool)
    sel[selected.faces] = True
    sel[F + selected.edges] = True
    sel[F + E + selected.vertices] = True
    H = len(arr.origin)
    hedge = np.arange(H)
    n_le = arr.n_line_edges
    line_h = hedge[: 2 * n_le]
    a = np.r_[arr.face[line_h], F + (line_h >> 1), arr.face]
    b = np.r_[F + (line_h >> 1), F + E + arr.origin[line_h], F + E + arr.origin]
    keep = sel[a] & sel[b]
    a, b = a[keep], b[keep]
    N = F + E + V
    graph = coo_matrix((np.ones(len(a), dtype=np.int8), (a, b)), shape=(N, N))
    _, labels = connected_components(graph, directed=False)
    nodes = np.flatnonzero(sel)
    comp_labels = labels[nodes]
    # nodes are ordered faces < edges < vertices, so the first node per label
    # is the preferred representative
    uniq, first = np.unique(comp_labels, return_index=True)
    reps = []
    for node in sorted(nodes[first].tolist()):
        if node < F:
            reps.append(("face", node))
        elif node < F + E:
            reps.append(("edge", node - F))
        else:
            reps.append(("vertex", node - F - E))
    witnesses = [cell_point(arr, kind, idx) for kind, idx in reps]
    return len(reps), witnesses, reps

"""Combed planar-subdivision backend: intervals become horizontal segments,
the plane is cut into axis-parallel rectangular cells, and a query walks
straight down the line x = q reporting each segment it crosses.

Geometry lives on a "fine" doubled grid: endpoint grid coordinate g sits at
fine coordinate 2*g, and every segment is fattened by one fine unit on each
side ([2*x_lo - 1, 2*x_hi + 1]).  Walls therefore sit on odd fine
coordinates while query verticals sit on even ones, so a query line never
coincides with a wall and closed-interval stabbing (including point
intervals and exact endpoint hits) is an ordinary proper crossing.

Construction is wall-based rather than sweep-based.  Every vertical wall is
recorded only by the segment it hangs from (its upper attachment); walls
hanging from a segment partition the space directly underneath it into
cells.  Phase 1 drops walls from each segment's endpoints and raises walls
from them to the first segment above.  Phase 2 (combing) processes segments
bottom-up and continues every second interior wall upward through the
segment, which caps the number of cells adjacent below any cell while
keeping the total wall count linear.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .core import (
    Sentinel,
    BEFORE_ALL,
    build_rank_map,
    map_query,
    to_segments,
    weight_token,
)

DEGREE_CAP = 4   # max bottom edges per cell after combing
SIZE_CAP = 12    # cells <= SIZE_CAP * n + 4
WALK_CAP = 6     # cells visited <= WALK_CAP * (reported + 1)

NEG_INF = -math.inf
POS_INF = math.inf


@dataclass
class WalkStats:
    cells_visited: int = 0
    locate_comparisons: int = 0


class Cell:
    """One rectangular cell.  x-sides are fine coordinates (outermost cells
    are open, with +-inf).  `top` / bottom-edge segment labels are interval
    ids, or None for SKY / GROUND.  Each bottom edge is
    (x_from, x_to, segment_or_None, cell_below_or_None)."""

    __slots__ = ("x_lo", "x_hi", "top", "bottom_edges")

    def __init__(self, x_lo, x_hi, top):
        self.x_lo = x_lo
        self.x_hi = x_hi
        self.top = top
        self.bottom_edges = []

    def __repr__(self):
        return "Cell(%r, %r, top=%r, edges=%r)" % (
            self.x_lo, self.x_hi, self.top, self.bottom_edges)


class Hive:
    __slots__ = ("intervals", "rank_map", "segments", "cells",
                 "top_positions", "top_cells", "lookup", "_by_id")

    def __init__(self, intervals, rank_map, segments, cells,
                 top_positions, top_cells, lookup):
        self.intervals = intervals
        self.rank_map = rank_map
        self.segments = segments
        # top_positions are the finite slab boundaries; top cell i covers
        # (top_positions[i-1], top_positions[i]), with open outer slabs.
        self.top_positions = top_positions
        self.top_cells = top_cells
        self.cells = cells
        self.lookup = lookup
        self._by_id = {iv.id: iv for iv in intervals}


class _StabIndex:
    """Which alive segment level covers fine coordinate x.

    Levels are retired by a monotone threshold: ascending mode answers the
    lowest level above the threshold, descending mode the highest level
    below it.  Per-node cursors make the retirements amortized O(1); a query
    walks one leaf-to-root path.
    """

    __slots__ = ("offset", "size", "lists", "heads", "descending")

    def __init__(self, spans, lo, hi, descending=False):
        self.offset = -lo
        width = hi - lo + 1
        size = 1
        while size < width:
            size *= 2
        self.size = size
        self.lists = {}
        self.heads = {}
        self.descending = descending
        order = range(len(spans) - 1, -1, -1) if descending else range(len(spans))
        lists = self.lists
        for lv in order:
            a, b = spans[lv]
            l = a + self.offset + size
            r = b + self.offset + size + 1
            while l < r:
                if l & 1:
                    lists.setdefault(l, []).append(lv)
                    l += 1
                if r & 1:
                    r -= 1
                    lists.setdefault(r, []).append(lv)
                l >>= 1
                r >>= 1

    def query(self, x, threshold):
        node = x + self.offset + self.size
        best = None
        lists = self.lists
        heads = self.heads
        desc = self.descending
        while node >= 1:
            lst = lists.get(node)
            if lst:
                h = heads.get(node, 0)
                nlen = len(lst)
                if desc:
                    while h < nlen and lst[h] >= threshold:
                        h += 1
                else:
                    while h < nlen and lst[h] <= threshold:
                        h += 1
                heads[node] = h
                if h < nlen:
                    v = lst[h]
                    if best is None or (v > best if desc else v < best):
                        best = v
            node >>= 1
        return best


def build_hive(intervals, with_lookup=False) -> Hive:
    """Build the subdivision; all structural invariants are asserted here."""
    intervals = list(intervals)
    n = len(intervals)
    if len({iv.id for iv in intervals}) != n:
        raise ValueError("interval ids must be unique")
    rm = build_rank_map(intervals)
    segments = to_segments(intervals, rm)

    if n == 0:
        cell = Cell(NEG_INF, POS_INF, None)
        cell.bottom_edges = [(NEG_INF, POS_INF, None, None)]
        lookup = [] if with_lookup else None
        return Hive(intervals, rm, segments, [cell], [], [0], lookup)

    # Vertical order: level 0 is the lowest segment, level n-1 the highest.
    by_level = sorted(segments,
                      key=lambda s: weight_token(s.ykey.w, s.ykey.id),
                      reverse=True)
    spans = [(2 * s.x_lo - 1, 2 * s.x_hi + 1) for s in by_level]
    lo_all = min(a for a, _ in spans)
    hi_all = max(b for _, b in spans)

    SKY = n
    hang = [[a, b] for a, b in spans]  # endpoint walls hang from the segment itself
    hang.append([])  # SKY

    above = _StabIndex(spans, lo_all, hi_all, descending=False)
    for lv in range(n):
        flo, fhi = spans[lv]
        pos = sorted(set(hang[lv]))
        assert pos[0] == flo and pos[-1] == fhi, "wall outside its segment span"
        hang[lv] = pos
        # walls raised from this segment's endpoints
        for x in (flo, fhi):
            t = above.query(x, lv)
            hang[SKY if t is None else t].append(x)
        # combing: continue every second interior wall upward
        for x in pos[1:-1][1::2]:
            t = above.query(x, lv)
            hang[SKY if t is None else t].append(x)
    hang[SKY] = sorted(set(hang[SKY]))

    # Cells, created top-down so the "first segment below" index can retire
    # levels monotonically.
    below = _StabIndex(spans, lo_all, hi_all, descending=True)
    cells = []
    cell_bottom_level = []
    under = {}  # level -> (bounds, first cell index)
    for t in range(n, -1, -1):  # n is SKY
        if t == SKY:
            bounds = [NEG_INF] + hang[SKY] + [POS_INF]
            top_label = None
        else:
            bounds = hang[t]
            top_label = by_level[t].interval_id
        under[t] = (bounds, len(cells))
        for a, b in zip(bounds, bounds[1:]):
            if a == NEG_INF:
                mid = (b - 1) if b != POS_INF else 0
            elif b == POS_INF:
                mid = a + 1
            else:
                mid = (a + b) // 2
            cells.append(Cell(a, b, top_label))
            cell_bottom_level.append(below.query(mid, t))

    # Bottom edges and links into the cells directly underneath.
    for ci, cell in enumerate(cells):
        bl = cell_bottom_level[ci]
        if bl is None:
            cell.bottom_edges = [(cell.x_lo, cell.x_hi, None, None)]
            continue
        bounds, start = under[bl]
        seg_id = by_level[bl].interval_id
        assert bounds[0] <= cell.x_lo and cell.x_hi <= bounds[-1]
        i = bisect.bisect_right(bounds, cell.x_lo)
        j = bisect.bisect_left(bounds, cell.x_hi)
        xs = [cell.x_lo] + bounds[i:j] + [cell.x_hi]
        edges = []
        for a, b in zip(xs, xs[1:]):
            idx = bisect.bisect_right(bounds, a) - 1
            assert bounds[idx] <= a and b <= bounds[idx + 1]
            edges.append((a, b, seg_id, start + idx))
        cell.bottom_edges = edges

    top_positions = hang[SKY]
    sky_start = under[SKY][1]
    top_cells = list(range(sky_start, sky_start + len(top_positions) + 1))

    lookup = None
    if with_lookup:
        lookup = [_locate(top_positions, top_cells, 2 * gx)[0]
                  for gx in range(rm.grid_width)]

    hive = Hive(intervals, rm, segments, cells, top_positions, top_cells, lookup)
    _validate(hive, n)
    return hive


def _validate(hive, n):
    cells = hive.cells
    assert len(cells) <= SIZE_CAP * n + 4, \
        "%d cells for n=%d" % (len(cells), n)
    for cell in cells:
        edges = cell.bottom_edges
        assert 1 <= len(edges) <= DEGREE_CAP
        assert edges[0][0] == cell.x_lo and edges[-1][1] == cell.x_hi
        for (a, b, seg, below_id), nxt in zip(edges, edges[1:]):
            assert b == nxt[0], "bottom edges not contiguous"
        for a, b, seg, below_id in edges:
            assert a < b
            if seg is None:
                assert below_id is None
            else:
                target = cells[below_id]
                assert target.top == seg
                assert target.x_lo <= a and b <= target.x_hi


def _locate(positions, top_cells, fine):
    """Binary search over the top-slab boundaries; returns (cell, probes)."""
    lo, hi = 0, len(positions)
    comparisons = 0
    while lo < hi:
        mid = (lo + hi) // 2
        comparisons += 1
        if positions[mid] < fine:
            lo = mid + 1
        else:
            hi = mid
    return top_cells[lo], comparisons


def locate_top(hive: Hive, x0):
    """Top cell containing (x0, +inf); sentinels resolve to the outer slabs."""
    stats = WalkStats()
    if isinstance(x0, Sentinel):
        cell = hive.top_cells[0] if x0 is BEFORE_ALL else hive.top_cells[-1]
        return cell, stats
    cell, stats.locate_comparisons = _locate(
        hive.top_positions, hive.top_cells, 2 * x0)
    return cell, stats


def locate_top_table(hive: Hive, x0):
    """O(1) cell location via the rank-space lookup table (single read)."""
    if hive.lookup is None:
        raise RuntimeError("hive was built without the lookup table")
    return hive.lookup[x0]


def walk_down(hive: Hive, start_cell, x0, k):
    """From start_cell, walk straight down x = x0 reporting up to k crossed
    segments (strictly descending weight)."""
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    stats = WalkStats()
    fine = 2 * x0
    out = []
    cells = hive.cells
    cell = cells[start_cell]
    while True:
        stats.cells_visited += 1
        hit = None
        for edge in cell.bottom_edges:
            if edge[0] < fine < edge[1]:
                hit = edge
                break
        assert hit is not None, "query line missed every bottom edge"
        if hit[2] is None:  # GROUND
            break
        out.append(hive._by_id[hit[2]])
        if len(out) == k:
            break
        cell = cells[hit[3]]
    return out, stats


def query_hive(hive: Hive, q, k):
    """Locate (table when available) then walk; matches the oracle exactly."""
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    x0 = map_query(hive.rank_map, q)
    if isinstance(x0, Sentinel):
        return [], WalkStats()
    if hive.lookup is not None:
        start = hive.lookup[x0]
        out, stats = walk_down(hive, start, x0, k)
    else:
        start, lstats = locate_top(hive, x0)
        out, stats = walk_down(hive, start, x0, k)
        stats.locate_comparisons = lstats.locate_comparisons
    return out, stats


def dump_hive(hive: Hive) -> str:
    """Line-oriented debug dump of the subdivision (stable format)."""

    def xfmt(x):
        if x == NEG_INF:
            return "-inf"
        if x == POS_INF:
            return "+inf"
        return str(x)

    lines = []
    for ci, cell in enumerate(hive.cells):
        top = "SKY" if cell.top is None else str(cell.top)
        bottom = "".join(
            "(%s:%s,%s)" % (xfmt(a), xfmt(b), "GROUND" if seg is None else seg)
            for a, b, seg, _ in cell.bottom_edges)
        lines.append("cell %d %s %s top=%s bottom=%s"
                     % (ci, xfmt(cell.x_lo), xfmt(cell.x_hi), top, bottom))
    return "\n".join(lines) + "\n"

"""Segment-tree backend: canonical arrays sorted by weight, queried by a
bounded max-heap merge along the search path.

Intervals are inserted in descending weight order, so every node's canonical
array comes out sorted without a per-node sort.  A query walks the root-to-
leaf path for the grid position of q, seeds a max heap with the head of each
nonempty array on the path, then alternates pop-report / push-successor.
The heap never outgrows the path, so each report costs O(log log n).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .core import Sentinel, build_rank_map, map_endpoint, map_query, weight_token


@dataclass
class QueryStats:
    """Counters used to assert the query-time bounds empirically."""

    heap_pushes: int = 0
    heap_pops: int = 0
    max_heap_size: int = 0
    path_length: int = 0


class SegTree:
    """Static segment tree over the even/odd endpoint grid.

    Leaves are single grid coordinates 0..grid_width-1 (padded to a power of
    two); node v's canonical array holds the ids of intervals whose grid range
    covers v's slab but not the parent's, in descending weight order.
    """

    __slots__ = ("intervals", "rank_map", "size", "canonical", "total_stored", "_by_id")

    def __init__(self, intervals, rank_map, size, canonical, total_stored):
        self.intervals = intervals
        self.rank_map = rank_map
        self.size = size  # leaf count (power of two), 0 for the empty tree
        self.canonical = canonical
        self.total_stored = total_stored
        self._by_id = {iv.id: iv for iv in intervals}


def _insert(canonical, node, node_lo, node_hi, lo, hi, iid, counter):
    if lo <= node_lo and node_hi <= hi:
        canonical[node].append(iid)
        counter[0] += 1
        return
    mid = (node_lo + node_hi) // 2
    if lo <= mid:
        _insert(canonical, 2 * node, node_lo, mid, lo, hi, iid, counter)
    if hi > mid:
        _insert(canonical, 2 * node + 1, mid + 1, node_hi, lo, hi, iid, counter)


def build_segtree(intervals) -> SegTree:
    """Build in O(n log n): sort by weight once, insert in that order."""
    intervals = list(intervals)
    rm = build_rank_map(intervals)
    gw = rm.grid_width
    if gw == 0:
        return SegTree(intervals, rm, 0, [], 0)
    size = 1
    while size < gw:
        size *= 2
    canonical = [[] for _ in range(2 * size)]
    if len({iv.id for iv in intervals}) != len(intervals):
        raise ValueError("interval ids must be unique")
    order = sorted(intervals, key=lambda iv: weight_token(iv.w, iv.id))
    counter = [0]
    for iv in order:
        lo = map_endpoint(rm, iv.s)
        hi = map_endpoint(rm, iv.e)
        _insert(canonical, 1, 0, size - 1, lo, hi, iv.id, counter)
    total = counter[0]
    # Space bound: at most 2 canonical nodes per level per interval.
    height = (gw - 1).bit_length()  # ceil(log2(gw)) for gw >= 2
    assert total <= 2 * len(intervals) * height, \
        "stored %d ids, bound %d" % (total, 2 * len(intervals) * height)
    return SegTree(intervals, rm, size, canonical, total)


def search_path(tree: SegTree, x0: int):
    """Node indices on the root-to-leaf path for grid coordinate x0."""
    path = []
    node, lo, hi = 1, 0, tree.size - 1
    while True:
        path.append(node)
        if lo == hi:
            return path
        mid = (lo + hi) // 2
        if x0 <= mid:
            node, hi = 2 * node, mid
        else:
            node, lo = 2 * node + 1, mid + 1


def query_segtree(tree: SegTree, q, k):
    """Top-k stabbing query; returns (intervals, QueryStats).

    Matches the brute-force oracle exactly, including output order.
    """
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    stats = QueryStats()
    x0 = map_query(tree.rank_map, q)
    if isinstance(x0, Sentinel) or tree.size == 0:
        return [], stats

    path = search_path(tree, x0)
    stats.path_length = len(path)
    by_id = tree._by_id

    heap = []
    for node in path:
        arr = tree.canonical[node]
        if arr:
            iv = by_id[arr[0]]
            heap.append((weight_token(iv.w, iv.id), node, 0))
            stats.heap_pushes += 1
    heapq.heapify(heap)
    stats.max_heap_size = len(heap)

    out = []
    while heap and len(out) < k:
        _, node, pos = heapq.heappop(heap)
        stats.heap_pops += 1
        out.append(by_id[tree.canonical[node][pos]])
        nxt = pos + 1
        arr = tree.canonical[node]
        if nxt < len(arr):  # exhausted arrays simply stop feeding the heap
            iv = by_id[arr[nxt]]
            heapq.heappush(heap, (weight_token(iv.w, iv.id), node, nxt))
            stats.heap_pushes += 1
        if len(heap) > stats.max_heap_size:
            stats.max_heap_size = len(heap)
    return out, stats

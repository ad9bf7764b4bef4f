"""Cross-backend verification against the oracle, and counter/timing reports.

Counters, not wall-clock, are the signal here: the complexity claims are
checked deterministically through QueryStats / WalkStats, and timings are
reported as informative garnish only.
"""

from __future__ import annotations

import random
import time

from . import hive as hive_mod
from . import segtree as segtree_mod
from .oracle import topk_bruteforce

BACKENDS = ("segtree", "hive", "hive-table")


class Backend:
    """Uniform facade over the query backends for the CLI."""

    def __init__(self, name, query):
        self.name = name
        self._query = query

    def query(self, q, k):
        """Returns (intervals, stats)."""
        return self._query(q, k)


def build_backend(name, intervals) -> Backend:
    if name == "segtree":
        tree = segtree_mod.build_segtree(intervals)
        return Backend(name, lambda q, k: segtree_mod.query_segtree(tree, q, k))
    if name == "hive":
        hv = hive_mod.build_hive(intervals, with_lookup=False)
        return Backend(name, lambda q, k: hive_mod.query_hive(hv, q, k))
    if name == "hive-table":
        hv = hive_mod.build_hive(intervals, with_lookup=True)
        return Backend(name, lambda q, k: hive_mod.query_hive(hv, q, k))
    raise ValueError("unknown backend %r (choose from %s)"
                     % (name, ", ".join(BACKENDS)))


def query_values(intervals, count, rng):
    """Random query values plus the adversarial ones: exact endpoints,
    midpoints between consecutive endpoints, and values outside the hull."""
    eps = sorted({v for iv in intervals for v in (iv.s, iv.e)})
    qs = list(eps)
    qs += [(a + b) / 2 for a, b in zip(eps, eps[1:])]
    if eps:
        lo, hi = eps[0], eps[-1]
        qs += [lo - 1.0, hi + 1.0]
    else:
        lo, hi = 0.0, 1.0
    while len(qs) < count:
        qs.append(rng.uniform(lo - 1.0, hi + 1.0))
    rng.shuffle(qs)
    return qs


def _k_values(n, rng):
    base = [1, 3, 17, n + 5]
    return base + [rng.randint(1, n + 5) for _ in range(4)]


def verify(intervals, backend_names, queries, seed, backends=None):
    """Run seeded random + adversarial queries through each backend and the
    oracle.  Returns (ok, counterexample); the counterexample carries the
    minimal failing (q, k) for the first mismatching backend."""
    rng = random.Random(seed)
    if backends is None:
        backends = [build_backend(name, intervals) for name in backend_names]
    n = len(intervals)
    qs = query_values(intervals, queries, rng)
    for q in qs:
        for k in _k_values(n, rng):
            want = [iv.id for iv in topk_bruteforce(intervals, q, k)]
            for backend in backends:
                try:
                    got = [iv.id for iv in backend.query(q, k)[0]]
                except AssertionError as exc:
                    return False, {"backend": backend.name, "q": q, "k": k,
                                   "want": want, "got": "assertion: %s" % exc}
                if got != want:
                    q, k, want, got = _shrink(intervals, backend, q, k)
                    return False, {"backend": backend.name, "q": q, "k": k,
                                   "want": want, "got": got}
    return True, None


def _shrink(intervals, backend, q, k):
    """Smallest k (for the failing q) that still reproduces the mismatch."""
    for kk in range(1, k + 1):
        want = [iv.id for iv in topk_bruteforce(intervals, q, kk)]
        try:
            got = [iv.id for iv in backend.query(q, kk)[0]]
        except AssertionError as exc:
            return q, kk, want, "assertion: %s" % exc
        if got != want:
            return q, kk, want, got
    return q, k, want, got


BENCH_COLUMNS = (
    "backend", "n", "k", "queries",
    "mean_cells_visited", "max_cells_visited",
    "mean_heap_ops", "max_heap_ops",
    "mean_locate_comparisons",
    "wall_time_per_query_us",
)


def bench(intervals, backend_name, k_list, queries, seed):
    """One report row per k value; counters come from the per-query stats."""
    backend = build_backend(backend_name, intervals)
    rng = random.Random(seed)
    n = len(intervals)
    rows = []
    for k in k_list:
        qs = query_values(intervals, queries, rng)[:queries] if intervals else []
        cells = []
        heap_ops = []
        locates = []
        t0 = time.perf_counter()
        for q in qs:
            _, stats = backend.query(q, k)
            if hasattr(stats, "cells_visited"):
                cells.append(stats.cells_visited)
                locates.append(stats.locate_comparisons)
                heap_ops.append(0)
            else:
                heap_ops.append(stats.heap_pushes + stats.heap_pops)
                cells.append(0)
                locates.append(0)
        elapsed = time.perf_counter() - t0
        nq = len(qs)
        rows.append({
            "backend": backend_name,
            "n": n,
            "k": k,
            "queries": nq,
            "mean_cells_visited": (sum(cells) / nq) if nq else 0.0,
            "max_cells_visited": max(cells, default=0),
            "mean_heap_ops": (sum(heap_ops) / nq) if nq else 0.0,
            "max_heap_ops": max(heap_ops, default=0),
            "mean_locate_comparisons": (sum(locates) / nq) if nq else 0.0,
            "wall_time_per_query_us": (elapsed / nq * 1e6) if nq else 0.0,
        })
    return rows

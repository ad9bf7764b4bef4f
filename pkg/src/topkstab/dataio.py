"""Dataset and query file formats, plus the seeded dataset generators.

Dataset files hold one interval per line as `s e w` decimal literals; the
interval id is the 0-based data line number.  Query files hold `q k` per
line.  Lines starting with `#` (and blank lines) are comments.
"""

from __future__ import annotations

import random

from .core import WeightedInterval

DISTRIBUTIONS = ("uniform", "nested", "clustered")


class DatasetError(ValueError):
    """Malformed dataset/query file; message carries the line number."""


def _data_lines(lines):
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_intervals(lines, source="<dataset>"):
    intervals = []
    for lineno, line in _data_lines(lines):
        parts = line.split()
        if len(parts) != 3:
            raise DatasetError("%s:%d: expected 's e w', got %r"
                               % (source, lineno, line))
        try:
            s, e, w = (float(p) for p in parts)
        except ValueError:
            raise DatasetError("%s:%d: non-numeric field in %r"
                               % (source, lineno, line)) from None
        if s > e:
            raise DatasetError("%s:%d: s > e in %r" % (source, lineno, line))
        intervals.append(WeightedInterval(len(intervals), s, e, w))
    return intervals


def parse_queries(lines, source="<queries>"):
    queries = []
    for lineno, line in _data_lines(lines):
        parts = line.split()
        if len(parts) != 2:
            raise DatasetError("%s:%d: expected 'q k', got %r"
                               % (source, lineno, line))
        try:
            q = float(parts[0])
            k = int(parts[1])
        except ValueError:
            raise DatasetError("%s:%d: non-numeric field in %r"
                               % (source, lineno, line)) from None
        if k < 1:
            raise DatasetError("%s:%d: k must be >= 1" % (source, lineno))
        queries.append((q, k))
    return queries


def load_intervals(path):
    with open(path) as fh:
        return parse_intervals(fh, source=str(path))


def load_queries(path):
    with open(path) as fh:
        return parse_queries(fh, source=str(path))


def format_dataset(intervals):
    return "".join("%r %r %r\n" % (iv.s, iv.e, iv.w) for iv in intervals)


def generate(distribution, n, seed):
    """Deterministic dataset of n intervals for a given seed."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rng = random.Random(seed)
    if distribution == "uniform":
        rows = []
        for i in range(n):
            a, b = sorted((rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)))
            rows.append(WeightedInterval(i, a, b, rng.uniform(0.0, 100.0)))
        return rows
    if distribution == "nested":
        # n concentric intervals [i, 2n-i]; every point in the middle stabs
        # all of them.  Weights are distinct by construction.
        weights = list(range(n))
        rng.shuffle(weights)
        return [WeightedInterval(i, float(i), float(2 * n - i), float(weights[i]))
                for i in range(n)]
    if distribution == "clustered":
        # small endpoint and weight pools: lots of duplicate endpoints and
        # duplicate weights, the worst case for tie handling
        pool = max(2, n // 8)
        rows = []
        for i in range(n):
            a, b = sorted((rng.randrange(pool), rng.randrange(pool)))
            rows.append(WeightedInterval(i, float(a), float(b),
                                         float(rng.randrange(pool))))
        return rows
    raise ValueError("unknown distribution %r (choose from %s)"
                     % (distribution, ", ".join(DISTRIBUTIONS)))

"""Brute-force reference for top-k stabbing queries.

Deliberately naive (filter + full sort per query); it is the ground truth the
real backends are checked against, not a product path.
"""

from __future__ import annotations

from .core import weight_token


def topk_bruteforce(intervals, q, k):
    """The min(k, count) stabbed intervals of largest weight, in descending
    weight order (ties by ascending id).  Output order is part of the
    contract."""
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    stabbed = [iv for iv in intervals if iv.s <= q <= iv.e]
    stabbed.sort(key=lambda iv: weight_token(iv.w, iv.id))
    return stabbed[:k]

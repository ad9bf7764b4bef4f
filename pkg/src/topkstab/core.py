"""Shared domain types: weighted intervals, the weight order, and the even/odd
endpoint grid used by every backend.

Endpoint values are compressed onto an even integer grid: the i-th distinct
endpoint (ascending) sits at coordinate 2*i, and the open gap between
consecutive endpoints sits at the odd coordinate in between.  With that
encoding "interval [s, e] is stabbed by q" becomes a pure integer range test,
with no boundary cases left for the backends to worry about.
"""

from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass


class Sentinel(enum.Enum):
    """Grid positions for query values outside the endpoint hull."""

    BEFORE_ALL = "BEFORE_ALL"
    AFTER_ALL = "AFTER_ALL"


BEFORE_ALL = Sentinel.BEFORE_ALL
AFTER_ALL = Sentinel.AFTER_ALL


@dataclass(frozen=True)
class WeightedInterval:
    """Closed interval [s, e] with weight w and a stable, dense id."""

    id: int
    s: float
    e: float
    w: float

    def __post_init__(self):
        if self.id < 0:
            raise ValueError("interval id must be non-negative, got %r" % (self.id,))
        if self.s > self.e:
            raise ValueError("interval [%r, %r] has s > e" % (self.s, self.e))

    def stabs(self, q) -> bool:
        return self.s <= q <= self.e


def weight_token(w, iid):
    """Ascending sort token realizing the weight order: larger weight first,
    ties broken by smaller id.  token(a) < token(b) iff a outranks b."""
    return (-w, iid)


@dataclass(frozen=True)
class WeightKey:
    """Strict total order on intervals: by weight descending, id ascending.

    No two distinct intervals compare equal, which makes every backend (and
    the brute-force oracle) produce one deterministic answer sequence.
    """

    w: float
    id: int

    @property
    def token(self):
        return (-self.w, self.id)

    def __gt__(self, other):
        return self.token < other.token

    def __lt__(self, other):
        return self.token > other.token

    def __ge__(self, other):
        return not (self < other)

    def __le__(self, other):
        return not (self > other)


class RankMap:
    """Coordinate compression of endpoint values onto the even integer grid."""

    __slots__ = ("sorted_endpoints", "grid_width")

    def __init__(self, sorted_endpoints):
        self.sorted_endpoints = list(sorted_endpoints)
        for a, b in zip(self.sorted_endpoints, self.sorted_endpoints[1:]):
            if not a < b:
                raise ValueError("endpoints must be strictly increasing")
        self.grid_width = 2 * len(self.sorted_endpoints)

    def __repr__(self):
        return "RankMap(%r)" % (self.sorted_endpoints,)


@dataclass(frozen=True)
class HSegment:
    """An interval rendered as a horizontal segment on the grid: x-extent is
    the interval's endpoint coordinates, the vertical position is its
    WeightKey (higher key = higher up)."""

    x_lo: int
    x_hi: int
    ykey: WeightKey
    interval_id: int


@dataclass(frozen=True)
class GridQuery:
    """A stabbing query already mapped to the grid."""

    x0: "int | Sentinel"
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1, got %r" % (self.k,))


def build_rank_map(intervals) -> RankMap:
    """RankMap over the deduplicated multiset of all interval endpoints."""
    values = {iv.s for iv in intervals}
    values.update(iv.e for iv in intervals)
    return RankMap(sorted(values))


def map_endpoint(rm: RankMap, v) -> int:
    """Grid coordinate of an endpoint value (must be one of the endpoints)."""
    i = bisect.bisect_left(rm.sorted_endpoints, v)
    assert i < len(rm.sorted_endpoints) and rm.sorted_endpoints[i] == v, \
        "%r is not an endpoint of this RankMap" % (v,)
    return 2 * i


def map_query(rm: RankMap, q):
    """Grid position of an arbitrary query value.

    Exact endpoint hits land on the (even) endpoint coordinate, values
    strictly between endpoints land on the odd gap coordinate, and values
    outside the hull map to sentinels (which stab nothing).  Guarantees
    s <= q <= e in real space iff map_endpoint(s) <= map_query(q) <=
    map_endpoint(e) on the grid.
    """
    eps = rm.sorted_endpoints
    if not eps or q < eps[0]:
        return BEFORE_ALL
    if q > eps[-1]:
        return AFTER_ALL
    i = bisect.bisect_left(eps, q)
    if eps[i] == q:
        return 2 * i
    return 2 * i - 1


def to_segments(intervals, rm: RankMap):
    """One horizontal segment per interval (same ids, grid x-extent)."""
    return [
        HSegment(
            x_lo=map_endpoint(rm, iv.s),
            x_hi=map_endpoint(rm, iv.e),
            ykey=WeightKey(iv.w, iv.id),
            interval_id=iv.id,
        )
        for iv in intervals
    ]

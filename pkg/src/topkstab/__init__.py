"""Top-k weighted interval stabbing queries.

Two backends answer "the k heaviest intervals containing q, heaviest first":

* `hive`: a combed rectangular planar subdivision over the intervals viewed
  as horizontal segments -- linear space, O(log n + k) per query, O(k) with
  the rank-space lookup table.
* `segtree`: a segment tree with weight-sorted canonical arrays merged
  through a bounded max heap -- O(n log n) space, O(log n + k log log n)
  per query.

`topk_bruteforce` is the brute-force ground truth both are verified against.
"""

from .core import (
    AFTER_ALL,
    BEFORE_ALL,
    GridQuery,
    HSegment,
    RankMap,
    Sentinel,
    WeightKey,
    WeightedInterval,
    build_rank_map,
    map_endpoint,
    map_query,
    to_segments,
)
from .hive import (
    Hive,
    WalkStats,
    build_hive,
    dump_hive,
    locate_top,
    locate_top_table,
    query_hive,
    walk_down,
)
from .oracle import topk_bruteforce
from .segtree import QueryStats, SegTree, build_segtree, query_segtree

__all__ = [
    "AFTER_ALL",
    "BEFORE_ALL",
    "GridQuery",
    "HSegment",
    "Hive",
    "QueryStats",
    "RankMap",
    "SegTree",
    "Sentinel",
    "WalkStats",
    "WeightKey",
    "WeightedInterval",
    "build_hive",
    "build_rank_map",
    "build_segtree",
    "dump_hive",
    "locate_top",
    "locate_top_table",
    "map_endpoint",
    "map_query",
    "query_hive",
    "query_segtree",
    "to_segments",
    "topk_bruteforce",
    "walk_down",
]

__version__ = "0.1.0"

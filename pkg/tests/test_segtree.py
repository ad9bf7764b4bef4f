import math
import random

import pytest

from helpers import adversarial_queries, make_intervals
from topkstab.core import Sentinel, WeightedInterval, map_endpoint, map_query
from topkstab.oracle import topk_bruteforce
from topkstab.segtree import build_segtree, query_segtree, search_path


def ids(result):
    return [iv.id for iv in result]


def test_empty_tree():
    tree = build_segtree([])
    for q in (-1, 0, 3.5):
        out, stats = query_segtree(tree, q, 5)
        assert out == []
        assert stats.heap_pops == 0


def test_single_interval_storage_bound():
    tree = build_segtree([WeightedInterval(0, 1, 2, 1)])
    assert tree.total_stored <= 2 * math.ceil(math.log2(4))


def test_hand_example_matches_oracle_example():
    ivs = [WeightedInterval(0, 1, 5, 10),
           WeightedInterval(1, 2, 6, 20),
           WeightedInterval(2, 4, 9, 5)]
    tree = build_segtree(ivs)
    out, _ = query_segtree(tree, 4, 2)
    assert ids(out) == [1, 0]


def test_sentinel_path_returns_empty():
    ivs = [WeightedInterval(0, 1, 5, 10)]
    tree = build_segtree(ivs)
    for q, k in ((-100, 1), (100, 7)):
        out, stats = query_segtree(tree, q, k)
        assert out == [] and stats.path_length == 0


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        query_segtree(build_segtree([]), 0, 0)


def test_canonical_arrays_sorted_descending():
    rng = random.Random(42)
    ivs = make_intervals(rng, 64, "mixed")
    tree = build_segtree(ivs)
    by_id = {iv.id: iv for iv in ivs}
    for arr in tree.canonical:
        tokens = [(-by_id[i].w, i) for i in arr]
        assert tokens == sorted(tokens)
        assert len(set(tokens)) == len(tokens)


def test_storage_bound_randomized():
    rng = random.Random(7)
    for _ in range(20):
        ivs = make_intervals(rng, rng.randint(1, 100), "mixed")
        tree = build_segtree(ivs)
        gw = tree.rank_map.grid_width
        assert tree.total_stored <= 2 * len(ivs) * math.ceil(math.log2(gw))


def test_oracle_equivalence_fuzz():
    rng = random.Random(123)
    ivs = make_intervals(rng, 200, "mixed")
    tree = build_segtree(ivs)
    for _ in range(50):
        q = rng.uniform(-5, 55)
        k = rng.randint(1, 210)
        out, _ = query_segtree(tree, q, k)
        assert ids(out) == ids(topk_bruteforce(ivs, q, k))


def test_query_stats_invariants():
    rng = random.Random(5)
    for _ in range(30):
        ivs = make_intervals(rng, rng.randint(1, 80), "mixed")
        tree = build_segtree(ivs)
        gw = tree.rank_map.grid_width
        bound = 2 * math.ceil(math.log2(gw)) + 1
        for q in adversarial_queries(ivs, rng, extra=5):
            k = rng.randint(1, len(ivs) + 5)
            _, stats = query_segtree(tree, q, k)
            assert stats.max_heap_size <= stats.path_length or stats.path_length == 0
            assert stats.max_heap_size <= bound
            assert stats.heap_pops <= k
            assert stats.heap_pushes <= stats.heap_pops + stats.path_length


def test_path_canonical_union_equals_stabbed_set():
    # the defining segment-tree property, brute-forced on small instances
    rng = random.Random(99)
    for _ in range(25):
        ivs = make_intervals(rng, rng.randint(1, 64), "mixed")
        tree = build_segtree(ivs)
        rm = tree.rank_map
        ranges = {iv.id: (map_endpoint(rm, iv.s), map_endpoint(rm, iv.e))
                  for iv in ivs}
        for x0 in range(rm.grid_width):
            on_path = set()
            for node in search_path(tree, x0):
                on_path.update(tree.canonical[node])
            stabbed = {i for i, (lo, hi) in ranges.items() if lo <= x0 <= hi}
            assert on_path == stabbed

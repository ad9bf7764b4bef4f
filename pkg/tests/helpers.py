"""Shared test fixtures: random interval corpora with nasty shapes."""

import random

from topkstab.core import WeightedInterval


def make_intervals(rng: random.Random, n: int, style: str = "mixed"):
    """n intervals; `style` controls how adversarial the endpoints/weights are.

    "float":   generic position, distinct-ish endpoints and weights
    "int":     heavy endpoint sharing, point intervals likely
    "dup":     duplicate weights and duplicate (s, e, w) triples likely
    "mixed":   pick one of the above at random
    """
    if style == "mixed":
        style = rng.choice(["float", "int", "dup"])
    out = []
    for i in range(n):
        if style == "float":
            a, b = sorted((rng.uniform(0, 50), rng.uniform(0, 50)))
            w = rng.uniform(0, 10)
        elif style == "int":
            a, b = sorted((rng.randint(0, 12), rng.randint(0, 12)))
            w = rng.uniform(0, 10)
        else:
            a, b = sorted((rng.randint(0, 6), rng.randint(0, 6)))
            w = float(rng.choice([1, 2, 3]))
        out.append(WeightedInterval(i, float(a), float(b), float(w)))
    return out


def adversarial_queries(intervals, rng: random.Random, extra: int = 20):
    """Endpoints, gap midpoints, out-of-hull values, plus random ones."""
    eps = sorted({v for iv in intervals for v in (iv.s, iv.e)})
    qs = list(eps)
    qs += [(a + b) / 2 for a, b in zip(eps, eps[1:])]
    if eps:
        qs += [eps[0] - 1, eps[-1] + 1]
    qs += [rng.uniform(-5, 55) for _ in range(extra)]
    return qs

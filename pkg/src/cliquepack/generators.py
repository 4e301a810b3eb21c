"""Seeded instance families for sweeps.

Every instance is generated from random.Random((seed, index)) so results
are reproducible across machines and independent of evaluation order.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .graph import Graph, complete_multipartite, turan_edge_count


def _rng(seed: int, index) -> random.Random:
    # string seeds hash identically across platforms and python versions
    return random.Random(f"{seed}:{index}")


def gnp(n: int, p: Fraction, seed: int, index: int = 0) -> Graph:
    """G(n, p) with p an exact rational; edge slots drawn in lexicographic
    order via randrange, so the graph is a pure function of (seed, index)."""
    rng = _rng(seed, index)
    num, den = p.numerator, p.denominator
    edges = [e for e in combinations(range(n), 2) if rng.randrange(den) < num]
    return Graph.from_edges(n, edges)


def turan_plus_edges(n: int, r: int, extra: int, seed: int, index: int = 0) -> Graph:
    """The Turan graph T_{r-1}(n) plus `extra` uniformly chosen missing edges."""
    from .graph import balanced_profile

    g = complete_multipartite(balanced_profile(n, r - 1))
    missing = [e for e in combinations(range(n), 2) if not g.has_edge(*e)]
    if extra > len(missing):
        raise ValueError(f"only {len(missing)} non-edges available")
    rng = _rng(seed, index)
    chosen = rng.sample(missing, extra)
    return Graph.from_edges(n, g.edges() + chosen)


def random_profile(n: int, seed: int, index: int = 0) -> tuple[int, ...]:
    """A uniformly random composition of n, returned sorted non-increasing."""
    rng = _rng(seed, index)
    parts = []
    left = n
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return tuple(sorted(parts, reverse=True))


def all_profiles(n: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n (sorted non-increasing), optionally capped in length."""

    def gen(left: int, cap: int, acc: list[int]):
        if left == 0:
            yield tuple(acc)
            return
        if max_parts is not None and len(acc) >= max_parts:
            return
        for p in range(min(cap, left), 0, -1):
            acc.append(p)
            yield from gen(left - p, p, acc)
            acc.pop()

    yield from gen(n, n, [])

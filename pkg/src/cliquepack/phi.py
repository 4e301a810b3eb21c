"""Exhaustive phi table: for small n, the minimum of nu_r over all labeled
n-vertex graphs with a given edge count, reported as k = e - t_{r-1}(n).

The search walks every subset of the C(n,2) edge slots. Clique edge-masks
are precomputed once per (n, r), so evaluating one graph is a subset test
per candidate clique followed by a small branch-and-bound.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graph import turan_edge_count

PHI_EXHAUSTIVE_LIMIT = 7


def _edge_slots(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def _clique_masks(n: int, r: int) -> list[int]:
    slots = _edge_slots(n)
    masks = []
    for verts in combinations(range(n), r):
        m = 0
        for e in combinations(verts, 2):
            m |= 1 << slots[e]
        masks.append(m)
    return masks


def max_disjoint(masks: list[int], per_clique: int, free_edges: int) -> int:
    """Maximum pairwise-disjoint subset of the given edge masks."""
    total = len(masks)
    best = 0

    def recurse(idx: int, used: int, count: int, free: int) -> None:
        nonlocal best
        if count > best:
            best = count
        while idx < total and masks[idx] & used:
            idx += 1
        if idx == total:
            return
        if count + min(free // per_clique, total - idx) <= best:
            return
        recurse(idx + 1, used | masks[idx], count + 1, free - per_clique)
        recurse(idx + 1, used, count, free)

    recurse(0, 0, 0, free_edges)
    return best


def nu_by_mask(n: int, r: int, graph_mask: int, clique_masks=None) -> int:
    """nu_r of the graph whose edge set is the given slot bitmask."""
    if clique_masks is None:
        clique_masks = _clique_masks(n, r)
    present = [m for m in clique_masks if m & graph_mask == m]
    return max_disjoint(present, comb(r, 2), graph_mask.bit_count())


def phi_table(n: int, r: int) -> list[tuple[int, int, int]]:
    """Rows (e, k, phi) for every edge count e >= t_{r-1}(n)."""
    if n > PHI_EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"exhaustive search is limited to n <= {PHI_EXHAUSTIVE_LIMIT}"
        )
    if r < 3:
        raise ValueError("r must be at least 3")
    t = turan_edge_count(n, r - 1)
    n_slots = comb(n, 2)
    clique_masks = _clique_masks(n, r)
    best: dict[int, int] = {}
    for graph_mask in range(1 << n_slots):
        e = graph_mask.bit_count()
        if e < t:
            continue
        cur = best.get(e)
        if cur == 0:
            continue
        nu = nu_by_mask(n, r, graph_mask, clique_masks)
        if cur is None or nu < cur:
            best[e] = nu
    return [(e, e - t, best[e]) for e in sorted(best)]

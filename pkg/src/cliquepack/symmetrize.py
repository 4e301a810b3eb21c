"""Clone symmetrization: neighborhood replacement, the h objective,
packing averaging across a merged clone class, and the iterated reduction
of an arbitrary graph to complete multipartite form.

Each reduction step merges two clone classes whose union is independent,
keeping whichever direction has the smaller h value at c = -2/r, so the
quantity nu*_r(G) - (2/r) e(G) never increases along the trace.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .graph import (
    Graph,
    clone_classes,
    is_complete_multipartite,
    multipartite_profile,
)
from .packing import (
    DEFAULT_CLIQUE_BUDGET,
    FractionalPacking,
    nu_star,
    verify_packing,
)


def replace_neighborhood(g: Graph, v0: frozenset[int] | set[int],
                         v1: frozenset[int] | set[int]) -> Graph:
    """G[V0 -> V1]: every vertex of V0 u V1 receives V1's outside neighborhood."""
    v0, v1 = set(v0), set(v1)
    if not v0 or not v1:
        raise ValueError("classes must be nonempty")
    if v0 & v1:
        raise ValueError("classes must be disjoint")
    for cls in (v0, v1):
        members = sorted(cls)
        rep = members[0]
        for u in members[1:]:
            if g.adj[u] != g.adj[rep]:
                raise ValueError(f"vertices {rep} and {u} are not clones")
    z = min(v1)
    union_mask = sum(1 << v for v in v0 | v1)
    if g.adj[z] & union_mask:
        raise ValueError("there is an edge between the classes")
    target = g.adj[z]  # already disjoint from the union
    adj = list(g.adj)
    for v in v0 | v1:
        adj[v] = target
    # vertices adjacent to the old V0 neighborhoods must be repointed too
    for u in range(g.n):
        if u in v0 or u in v1:
            continue
        if target & (1 << u):
            adj[u] |= union_mask
        else:
            adj[u] &= ~union_mask
    return Graph(g.n, tuple(adj))


def h_value(
    g: Graph,
    r: int,
    c: Fraction,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    pivot_budget: int = lp.DEFAULT_PIVOT_BUDGET,
) -> Fraction:
    """nu*_r(G) + c * e(G), exactly."""
    if r < 3:
        raise ValueError("r must be at least 3")
    value, _ = nu_star(g, r, clique_budget, pivot_budget)
    return value + Fraction(c) * g.edge_count


def _uniformize(p: FractionalPacking, class_mask: int) -> dict:
    """Average weights of cliques over the clone class.

    For each residual clique Q (the clique minus its class vertex), every
    extension Q u {v}, v in the class, gets the mean of their weights. This
    realizes the automorphism averaging of the merged class directly.
    """
    size = class_mask.bit_count()
    by_residual: dict[tuple, Fraction] = {}
    untouched: dict[tuple, Fraction] = {}
    for clique, w in p.weights.items():
        inside = [v for v in clique if class_mask & (1 << v)]
        if not inside:
            untouched[clique] = untouched.get(clique, Fraction(0)) + w
        else:
            q = tuple(v for v in clique if not class_mask & (1 << v))
            by_residual[q] = by_residual.get(q, Fraction(0)) + w
    out = dict(untouched)
    members = []
    rest = class_mask
    while rest:
        b = rest & -rest
        members.append(b.bit_length() - 1)
        rest ^= b
    for q, total in by_residual.items():
        mean = total / size
        if mean == 0:
            continue
        for v in members:
            out[tuple(sorted(q + (v,)))] = mean
    return out


def average_packings(
    g: Graph,
    v0: set[int],
    v1: set[int],
    f0: FractionalPacking,
    f1: FractionalPacking,
) -> FractionalPacking:
    """Combine optimal packings of G[V1->V0] and G[V0->V1] into one of G.

    f0 must be feasible on G[V1->V0] and f1 on G[V0->V1]. Weights are first
    uniformized over the merged clone class; cliques avoiding the class are
    convexly combined with weights |V0| and |V1|, cliques through V_i keep
    their f_i weight.
    """
    g0 = replace_neighborhood(g, frozenset(v1), frozenset(v0))
    g1 = replace_neighborhood(g, frozenset(v0), frozenset(v1))
    if not verify_packing(g0, f0):
        raise ValueError("f0 is not a feasible packing of G[V1->V0]")
    if not verify_packing(g1, f1):
        raise ValueError("f1 is not a feasible packing of G[V0->V1]")
    class_mask = sum(1 << v for v in v0 | v1)
    u0 = _uniformize(f0, class_mask)
    u1 = _uniformize(f1, class_mask)
    mask0 = sum(1 << v for v in v0)
    mask1 = sum(1 << v for v in v1)
    a, b = len(v0), len(v1)
    tot = a + b
    weights: dict[tuple, Fraction] = {}

    def clique_mask(c):
        m = 0
        for v in c:
            m |= 1 << v
        return m

    for clique, w in u0.items():
        cm = clique_mask(clique)
        if cm & mask0:
            weights[clique] = weights.get(clique, Fraction(0)) + w
        elif not cm & mask1:
            weights[clique] = weights.get(clique, Fraction(0)) + Fraction(a, tot) * w
    for clique, w in u1.items():
        cm = clique_mask(clique)
        if cm & mask1:
            weights[clique] = weights.get(clique, Fraction(0)) + w
        elif not cm & mask0:
            weights[clique] = weights.get(clique, Fraction(0)) + Fraction(b, tot) * w
    weights = {c: w for c, w in weights.items() if w}
    return FractionalPacking(g, f0.r, weights)


@dataclass(frozen=True)
class SymmetrizationStep:
    class_a: tuple[int, ...]
    class_b: tuple[int, ...]
    direction: str  # "a_to_b" | "b_to_a"
    h_before: Fraction
    h_after: Fraction
    e_before: int
    e_after: int


@dataclass(frozen=True)
class SymmetrizationTrace:
    initial: Graph
    steps: tuple[SymmetrizationStep, ...]
    final: Graph
    profile: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "steps": [
                    {
                        "class_a": list(s.class_a),
                        "class_b": list(s.class_b),
                        "direction": s.direction,
                        "h_before": str(s.h_before),
                        "h_after": str(s.h_after),
                        "e_before": s.e_before,
                        "e_after": s.e_after,
                    }
                    for s in self.steps
                ],
                "profile": list(self.profile),
            }
        )


def _independent_class_pair(g: Graph):
    """Lexicographically first pair of clone classes with no edge between."""
    classes = clone_classes(g)
    masks = [sum(1 << v for v in cls) for cls in classes]
    for i in range(len(classes)):
        rep = classes[i][0]
        for j in range(i + 1, len(classes)):
            if not g.adj[rep] & masks[j]:
                return classes[i], classes[j]
    return None


def symmetrize(
    g: Graph,
    r: int,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    pivot_budget: int = lp.DEFAULT_PIVOT_BUDGET,
) -> SymmetrizationTrace:
    """Iterate clone-class merges until the graph is complete multipartite."""
    if r < 3:
        raise ValueError("r must be at least 3")
    c = Fraction(-2, r)
    current = g
    steps: list[SymmetrizationStep] = []
    h_cur = None
    while True:
        pair = _independent_class_pair(current)
        if pair is None:
            break
        cls_a, cls_b = pair
        if h_cur is None:
            h_cur = h_value(current, r, c, clique_budget, pivot_budget)
        ga = replace_neighborhood(current, frozenset(cls_a), frozenset(cls_b))
        gb = replace_neighborhood(current, frozenset(cls_b), frozenset(cls_a))
        ha = h_value(ga, r, c, clique_budget, pivot_budget)
        hb = h_value(gb, r, c, clique_budget, pivot_budget)
        if ha <= hb:
            direction, nxt, h_next = "a_to_b", ga, ha
        else:
            direction, nxt, h_next = "b_to_a", gb, hb
        steps.append(
            SymmetrizationStep(
                tuple(cls_a),
                tuple(cls_b),
                direction,
                h_cur,
                h_next,
                current.edge_count,
                nxt.edge_count,
            )
        )
        current, h_cur = nxt, h_next
    assert is_complete_multipartite(current)
    return SymmetrizationTrace(g, tuple(steps), current, multipartite_profile(current))

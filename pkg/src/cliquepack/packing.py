"""Fractional and integral clique packing.

nu_star solves the packing LP exactly (one variable per r-clique, one
capacity-1 constraint per edge); nu_integral finds a maximum set of
edge-disjoint r-cliques by branch-and-bound. check_main_theorem compares
nu_star against the 2k/r lower bound, with k the edge surplus over the
continuous (r-1)-partite Turan density.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import chain, combinations
from fractions import Fraction
from math import comb

from . import lp
from .errors import CliqueBudgetExceeded, NodeBudgetExceeded
from .graph import Graph, enumerate_cliques

DEFAULT_CLIQUE_BUDGET = 5000
DEFAULT_NODE_BUDGET = 1_000_000

Clique = tuple[int, ...]


@dataclass(frozen=True)
class FractionalPacking:
    graph: Graph
    r: int
    weights: dict[Clique, Fraction] = field(default_factory=dict)

    @property
    def value(self) -> Fraction:
        # packings built here repeat a handful of weight values many times,
        # so tally multiplicities and do the rational sums once per value
        counts = Counter(self.weights.values())
        return sum((w * c for w, c in counts.items()), Fraction(0))

    def to_json(self) -> str:
        cliques = sorted(self.weights)
        return json.dumps(
            {
                "r": self.r,
                "cliques": [list(c) for c in cliques],
                "weights": [str(Fraction(self.weights[c])) for c in cliques],
            }
        )

    @staticmethod
    def from_json(text: str, graph: Graph) -> "FractionalPacking":
        data = json.loads(text)
        weights = {
            tuple(c): Fraction(w)
            for c, w in zip(data["cliques"], data["weights"])
        }
        return FractionalPacking(graph, int(data["r"]), weights)


@dataclass(frozen=True)
class PackingViolation:
    kind: str  # "bad-clique" | "negative-weight" | "edge-overload"
    clique: Clique | None = None
    edge: tuple[int, int] | None = None
    load: Fraction | None = None


def find_violation(g: Graph, p: FractionalPacking) -> PackingViolation | None:
    """First offending clique or edge, or None if the packing is valid."""
    bad = _scan_packing(g, p, ordered=False)
    if bad is None or bad.kind == "edge-overload":
        return bad
    # rerun in clique order so the reported violation is the first one
    return _scan_packing(g, p, ordered=True)


def _scan_packing(g: Graph, p: FractionalPacking, ordered: bool):
    # tally integer multiplicities per distinct weight value first; summing
    # Fractions edge by edge is far slower on large supports
    adj, r = g.adj, p.r
    per_weight: dict[Fraction, list] = {}
    items = sorted(p.weights.items()) if ordered else p.weights.items()
    for clique, w in items:
        if w < 0:
            return PackingViolation("negative-weight", clique=clique)
        if len(clique) != r or not _is_clique_mask(adj, clique):
            return PackingViolation("bad-clique", clique=clique)
        if w == 0:
            continue
        per_weight.setdefault(w, []).append(clique)
    loads: dict[tuple[int, int], Fraction] = {}
    for w, cliques in per_weight.items():
        counter = Counter(
            chain.from_iterable(combinations(c, 2) for c in cliques)
        )
        for e, c in counter.items():
            loads[e] = loads.get(e, Fraction(0)) + w * c
    for e in sorted(loads):
        if loads[e] > 1:
            return PackingViolation("edge-overload", edge=e, load=loads[e])
    return None


def _is_clique_mask(adj, clique) -> bool:
    full = 0
    for v in clique:
        full |= 1 << v
    if full.bit_count() != len(clique):
        return False
    return all(adj[v] & full == full ^ (1 << v) for v in clique)


def verify_packing(g: Graph, p: FractionalPacking) -> bool:
    return find_violation(g, p) is None


def packing_lp(g: Graph, r: int, clique_budget: int = DEFAULT_CLIQUE_BUDGET):
    """The LP max sum(x) s.t. per-edge load <= 1, plus its clique index."""
    cliques = enumerate_cliques(g, r)
    if len(cliques) > clique_budget:
        raise CliqueBudgetExceeded(len(cliques), clique_budget)
    edges = g.edges()
    edge_index = {e: i for i, e in enumerate(edges)}
    one, zero = Fraction(1), Fraction(0)
    rows = [[zero] * len(cliques) for _ in edges]
    for ci, clique in enumerate(cliques):
        for i in range(r):
            for j in range(i + 1, r):
                rows[edge_index[(clique[i], clique[j])]][ci] = one
    program = lp.LinearProgram(
        len(cliques),
        tuple([one] * len(cliques)),
        tuple((tuple(row), one) for row in rows),
    )
    return program, cliques


def nu_star(
    g: Graph,
    r: int,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    pivot_budget: int = lp.DEFAULT_PIVOT_BUDGET,
) -> tuple[Fraction, FractionalPacking]:
    """Exact fractional packing number with an optimal witness packing."""
    if r < 2:
        raise ValueError("r must be at least 2")
    program, cliques = packing_lp(g, r, clique_budget)
    if not cliques:
        return Fraction(0), FractionalPacking(g, r, {})
    sol = lp.solve(program, pivot_budget)
    assert sol.status == "optimal"  # packing LPs are feasible and bounded
    assert lp.check_certificate(program, sol)
    assert sol.value * comb(r, 2) <= g.edge_count
    weights = {c: w for c, w in zip(cliques, sol.primal) if w}
    return sol.value, FractionalPacking(g, r, weights)


def nu_integral(
    g: Graph,
    r: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    use_lp_bound: bool = True,
) -> tuple[int, list[Clique]]:
    """Maximum number of edge-disjoint r-cliques, with a witness set.

    Branch-and-bound over the lexicographic clique list: the first still
    available clique is either taken or discarded. Bounding uses the free
    edge budget floor(free_edges / C(r,2)); an LP bound is computed once at
    the root when the instance is small enough.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    cliques = enumerate_cliques(g, r)
    if not cliques:
        return 0, []
    per_clique = comb(r, 2)
    masks = []
    for clique in cliques:
        mask = 0
        for i in range(len(clique)):
            for j in range(i + 1, len(clique)):
                mask |= 1 << _edge_slot(g.n, clique[i], clique[j])
        masks.append(mask)

    root_ub = len(cliques)
    if use_lp_bound and len(cliques) <= DEFAULT_CLIQUE_BUDGET:
        try:
            value, _ = nu_star(g, r)
            root_ub = int(value)  # floor: nu is integral and <= nu*
        except CliqueBudgetExceeded:
            pass

    best: list[int] = []
    best_val = 0
    nodes = 0
    total = len(cliques)

    def recurse(idx: int, used_mask: int, chosen: list[int], free_edges: int) -> None:
        nonlocal best, best_val, nodes
        nodes += 1
        if nodes > node_budget:
            raise NodeBudgetExceeded(
                node_budget, best_val, [cliques[i] for i in best]
            )
        if len(chosen) > best_val:
            best_val = len(chosen)
            best = list(chosen)
        if best_val >= root_ub:
            return
        while idx < total and masks[idx] & used_mask:
            idx += 1
        if idx == total:
            return
        if len(chosen) + min(free_edges // per_clique, total - idx) <= best_val:
            return
        chosen.append(idx)
        recurse(idx + 1, used_mask | masks[idx], chosen, free_edges - per_clique)
        chosen.pop()
        recurse(idx + 1, used_mask, chosen, free_edges)

    recurse(0, 0, [], g.edge_count)
    return best_val, [cliques[i] for i in best]


def _edge_slot(n: int, u: int, v: int) -> int:
    # dense index of edge (u,v), u < v, within the C(n,2) slots
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def continuous_k(g: Graph, r: int) -> Fraction:
    """Edge surplus k with e(G) = (1 - 1/(r-1)) n^2/2 + k."""
    return Fraction(g.edge_count) - Fraction(r - 2, r - 1) * Fraction(g.n**2, 2)


def integral_k(g: Graph, r: int) -> int:
    """Edge surplus over the integral Turan number t_{r-1}(n)."""
    from .graph import turan_edge_count

    return g.edge_count - turan_edge_count(g.n, r - 1)


@dataclass(frozen=True)
class TheoremReport:
    n: int
    r: int
    e_G: int
    k: Fraction
    nu_star: Fraction
    bound: Fraction  # 2k/r
    satisfied: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "r": self.r,
                "e": self.e_G,
                "k": str(self.k),
                "nu_star": str(self.nu_star),
                "bound_2k_over_r": str(self.bound),
                "satisfied": self.satisfied,
            }
        )


def check_main_theorem(
    g: Graph,
    r: int,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    pivot_budget: int = lp.DEFAULT_PIVOT_BUDGET,
) -> TheoremReport:
    """Report whether nu*_r(G) >= 2k/r holds for this instance (it must)."""
    if r < 3:
        raise ValueError("r must be at least 3")
    k = continuous_k(g, r)
    value, _ = nu_star(g, r, clique_budget, pivot_budget)
    bound = 2 * k / r
    return TheoremReport(g.n, r, g.edge_count, k, value, bound, value >= bound)

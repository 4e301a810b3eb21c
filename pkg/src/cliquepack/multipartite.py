"""Scalar calculus and the constructive packer on complete multipartite
graphs, plus the part-shifting merge operation and the three-class A/B/C
construction used to probe how few edge-disjoint triangles a graph with
many edges can have.

Throughout, G is the complete multipartite graph of a profile (part sizes
sorted non-increasing), H is G minus its largest part, and all quantities
are exact rationals derived from integer part sizes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .errors import PackingBoundError
from .graph import Graph, complete_multipartite, normalize_profile, profile_blocks
from .packing import FractionalPacking


def _edges_of_profile(parts) -> int:
    n = sum(parts)
    return (n * n - sum(p * p for p in parts)) // 2


@dataclass(frozen=True)
class PackingScalars:
    n: int
    r: int
    profile: tuple[int, ...]
    x1: Fraction
    k_G: Fraction
    t_H: Fraction
    k_H: Fraction
    alpha: Fraction

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "r": self.r,
                "profile": list(self.profile),
                "x1": str(self.x1),
                "k_G": str(self.k_G),
                "t_H": str(self.t_H),
                "k_H": str(self.k_H),
                "alpha": str(self.alpha),
            }
        )


def compute_scalars(profile, r: int) -> PackingScalars:
    """k_G, t_H, k_H and the lifting rate alpha for one induction step.

    The closed forms are cross-checked against direct edge counts of
    H = G minus the largest part. At r = 3 the (r-2)-partite density is 0,
    so t_H degenerates to e(H) itself.
    """
    if r < 3:
        raise ValueError("r must be at least 3")
    parts = normalize_profile(profile)
    n = sum(parts)
    nn = Fraction(n * n)
    e_G = _edges_of_profile(parts)
    x1 = Fraction(parts[0], n)
    k_G = e_G - Fraction(r - 2, 2 * (r - 1)) * nn

    t_H = (
        k_G
        + nn / (2 * (r - 1) * (r - 2))
        - x1 * nn / (r - 2)
        + x1 * x1 * (r - 1) * nn / (2 * (r - 2))
    )
    k_H = k_G - x1 * nn / (r - 1) + r * x1 * x1 * nn / (2 * (r - 1))

    e_H = _edges_of_profile(parts[1:]) if len(parts) > 1 else 0
    rest = (1 - x1) * (1 - x1) * nn
    assert t_H == e_H - Fraction(r - 3, 2 * (r - 2)) * rest
    assert k_H == e_H - Fraction(r - 2, 2 * (r - 1)) * rest
    assert k_G <= t_H

    # 1/(n x1) = 1/parts[0]; (r-2)/(n(1-x1)) = (r-2)/(n - parts[0])
    if x1 == 1:
        alpha = Fraction(1, parts[0])
    else:
        alpha = min(Fraction(1, parts[0]), Fraction(r - 2, n - parts[0]))
    return PackingScalars(n, r, parts, x1, k_G, t_H, k_H, alpha)


def uniform_r_partite_packing(profile, r: int) -> FractionalPacking:
    """Uniform weights on the transversal r-cliques of a complete r-partite
    graph; attains value parts[r-2] * parts[r-1] and saturates every edge
    between the two smallest parts."""
    parts = normalize_profile(profile)
    if len(parts) != r:
        raise ValueError(f"profile has {len(parts)} parts, expected exactly r={r}")
    g = complete_multipartite(parts)
    blocks = profile_blocks(parts)
    denom = 1
    for p in parts[: r - 2]:
        denom *= p
    w = Fraction(1, denom)
    weights = {
        tuple(sorted(combo)): w for combo in product(*blocks)
    }
    return FractionalPacking(g, r, weights)


def lift_packing(profile, r: int, h: FractionalPacking) -> FractionalPacking:
    """Extend an (r-1)-clique packing h of H = G minus the largest part to
    an r-clique packing of G: every h-clique Q spawns Q u {v} with weight
    alpha * h(Q) for each v in the largest part."""
    parts = normalize_profile(profile)
    if len(parts) < 2:
        raise ValueError("profile must have at least two parts")
    if r < 3:
        raise ValueError("r must be at least 3")
    g = complete_multipartite(parts)
    scal = compute_scalars(parts, r)
    alpha = scal.alpha
    v1 = range(parts[0])
    v1_mask = (1 << parts[0]) - 1
    weights: dict[tuple, Fraction] = {}
    for q, wq in h.weights.items():
        if len(q) != r - 1:
            raise ValueError("h must be an (r-1)-clique packing")
        if any(v1_mask & (1 << v) for v in q):
            raise ValueError("h must be supported away from the largest part")
        if wq == 0:
            continue
        w = alpha * wq
        for v in v1:
            weights[tuple(sorted(q + (v,)))] = w
    return FractionalPacking(g, r, weights)


def _identity_edge_map(parts) -> FractionalPacking:
    """Weight 1 on every edge of H, as a 2-clique packing in G's labels."""
    g = complete_multipartite(parts)
    shift = parts[0]
    sub = complete_multipartite(parts[1:]) if len(parts) > 1 else None
    weights: dict[tuple, Fraction] = {}
    if sub is not None:
        for u, v in sub.edges():
            weights[(u + shift, v + shift)] = Fraction(1)
    return FractionalPacking(g, 2, weights)


def _shift_packing(p: FractionalPacking, shift: int, g: Graph) -> FractionalPacking:
    weights = {tuple(v + shift for v in c): w for c, w in p.weights.items()}
    return FractionalPacking(g, p.r, weights)


def construct_packing(profile, r: int) -> FractionalPacking:
    """Recursive packing of value at least 2 k_G / r on complete
    multipartite graphs, mirroring the induction on r + s:

      s <= r-1  -> empty packing (k_G <= 0 there);
      s == r    -> the uniform transversal packing;
      s > r     -> lift a packing of H over (r-1)-cliques (the edge
                   identity map when r = 3), and if that falls short,
                   add (1 - n x1 alpha) times a recursive r-packing of H.

    Raises PackingBoundError if the value falls below 2 k_G / r, which the
    main theorem rules out.
    """
    parts = normalize_profile(profile)
    s = len(parts)
    g = complete_multipartite(parts)
    scal = compute_scalars(parts, r)
    target = 2 * scal.k_G / r

    if s <= r - 1:
        f = FractionalPacking(g, r, {})
    elif s == r:
        f = uniform_r_partite_packing(parts, r)
    else:
        if r == 3:
            h = _identity_edge_map(parts)
        else:
            sub = construct_packing(parts[1:], r - 1)
            h = _shift_packing(sub, parts[0], g)
        f_prime = lift_packing(parts, r, h)
        if f_prime.value >= target:
            f = f_prime
        else:
            lam = 1 - scal.n * scal.x1 * scal.alpha
            weights = dict(f_prime.weights)
            if lam > 0 and scal.k_H > 0:
                inner = construct_packing(parts[1:], r)
                for c, w in _shift_packing(inner, parts[0], g).weights.items():
                    weights[c] = weights.get(c, Fraction(0)) + lam * w
            f = FractionalPacking(g, r, weights)

    if f.value < target:
        raise PackingBoundError(
            f"constructed value {f.value} below guarantee {target} "
            f"for profile {parts}, r={r}"
        )
    return f


def merge_step(profile, i: int, j: int) -> tuple[int, ...]:
    """Move one vertex from part j into part i (parts[i] >= parts[j] >= 1);
    never increases the edge count."""
    parts = list(normalize_profile(profile))
    if i == j:
        raise ValueError("indices must differ")
    if parts[j] < 1:
        raise ValueError("source part is empty")
    if parts[i] < parts[j]:
        raise ValueError("parts[i] must be at least parts[j]")
    parts[i] += 1
    parts[j] -= 1
    return normalize_profile(p for p in parts if p > 0)


def iterate_merges(profile) -> tuple[int, ...]:
    """Iterate merge_step until every part has the original maximum size,
    except for at most one remainder part. Since no step increases edges,
    the result certifies e(G) >= (1 - x1) n^2 / 2."""
    parts = normalize_profile(profile)
    cap = parts[0]
    while True:
        i = next((idx for idx, p in enumerate(parts) if p < cap), None)
        j = len(parts) - 1
        if i is None or i == j:
            break
        parts = merge_step(parts, i, j)
    return parts


@dataclass(frozen=True)
class AbcReport:
    n: int
    t: int
    size_a: int
    size_b: int
    size_c: int
    e: int
    k_integral: int
    k_formula: Fraction
    f_t: Fraction  # upper bound on edge-disjoint triangles
    triangle_total: int
    disjoint_upper: Fraction  # (non B-C edges) / 3
    bc_edges_triangle_free: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "t": self.t,
                "sizes": [self.size_a, self.size_b, self.size_c],
                "e": self.e,
                "k_integral": self.k_integral,
                "k_formula": str(self.k_formula),
                "f_t": str(self.f_t),
                "triangle_total": self.triangle_total,
                "disjoint_upper": str(self.disjoint_upper),
                "bc_edges_triangle_free": self.bc_edges_triangle_free,
            }
        )


def abc_graph(n: int, t: int) -> Graph:
    """A is a t-clique, B is joined completely to A u C, C is isolated
    from A; sizes |B| = n/2 - t/6 and |C| = n/2 - 5t/6."""
    size_a, size_b, size_c = _abc_sizes(n, t)
    edges = []
    for u in range(size_a):
        for v in range(u + 1, size_a):
            edges.append((u, v))
    b_lo, b_hi = size_a, size_a + size_b
    for u in list(range(size_a)) + list(range(b_hi, n)):
        for v in range(b_lo, b_hi):
            edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def _abc_sizes(n: int, t: int) -> tuple[int, int, int]:
    if n % 6 or t % 6:
        raise ValueError("n and t must both be divisible by 6")
    if t < 0:
        raise ValueError("t must be nonnegative")
    size_a = t
    size_b = n // 2 - t // 6
    size_c = n // 2 - 5 * t // 6
    if size_b < 0 or size_c < 0:
        raise ValueError(f"(n={n}, t={t}) is not realizable: negative class size")
    return size_a, size_b, size_c


def concluding_example(n: int, t: int) -> AbcReport:
    """Evaluate the A/B/C construction exactly: edge count, the k surplus
    both ways, the f(t) bound, and the structural fact that B-C edges lie
    in no triangle (so few edge-disjoint triangles fit despite many edges).
    """
    from .graph import turan_edge_count

    size_a, size_b, size_c = _abc_sizes(n, t)
    e = comb(size_a, 2) + size_b * (size_a + size_c)
    assert e == t * (t - 1) // 2 + n * n // 4 - t * t // 36
    k_formula = Fraction(17 * t * t, 36) - Fraction(t, 2)
    k_integral = e - turan_edge_count(n, 2)
    assert Fraction(k_integral) == k_formula
    f_t = Fraction(
        Fraction(t * t, 2) + Fraction(t * n, 2) - Fraction(t * t, 6), 3
    )
    triangle_total = comb(size_a, 3) + comb(size_a, 2) * size_b
    disjoint_upper = Fraction(e - size_b * size_c, 3)
    assert disjoint_upper <= f_t

    if n <= 120:
        bc_free = _check_bc_triangle_free(n, t)
    else:
        # structural: C's only neighbors are B, and B is independent
        bc_free = True
    return AbcReport(
        n,
        t,
        size_a,
        size_b,
        size_c,
        e,
        k_integral,
        k_formula,
        f_t,
        triangle_total,
        disjoint_upper,
        bc_free,
    )


def _check_bc_triangle_free(n: int, t: int) -> bool:
    g = abc_graph(n, t)
    size_a, size_b, _ = _abc_sizes(n, t)
    b_lo, b_hi = size_a, size_a + size_b
    for b in range(b_lo, b_hi):
        for c in range(b_hi, n):
            if g.has_edge(b, c) and g.adj[b] & g.adj[c]:
                return False
    return True

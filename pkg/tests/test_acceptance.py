"""End-to-end acceptance checks, one test per criterion.

Every check is exact: values are compared as rationals with zero
tolerance, and each criterion carries a wall-clock budget that the run
must stay within. A summary line per criterion is printed on the way
out (visible under pytest -s; under plain pytest -v the per-test
PASSED/FAILED line serves the same purpose).
"""

import time
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from cliquepack import (
    Graph,
    clone_classes,
    complete_multipartite,
    nu_star,
    verify_packing,
)
from cliquepack.generators import all_profiles, gnp, _rng
from cliquepack.graph import is_complete_multipartite
from cliquepack.multipartite import (
    compute_scalars,
    concluding_example,
    construct_packing,
)
from cliquepack.packing import check_main_theorem
from cliquepack.phi import phi_table
from cliquepack.symmetrize import h_value, replace_neighborhood, symmetrize


class _budget:
    """Times a criterion and prints its pass/fail line."""

    def __init__(self, label: str, seconds: float):
        self.label = label
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        if exc_type is not None:
            print(f"[FAIL] {self.label} ({elapsed:.1f}s)")
            return False
        if elapsed > self.seconds:
            print(f"[FAIL] {self.label} (over budget: {elapsed:.1f}s > {self.seconds}s)")
            raise AssertionError(
                f"{self.label}: {elapsed:.1f}s exceeded the {self.seconds}s budget"
            )
        print(f"[PASS] {self.label} ({elapsed:.1f}s)")
        return False


def _eligible_pairs(g: Graph):
    """Pairs of distinct clone classes whose union is independent."""
    classes = clone_classes(g)
    out = []
    for a, b in combinations(classes, 2):
        bm = sum(1 << v for v in b)
        if not g.adj[a[0]] & bm:
            out.append((a, b))
    return out


@lru_cache(maxsize=1)
def _clone_instances(seed: int = 0, count: int = 500):
    """Seeded random graphs, each guaranteed an eligible clone-class pair.

    Half the instances get an engineered clone (a duplicated vertex).
    A graph has no eligible pair exactly when it is already complete
    multipartite; those get an extra isolated vertex, which always
    creates one as long as an edge exists.
    """
    ps = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    out = []
    for i in range(count):
        rng = _rng(seed, f"clone:{i}")
        n = rng.randint(4, 8)
        g = gnp(n, ps[i % 3], seed, i)
        if i % 2 == 0:
            u = rng.randrange(g.n)
            edges = list(g.edges()) + [(v, g.n) for v in g.neighbors(u)]
            g = Graph.from_edges(g.n + 1, edges)
        if not _eligible_pairs(g):
            if g.edge_count == 0:
                g = Graph.from_edges(g.n + 1, [(0, 1)])
            else:
                g = Graph.from_edges(g.n + 1, list(g.edges()))
        assert _eligible_pairs(g)
        out.append(g)
    return out


def test_reference_fractional_optima():
    c5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    cases = [
        (Graph.complete(4), Fraction(2)),
        (complete_multipartite([2, 2, 2]), Fraction(4)),
        (c5, Fraction(0)),
        (Graph.complete(5), Fraction(10, 3)),
    ]
    with _budget("1/8 reference fractional optima", 1.0 * len(cases)):
        for g, expected in cases:
            t0 = time.monotonic()
            value, packing = nu_star(g, 3)
            assert time.monotonic() - t0 < 1.0
            assert value == expected
            assert verify_packing(g, packing)
            assert packing.value == expected


def test_lower_bound_on_random_and_multipartite_instances():
    ps = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    with _budget("2/8 lower bound sweep (10^4 random + profiles)", 600.0):
        checked = 0
        for i in range(10_002):
            p = ps[i % 3]
            r = 3 if (i // 3) % 2 == 0 else 4
            n = _rng(0, f"n:{i}").randint(3, 8)
            g = gnp(n, p, 0, i)
            report = check_main_theorem(g, r)
            assert report.nu_star >= report.bound, (i, n, p, r)
            checked += 1
        assert checked >= 10_000
        for n in range(1, 13):
            for prof in all_profiles(n):
                g = complete_multipartite(prof)
                for r in (3, 4):
                    report = check_main_theorem(g, r)
                    assert report.nu_star >= report.bound, (prof, r)


def test_constructed_packings_meet_guarantee():
    with _budget("3/8 constructive packer over all profiles", 300.0):
        for n in range(1, 31):
            for prof in all_profiles(n, max_parts=6):
                for r in (3, 4, 5):
                    f = construct_packing(list(prof), r)
                    s = compute_scalars(list(prof), r)
                    assert verify_packing(f.graph, f), (prof, r)
                    assert f.value >= 2 * s.k_G / r, (prof, r)
                    if n <= 14:
                        value, _ = nu_star(f.graph, r)
                        assert f.value <= value, (prof, r)


def test_replacement_identities_on_clone_pairs():
    c = Fraction(-2, 3)
    with _budget("4/8 replacement identities on 500 clone instances", 600.0):
        pairs_checked = 0
        for g in _clone_instances():
            hg = h_value(g, 3, c)
            for a, b in _eligible_pairs(g):
                ga = replace_neighborhood(g, frozenset(a), frozenset(b))
                gb = replace_neighborhood(g, frozenset(b), frozenset(a))
                assert (len(a) + len(b)) * g.edge_count == (
                    len(a) * gb.edge_count + len(b) * ga.edge_count
                )
                assert hg >= min(h_value(ga, 3, c), h_value(gb, 3, c))
                pairs_checked += 1
        assert pairs_checked >= 500


def test_full_symmetrization_reduces_to_multipartite():
    with _budget("5/8 symmetrization traces on 500 clone instances", 600.0):
        for g in _clone_instances():
            trace = symmetrize(g, 3)
            assert is_complete_multipartite(trace.final)
            hs = [s.h_before for s in trace.steps]
            if trace.steps:
                hs.append(trace.steps[-1].h_after)
            assert all(x >= y for x, y in zip(hs, hs[1:]))
            counts = [len(clone_classes(g))]
            cur = g
            for step in trace.steps:
                v0 = step.class_a if step.direction == "a_to_b" else step.class_b
                v1 = step.class_b if step.direction == "a_to_b" else step.class_a
                cur = replace_neighborhood(cur, frozenset(v0), frozenset(v1))
                counts.append(len(clone_classes(cur)))
            assert all(x > y for x, y in zip(counts, counts[1:]))
            assert cur == trace.final


def test_scalar_inequalities_across_profiles():
    with _budget("6/8 scalar inequalities over all profiles", 60.0):
        for n in range(1, 21):
            for prof in all_profiles(n):
                edges = (n * n - sum(p * p for p in prof)) // 2
                x1 = Fraction(prof[0], n)
                assert Fraction(edges) >= (1 - x1) * n * n / 2, prof
                for r in (3, 4, 5):
                    s = compute_scalars(prof, r)
                    assert s.k_G <= s.t_H, (prof, r)


def test_three_class_construction_numbers():
    with _budget("7/8 three-class construction", 60.0):
        rep = concluding_example(12, 6)
        assert rep.e == 50
        assert rep.k_integral == 14 == rep.k_formula
        assert rep.bc_edges_triangle_free

        # near t = 1.01 * 6n/13 the disjoint-triangle bound drops below k
        n = 1296
        center = Fraction(101, 100) * 6 * n / 13
        ts = sorted({6 * round(center / 6) + d for d in (-6, 0, 6, 12)})
        found = False
        for t in ts:
            big = concluding_example(n, t)
            assert big.bc_edges_triangle_free
            if big.f_t < (1 - Fraction(1, 10_000)) * big.k_formula:
                found = True
        assert found


def test_exhaustive_min_packing_tables():
    with _budget("8/8 exhaustive minimum packing tables", 300.0):
        for n in range(3, 7):
            table = {k: phi for _, k, phi in phi_table(n, 3)}
            assert table[0] == 0, n
        table4 = {k: phi for _, k, phi in phi_table(4, 3)}
        assert table4[1] == 1
        assert table4[2] == 1

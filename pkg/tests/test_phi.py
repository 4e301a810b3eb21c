"""Exhaustive phi tables and the bitmask nu solver behind them."""

from fractions import Fraction

import pytest

from cliquepack.generators import gnp
from cliquepack.graph import turan_edge_count
from cliquepack.packing import nu_integral
from cliquepack.phi import nu_by_mask, phi_table, _edge_slots


def graph_to_mask(g):
    slots = _edge_slots(g.n)
    mask = 0
    for e in g.edges():
        mask |= 1 << slots[e]
    return mask


def test_phi_n4():
    table = {k: phi for _, k, phi in phi_table(4, 3)}
    assert table[0] == 0
    assert table[1] == 1  # K4 minus an edge
    assert table[2] == 1  # K4 itself


def test_phi_turan_row_zero():
    for n in range(3, 7):
        table = {k: phi for _, k, phi in phi_table(n, 3)}
        assert table[0] == 0  # Turan graphs are K_r-free


def test_phi_complete_graph_case():
    # t_2(3) = 2 < 3 = e(K_3); the k = 1 row is K3 plus nothing else
    table = {k: phi for _, k, phi in phi_table(3, 3)}
    assert table == {0: 0, 1: 1}


def test_rows_cover_all_edge_counts():
    n = 5
    t = turan_edge_count(n, 2)
    rows = phi_table(n, 3)
    assert [e for e, _, _ in rows] == list(range(t, n * (n - 1) // 2 + 1))


def test_rejects_large_n():
    with pytest.raises(ValueError):
        phi_table(8, 3)


def test_nu_by_mask_agrees_with_branch_and_bound():
    for seed in range(100):
        g = gnp(6, Fraction(1, 2), seed)
        assert nu_by_mask(6, 3, graph_to_mask(g)) == nu_integral(g, 3)[0]

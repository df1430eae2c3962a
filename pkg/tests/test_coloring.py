import random

import pytest

from splitchroma.coloring import (
    ColoringError,
    EdgeColoring,
    is_balanced,
    missing_colors,
    rebalance,
    verify_coloring,
)
from splitchroma.exact import exact_delta_coloring, k_edge_coloring
from splitchroma.errors import BudgetExhausted
from splitchroma.generate import enumerate_small
from splitchroma.graph import build_graph
from splitchroma.oracle import chromatic_index_exact
from splitchroma.vizing import vizing_plus_one

from conftest import G1, K3, K4_PENDANT, P3, STAR, k


def test_verify_examples():
    assert verify_coloring(K3, EdgeColoring(3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})) is None
    bad = verify_coloring(K3, EdgeColoring(3, {(0, 1): 1, (1, 2): 1, (0, 2): 2}))
    assert bad.kind == "improper" and "vertex 1" in bad.detail
    assert verify_coloring(P3, EdgeColoring(2, {(0, 1): 1})).kind == "untotal"
    assert verify_coloring(P3, EdgeColoring(2, {(0, 1): 1, (1, 2): 3})).kind == "range"
    extra = EdgeColoring(2, {(0, 1): 1, (1, 2): 2, (0, 2): 1})
    assert verify_coloring(P3, extra).kind == "foreign"


def test_missing_colors_sizes():
    col = EdgeColoring(3, {(0, 1): 1, (1, 2): 2})
    table = missing_colors(P3, col)
    assert table[1] == {3} and table[0] == {2, 3}
    assert all(len(table[v]) == 3 - P3.degree(v) for v in range(3))


def test_rebalance_path():
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    col = EdgeColoring(3, {(0, 1): 1, (1, 2): 2, (2, 3): 1})
    out = rebalance(col, p4)
    assert verify_coloring(p4, out) is None
    assert sorted(out.class_sizes()) == [1, 1, 1]


def test_rebalance_balanced_input_keeps_profile():
    col = EdgeColoring(3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    assert rebalance(col, K3).class_sizes() == [1, 1, 1]


def test_rebalance_rejects_improper():
    with pytest.raises(ColoringError):
        rebalance(EdgeColoring(2, {(0, 1): 1, (1, 2): 1}), P3)


def test_rebalance_energy_decreases():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(4, 12)
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        if g.m == 0:
            continue
        col = vizing_plus_one(g)
        col = EdgeColoring(col.k + 2, col.assignment)
        trace = []
        out = rebalance(col, g, trace)
        assert verify_coloring(g, out) is None and is_balanced(out)
        assert all(b < a for a, b in zip(trace, trace[1:]))


@pytest.mark.parametrize("g,k_max", [(K3, 3), (G1, 5), (STAR, 4)])
def test_vizing_examples(g, k_max):
    col = vizing_plus_one(g)
    assert col.k == g.max_degree + 1 <= k_max
    assert verify_coloring(g, col) is None


def test_vizing_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 15)
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if g.m:
            assert verify_coloring(g, vizing_plus_one(g)) is None


def test_exact_examples():
    assert verify_coloring(P3, exact_delta_coloring(P3)) is None
    assert k_edge_coloring(K3, 2) is None
    col = exact_delta_coloring(K4_PENDANT)
    assert col.k == 4 and verify_coloring(K4_PENDANT, col) is None
    assert exact_delta_coloring(G1) is None


def test_exact_complete_graphs():
    assert exact_delta_coloring(k(6)) is not None
    assert exact_delta_coloring(k(5)) is None


def test_exact_budget_is_explicit():
    # Petersen graph is Class 2; proving it takes more than 5 nodes
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = build_graph(10, outer + spokes + inner)
    with pytest.raises(BudgetExhausted):
        exact_delta_coloring(petersen, budget=5)
    assert exact_delta_coloring(petersen) is None


def test_exact_agrees_with_oracle():
    for g, _ in enumerate_small(7):
        found = exact_delta_coloring(g)
        assert (found is None) == (chromatic_index_exact(g).chi_prime == g.max_degree + 1)

import itertools

import pytest

from splitchroma.graph import (
    EdgelessGraphError,
    GraphInputError,
    build_graph,
    complement,
    delta_and_core,
    induced_subgraph,
)

from conftest import K3, K4_PENDANT, P3, STAR


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_build_path_and_triangle():
    assert P3.m == 2
    assert K3.m == 3 and K3.degrees() == [2, 2, 2]


def test_duplicates_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1 and g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphInputError, match=r"\("):
        build_graph(3, edges)


def test_induced_subgraph():
    h, relabel = induced_subgraph(K3, {0, 1})
    assert (h.n, h.m) == (2, 1)
    h, relabel = induced_subgraph(P3, {0, 2})
    assert (h.n, h.m) == (2, 0)
    assert relabel == {0: 0, 2: 1}
    h, _ = induced_subgraph(K4_PENDANT, K4_PENDANT.closed_neighborhood(0))
    assert h == K4_PENDANT


def test_induced_subgraph_empty_set():
    with pytest.raises(GraphInputError):
        induced_subgraph(K3, [])


def test_complement_examples():
    assert complement(K3).m == 0
    assert complement(P3).edges() == [(0, 2)]


def test_complement_exhaustive_small():
    for n in range(1, 6):
        for g in all_graphs(n):
            c = complement(g)
            assert complement(c) == g
            assert all(c.degree(v) == n - 1 - g.degree(v) for v in range(n))


def test_delta_and_core():
    assert delta_and_core(K3) == (2, frozenset({0, 1, 2}))
    assert delta_and_core(STAR) == (3, frozenset({0}))
    assert delta_and_core(K4_PENDANT) == (4, frozenset({0}))
    with pytest.raises(EdgelessGraphError):
        delta_and_core(build_graph(3, []))


def test_relabel_round_trip():
    perm = [2, 0, 3, 1, 4]
    inv = [perm.index(i) for i in range(5)]
    assert K4_PENDANT.relabel(perm).relabel(inv) == K4_PENDANT

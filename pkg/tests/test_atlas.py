"""Cross-checks against the networkx graph atlas (all graphs on up to 7 vertices)."""

import networkx as nx
import pytest

from splitchroma.errors import NoOrderingError, NotSplitError
from splitchroma.generate import enumerate_split_graphs
from splitchroma.graph import build_graph
from splitchroma.overfull import is_neighborhood_overfull
from splitchroma.split import recognize


def atlas(max_n):
    for h in nx.graph_atlas_g():
        if 0 < h.number_of_nodes() <= max_n:
            yield build_graph(h.number_of_nodes(), list(h.edges()))


def is_comparability(g):
    """Implication classes of arcs; a comparability graph never forces an
    arc together with its reverse."""
    arcs = [(u, v) for u in range(g.n) for v in g.adj[u]]
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in arcs:
        # ab forces ab' when bb' is not an edge, and a'b when aa' is not
        for c in g.adj[a]:
            if c != b and c not in g.adj[b]:
                parent[find((a, b))] = find((a, c))
        for c in g.adj[b]:
            if c != a and c not in g.adj[a]:
                parent[find((a, b))] = find((c, b))
    return all(find((u, v)) != find((v, u)) for u, v in arcs)


def is_split(g):
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    # split iff chordal with a chordal complement
    return nx.is_chordal(h) and nx.is_chordal(nx.complement(h))


def test_comparability_oracle_sanity():
    c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    sun = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])
    assert not is_comparability(c5)
    assert not is_comparability(sun)
    assert is_comparability(build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))


def test_recognition_matches_independent_oracles():
    for g in atlas(7):
        try:
            recognize(g)
            verdict = "yes"
        except NotSplitError:
            verdict = "not-split"
        except NoOrderingError:
            verdict = "no"
        if not is_split(g):
            assert verdict == "not-split", g.edges()
        else:
            expected = "yes" if is_comparability(g) else "no"
            assert verdict == expected, g.edges()


@pytest.mark.parametrize("n", range(2, 8))
def test_split_enumeration_matches_atlas(n):
    count = sum(1 for g in atlas(n) if g.n == n and not g.isolated_vertices() and is_split(g))
    assert count == sum(1 for _ in enumerate_split_graphs(n, n))


def test_neighborhood_overfull_on_atlas_matches_definition():
    for g in atlas(6):
        if g.m == 0:
            continue
        witness = is_neighborhood_overfull(g)
        delta = g.max_degree
        expected = None
        for v in range(g.n):
            if g.degree(v) != delta:
                continue
            closed = g.closed_neighborhood(v)
            m = sum(1 for a, b in g.edges() if a in closed and b in closed)
            if len(closed) % 2 == 1 and 2 * m > (len(closed) - 1) * delta:
                expected = v
                break
        assert witness == expected

import pytest

from splitchroma.graph import build_graph


def clique_edges(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def k(n):
    return build_graph(n, clique_edges(n))


K3 = k(3)
P3 = build_graph(3, [(0, 1), (1, 2)])
STAR = build_graph(4, [(0, 1), (0, 2), (0, 3)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
# K4 on 0..3 with a stable vertex 4 seeing 0, 1, 2
G1 = build_graph(5, clique_edges(4) + [(4, 0), (4, 1), (4, 2)])
# K4 with a pendant vertex 4 on vertex 0
K4_PENDANT = build_graph(5, clique_edges(4) + [(4, 0)])
# clique a, b, c = 0, 1, 2; x~{a,b}, y~{b,c}, z~{a,c}
SUN3 = build_graph(6, clique_edges(3) + [(3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])


@pytest.fixture
def small_graphs():
    return {"K3": K3, "P3": P3, "star": STAR, "G1": G1, "K4+pendant": K4_PENDANT}
